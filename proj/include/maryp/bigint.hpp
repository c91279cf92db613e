#pragma once

// Arbitrary-precision integer/rational aliases plus the handful of GMP
// wrappers the rest of the library needs.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace maryp {

using Int = mpz_class;
using Rat = mpq_class;

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int gcd_int(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int lcm_int(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Least nonnegative residue of a modulo m; requires m >= 1.
inline Int mod_floor(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline bool divides(const Int& d, const Int& a) {
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Division known to be exact; a remainder means internal state is corrupt.
inline Int div_exact(const Int& a, const Int& d) {
    if (!divides(d, a))
        throw std::logic_error("div_exact: " + a.get_str() + " not divisible by " + d.get_str());
    Int r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return r;
}

inline long to_long(const Int& a) {
    if (!a.fits_slong_p())
        throw std::overflow_error("value does not fit in a machine word: " + a.get_str());
    return a.get_si();
}

}  // namespace maryp
