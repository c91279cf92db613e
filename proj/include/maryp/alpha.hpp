#pragma once

// The basis-change integers alpha_{m,r}(i) defined by
//
//   C(m n + r - 1, r) = sum_{i=1}^{r} alpha_{m,r}(i) C(n + i - 1, i)   for all n.
//
// Two independent constructions: a row-by-row recurrence (alpha_table) and an
// exact rational linear solve of the defining identity at n = 1..r
// (alpha_oracle). They must agree; the solve doubles as a uniqueness and
// integrality check.

#include <maryp/bigint.hpp>
#include <maryp/mseq.hpp>
#include <maryp/report.hpp>

#include <string>
#include <vector>

namespace maryp {

struct AlphaTable {
    long m = 0;
    int r = 0;
    std::vector<Int> values;  // values[i-1] == alpha(i)

    const Int& alpha(int i) const { return values[static_cast<std::size_t>(i - 1)]; }
    bool operator==(const AlphaTable&) const = default;
};

// Row recurrence, starting from alpha_{m,1} = (m):
//   s * alpha_s(i) = m i alpha_{s-1}(i-1) - (m i - s + 1) alpha_{s-1}(i)
// with alpha_{s-1}(0) = 0 and alpha_{s-1}(i) = 0 for i > s-1. Every division
// by s must be exact; a remainder is an internal consistency failure.
inline AlphaTable alpha_table(long m, int r) {
    if (m < 2) throw std::invalid_argument("alpha_table: m must be >= 2");
    if (r < 1) throw std::invalid_argument("alpha_table: r must be >= 1");
    std::vector<Int> row = {Int(m)};
    for (int s = 2; s <= r; ++s) {
        auto prev = [&](int i) -> Int {
            if (i < 1 || i > s - 1) return 0;
            return row[static_cast<std::size_t>(i - 1)];
        };
        std::vector<Int> next(static_cast<std::size_t>(s));
        for (int i = 1; i <= s; ++i) {
            Int num = Int(m) * i * prev(i - 1) - (Int(m) * i - s + 1) * prev(i);
            next[static_cast<std::size_t>(i - 1)] = div_exact(num, Int(s));
        }
        row = std::move(next);
    }
    return AlphaTable{m, r, std::move(row)};
}

// Independent route: solve the r x r system given by the defining identity at
// n = 1..r over exact rationals, then check the solution is integral.
inline AlphaTable alpha_oracle(long m, int r) {
    if (m < 2) throw std::invalid_argument("alpha_oracle: m must be >= 2");
    if (r < 1) throw std::invalid_argument("alpha_oracle: r must be >= 1");
    std::size_t R = static_cast<std::size_t>(r);
    std::vector<std::vector<Rat>> A(R, std::vector<Rat>(R));
    std::vector<Rat> b(R);
    for (int n = 1; n <= r; ++n) {
        for (int i = 1; i <= r; ++i)
            A[n - 1][i - 1] = Rat(binomial(static_cast<unsigned long>(n + i - 1),
                                           static_cast<unsigned long>(i)));
        b[static_cast<std::size_t>(n - 1)] =
            Rat(binomial(static_cast<unsigned long>(m) * n + r - 1, static_cast<unsigned long>(r)));
    }
    for (std::size_t col = 0; col < R; ++col) {
        std::size_t piv = col;
        while (piv < R && A[piv][col] == 0) ++piv;
        if (piv == R) throw std::logic_error("alpha_oracle: singular system");
        std::swap(A[col], A[piv]);
        std::swap(b[col], b[piv]);
        for (std::size_t k = 0; k < R; ++k) {
            if (k == col || A[k][col] == 0) continue;
            Rat f = A[k][col] / A[col][col];
            for (std::size_t j = col; j < R; ++j) A[k][j] -= f * A[col][j];
            b[k] -= f * b[col];
        }
    }
    std::vector<Int> sol(R);
    for (std::size_t i = 0; i < R; ++i) {
        Rat v = b[i] / A[i][i];
        v.canonicalize();
        if (v.get_den() != 1)
            throw std::logic_error("alpha_oracle: non-integer solution at i=" + std::to_string(i + 1));
        sol[i] = v.get_num();
    }
    return AlphaTable{m, r, std::move(sol)};
}

// Checks mu(m i, r) | alpha_{m,r}(i) for every i (which subsumes the uniform
// divisor mu(m, r)). Sample n is the index i, arg the alpha value; each i is
// reduced modulo its own mu(m i, r), listed under params. The top-level
// modulus is the lcm of the per-sample divisors so residues stay below it.
inline CongruenceReport alpha_divisibility_report(long m, int r) {
    if (r < 2) throw std::invalid_argument("alpha_divisibility_report: r must be >= 2");
    AlphaTable t = alpha_table(m, r);
    CongruenceReport rep;
    rep.check = "alpha-divisibility";
    rep.params["m"] = m;
    rep.params["r"] = r;
    rep.params["uniform_modulus"] = mu(Int(m), Int(r)).get_str();
    Json moduli = Json::array();
    Int lcm_all = 1;
    for (int i = 1; i <= r; ++i) {
        Int mi = mu(Int(m) * i, Int(r));
        moduli.push_back(mi.get_str());
        lcm_all = lcm_int(lcm_all, mi);
        rep.add_sample_mod(i, t.alpha(i), t.alpha(i), mi);
    }
    rep.modulus = lcm_all;
    rep.params["sample_moduli"] = moduli;
    return rep;
}

}  // namespace maryp
