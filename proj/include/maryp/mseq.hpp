#pragma once

// The part-generating sequence M = (m_0 = 1, m_1, m_2, ...) together with the
// elementary arithmetic helpers used everywhere else: mu, calM, primorials,
// the factorial defect D_r and the congruence modulus of the main theorem.
//
// m_0 is implicit and never stored; explicit entries start at m_1 and must be
// >= 2. A tail policy says how the sequence continues past the stored
// entries:
//
//   finite     it does not; entry(j) beyond the list is an error
//   constant   entry(j) repeats the last stored entry forever
//   successor  entry(j) keeps incrementing: last, last+1, last+2, ...
//
// Sequence specs use a small textual language, round-tripped by
// parse_spec / print_spec:
//
//   const:m        one entry m, constant tail        const:2   -> 2,2,2,...
//   const:m,len    len copies of m, finite           const:2,5 -> 2,2,2,2,2
//   fact           sugar for list:2,tail=succ        parts are the factorials
//   list:a,b,c[,tail=const|succ]   explicit entries, default tail finite

#include <maryp/bigint.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace maryp {

class SequenceError : public std::runtime_error {
public:
    explicit SequenceError(const std::string& what) : std::runtime_error(what) {}
};

class SpecParseError : public std::runtime_error {
public:
    SpecParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

enum class Tail { finite, constant, successor };

class MSequence {
public:
    MSequence(std::vector<long> entries, Tail tail)
        : entries_(std::move(entries)), tail_(tail) {
        for (long m : entries_)
            if (m < 2) throw SequenceError("sequence entry " + std::to_string(m) + " is < 2");
        if (entries_.empty() && tail_ != Tail::finite)
            throw SequenceError("constant/successor tail needs at least one explicit entry");
    }

    static MSequence constant(long m) { return MSequence({m}, Tail::constant); }
    static MSequence factorial() { return MSequence({2}, Tail::successor); }

    static MSequence parse_spec(std::string_view spec);
    std::string print_spec() const;

    Tail tail() const { return tail_; }
    const std::vector<long>& explicit_entries() const { return entries_; }
    bool is_finite() const { return tail_ == Tail::finite; }

    // Number of defined entries, when finite.
    std::optional<std::size_t> length() const {
        if (is_finite()) return entries_.size();
        return std::nullopt;
    }

    bool has_entry(std::size_t j) const {
        return j >= 1 && (j <= entries_.size() || !is_finite());
    }

    // m_j for j >= 1.
    long entry(std::size_t j) const {
        if (j < 1) throw SequenceError("entry index must be >= 1");
        if (j <= entries_.size()) return entries_[j - 1];
        switch (tail_) {
            case Tail::constant:
                return entries_.back();
            case Tail::successor:
                return entries_.back() + static_cast<long>(j - entries_.size());
            case Tail::finite:
            default:
                throw SequenceError("finite sequence has no entry m_" + std::to_string(j) +
                                    " (only " + std::to_string(entries_.size()) + " entries)");
        }
    }

    // M_r = m_0 m_1 ... m_r; M_0 = 1.
    Int partial_product(std::size_t r) const {
        Int p = 1;
        for (std::size_t j = 1; j <= r; ++j) p *= entry(j);
        return p;
    }

    // The sequence (m_{r+1}, m_{r+2}, ...) with m_0 = 1 re-implied.
    MSequence drop_front(std::size_t r) const {
        if (r == 0) return *this;
        if (r < entries_.size()) {
            std::vector<long> rest(entries_.begin() + static_cast<long>(r), entries_.end());
            return MSequence(std::move(rest), tail_);
        }
        switch (tail_) {
            case Tail::finite:
                return MSequence({}, Tail::finite);
            case Tail::constant:
                return MSequence({entries_.back()}, Tail::constant);
            case Tail::successor:
            default:
                return MSequence({entry(r + 1)}, Tail::successor);
        }
    }

    bool operator==(const MSequence&) const = default;

private:
    std::vector<long> entries_;
    Tail tail_;
};

// ---------------------------------------------------------------------------
// Arithmetic helpers.

// mu(a, b) = a / gcd(a, b); always divides a.
inline Int mu(const Int& a, const Int& b) {
    return a / gcd_int(a, b);
}

inline Int lcm_upto(unsigned long r) {
    Int v = 1;
    for (unsigned long j = 2; j <= r; ++j) v = lcm_int(v, Int(j));
    return v;
}

// calM(m, r) = m / gcd(m, lcm(1..r)) = gcd{ mu(m, j) : j = 1..r }.
inline Int cal_m(const Int& m, unsigned long r) {
    return m / gcd_int(m, lcm_upto(r));
}

inline bool is_prime(unsigned long p) {
    if (p < 2) return false;
    for (unsigned long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Product of the primes <= j; empty product is 1.
inline Int primorial(unsigned long j) {
    Int v = 1;
    for (unsigned long p = 2; p <= j; ++p)
        if (is_prime(p)) v *= p;
    return v;
}

// D_r = prod over primes p <= r-2 of p^floor((r-2)/p); 1 for r < 3.
inline Int d_r(unsigned long r) {
    Int v = 1;
    if (r < 3) return v;
    unsigned long k = r - 2;
    for (unsigned long p = 2; p <= k; ++p)
        if (is_prime(p)) v *= pow_int(Int(p), k / p);
    return v;
}

// prod_{t=2}^{r} calM(m_t, t-1); empty product (r <= 1) is 1.
inline Int theorem_modulus(const MSequence& M, std::size_t r) {
    Int v = 1;
    for (std::size_t t = 2; t <= r; ++t) v *= cal_m(Int(M.entry(t)), static_cast<unsigned long>(t - 1));
    return v;
}

// ---------------------------------------------------------------------------
// Spec mini-language.

namespace detail {

inline long parse_number(std::string_view s, std::size_t& pos) {
    std::size_t start = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos == start) {
        std::string tok(s.substr(start, s.find(',', start) - start));
        throw SpecParseError("expected a number, found '" + tok + "'", start);
    }
    if (pos - start > 9) throw SpecParseError("number too large", start);
    long v = 0;
    for (std::size_t i = start; i < pos; ++i) v = v * 10 + (s[i] - '0');
    return v;
}

}  // namespace detail

inline MSequence MSequence::parse_spec(std::string_view spec) {
    using detail::parse_number;
    if (spec == "fact") return factorial();
    if (spec.rfind("const:", 0) == 0) {
        std::size_t pos = 6;
        long m = parse_number(spec, pos);
        if (m < 2) throw SpecParseError("constant entry must be >= 2", 6);
        if (pos == spec.size()) return MSequence({m}, Tail::constant);
        if (spec[pos] != ',') throw SpecParseError("expected ',' or end of spec", pos);
        ++pos;
        std::size_t len_pos = pos;
        long len = parse_number(spec, pos);
        if (pos != spec.size()) throw SpecParseError("trailing characters after length", pos);
        if (len < 1) throw SpecParseError("length must be >= 1", len_pos);
        return MSequence(std::vector<long>(static_cast<std::size_t>(len), m), Tail::finite);
    }
    if (spec.rfind("list:", 0) == 0) {
        std::size_t pos = 5;
        std::vector<long> entries;
        Tail tail = Tail::finite;
        // "list:" alone is the degenerate sequence whose only part is 1.
        while (pos < spec.size()) {
            if (spec.compare(pos, 5, "tail=") == 0) {
                if (entries.empty())
                    throw SpecParseError("tail requires at least one explicit entry", pos);
                pos += 5;
                std::string_view t = spec.substr(pos);
                if (t == "const") tail = Tail::constant;
                else if (t == "succ") tail = Tail::successor;
                else throw SpecParseError("tail must be 'const' or 'succ'", pos);
                pos = spec.size();
                break;
            }
            std::size_t num_pos = pos;
            long m = parse_number(spec, pos);
            if (m < 2) throw SpecParseError("list entry must be >= 2", num_pos);
            entries.push_back(m);
            if (pos == spec.size()) break;
            if (spec[pos] != ',') throw SpecParseError("expected ',' between entries", pos);
            ++pos;
        }
        return MSequence(std::move(entries), tail);
    }
    throw SpecParseError("unknown sequence spec '" + std::string(spec) +
                         "' (expected const:, list: or fact)", 0);
}

inline std::string MSequence::print_spec() const {
    const auto& e = entries_;
    if (e.empty()) return "list:";
    if (tail_ == Tail::successor && e.size() == 1 && e[0] == 2) return "fact";
    if (tail_ == Tail::constant && e.size() == 1) return "const:" + std::to_string(e[0]);
    bool all_equal = true;
    for (long m : e)
        if (m != e[0]) all_equal = false;
    if (tail_ == Tail::finite && all_equal)
        return "const:" + std::to_string(e[0]) + "," + std::to_string(e.size());
    std::string out = "list:";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(e[i]);
    }
    if (tail_ == Tail::constant) out += ",tail=const";
    if (tail_ == Tail::successor) out += ",tail=succ";
    return out;
}

}  // namespace maryp
