#pragma once

// Counting partitions whose parts are the partial products M_r of a sequence
// M. Three independent routes are provided on purpose: a DP table, the
// generating-function product, and (for small n) explicit multiset
// enumeration; they must always agree.

#include <maryp/bigint.hpp>
#include <maryp/mseq.hpp>
#include <maryp/series.hpp>

#include <vector>

namespace maryp {

// Hard cap on DP table size; p_M above this is refused rather than swapped.
inline constexpr long kMaxDpIndex = 1L << 24;

inline constexpr long kBruteForceCap = 60;

struct PartList {
    std::vector<Int> parts;  // ascending, parts[0] == 1, each divides the next
};

// All partial products M_r <= limit. Finite since every m_i >= 2.
inline PartList parts_up_to(const MSequence& M, const Int& limit) {
    if (limit < 1) throw std::invalid_argument("parts_up_to: limit must be >= 1");
    PartList out;
    out.parts.push_back(1);
    Int p = 1;
    for (std::size_t j = 1; M.has_entry(j); ++j) {
        p *= M.entry(j);
        if (p > limit) break;
        out.parts.push_back(p);
    }
    return out;
}

// Full table p_M(0..n): the classic unbounded-parts DP, one pass per part.
inline std::vector<Int> count_pm_upto(const MSequence& M, long n) {
    if (n < 0) throw std::invalid_argument("count_pm_upto: n must be >= 0");
    if (n > kMaxDpIndex)
        throw OrderBudgetError("count_pm_upto: table size above hard cap", n);
    std::vector<Int> table(static_cast<std::size_t>(n) + 1);
    table[0] = 1;
    PartList parts = parts_up_to(M, Int(std::max(n, 1L)));
    for (const Int& part : parts.parts) {
        long p = to_long(part);
        for (long i = p; i <= n; ++i) table[i] += table[i - p];
    }
    return table;
}

// p_M(n); by convention 0 for n < 0 and 1 for n = 0.
inline Int count_pm(const MSequence& M, const Int& n) {
    if (n < 0) return 0;
    long nn = to_long(n);
    return count_pm_upto(M, nn)[static_cast<std::size_t>(nn)];
}

// F_M(q) = sum p_M(n) q^n = prod over parts P of 1/(1 - q^P), truncated.
inline TruncatedSeries pm_series(const MSequence& M, int order) {
    TruncatedSeries out = TruncatedSeries::constant(1, order);
    PartList parts = parts_up_to(M, Int(std::max(order, 1)));
    for (const Int& part : parts.parts) {
        long p = to_long(part);
        // multiply by 1/(1 - q^p) in place
        for (long i = p; i <= order; ++i)
            out.coeff(static_cast<int>(i)) += out[static_cast<int>(i - p)];
    }
    return out;
}

// Generating function of n -> p_M(m_1...m_r n - 1): the multisection chain
// U_{m_r} o ... o U_{m_1} applied to q F_M(q). Coefficient 0 is 0 by the
// p_M(-1) = 0 convention.
inline TruncatedSeries shifted_series(const MSequence& M, int r, int order) {
    if (r < 1) throw std::invalid_argument("shifted_series: r must be >= 1");
    long long base = order;
    for (int j = 1; j <= r; ++j) base *= M.entry(static_cast<std::size_t>(j));
    if (base >= kMaxSeriesOrder)
        throw OrderBudgetError("shifted_series: inflated order above cap", base);
    TruncatedSeries f = mul_q(pm_series(M, static_cast<int>(base)));
    for (int j = 1; j <= r; ++j) f = u_op(f, static_cast<int>(M.entry(static_cast<std::size_t>(j))));
    return f;
}

namespace detail {

inline Int brute_count_rec(const std::vector<Int>& parts, long n, std::size_t idx) {
    if (idx == 0) return 1;  // parts[0] == 1 fills whatever remains
    long p = to_long(parts[idx]);
    Int total = 0;
    for (long used = 0; used * p <= n; ++used)
        total += brute_count_rec(parts, n - used * p, idx - 1);
    return total;
}

}  // namespace detail

// Independent oracle: counts by explicit enumeration over part multisets.
// Exponential; refuses n above kBruteForceCap.
inline Int brute_force_count(const MSequence& M, long n) {
    if (n < 0) return 0;
    if (n > kBruteForceCap)
        throw std::invalid_argument("brute_force_count: n above enumeration cap " +
                                    std::to_string(kBruteForceCap));
    if (n == 0) return 1;
    PartList parts = parts_up_to(M, Int(n));
    return detail::brute_count_rec(parts.parts, n, parts.parts.size() - 1);
}

}  // namespace maryp
