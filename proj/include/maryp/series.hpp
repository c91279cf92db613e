#pragma once

// Truncated formal power series over arbitrary-precision integers.
//
// A series stores coefficients a(0..N) for an explicit order N. Binary
// operations truncate to the smaller operand order. Comparisons never assume
// equal orders: compare() reports the order it actually used, because a
// silently mismatched order is the classic way truncated-series code goes
// wrong.

#include <maryp/bigint.hpp>

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace maryp {

class NotInvertibleError : public std::runtime_error {
public:
    explicit NotInvertibleError(const std::string& what) : std::runtime_error(what) {}
};

class OrderBudgetError : public std::runtime_error {
public:
    OrderBudgetError(const std::string& what, long long required_order)
        : std::runtime_error(what + " (required base order " + std::to_string(required_order) + ")"),
          required_order_(required_order) {}
    long long required_order() const { return required_order_; }

private:
    long long required_order_;
};

// Largest coefficient count any single series may hold.
inline constexpr long long kMaxSeriesOrder = 1LL << 25;

class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : c_(check_order(order) + 1) {}

    static TruncatedSeries constant(const Int& a0, int order) {
        TruncatedSeries s(order);
        s.c_[0] = a0;
        return s;
    }

    static TruncatedSeries from_coeffs(std::vector<Int> coeffs) {
        if (coeffs.empty()) throw std::invalid_argument("series needs at least coefficient a(0)");
        TruncatedSeries s(static_cast<int>(coeffs.size()) - 1);
        s.c_ = std::move(coeffs);
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Int& operator[](int n) const { return c_[static_cast<std::size_t>(n)]; }
    Int& coeff(int n) { return c_[static_cast<std::size_t>(n)]; }
    const std::vector<Int>& coeffs() const { return c_; }

    TruncatedSeries truncated(int new_order) const {
        if (new_order >= order()) return *this;
        TruncatedSeries s(new_order);
        std::copy(c_.begin(), c_.begin() + new_order + 1, s.c_.begin());
        return s;
    }

private:
    static int check_order(int order) {
        if (order < 0) throw std::invalid_argument("series order must be >= 0");
        if (order >= kMaxSeriesOrder)
            throw OrderBudgetError("series order above hard cap", order);
        return order;
    }

    std::vector<Int> c_;
};

struct SeriesComparison {
    int order_used = 0;
    int first_mismatch = -1;  // -1: equal through order_used
    bool equal() const { return first_mismatch < 0; }
};

inline SeriesComparison compare(const TruncatedSeries& f, const TruncatedSeries& g) {
    SeriesComparison cmp;
    cmp.order_used = std::min(f.order(), g.order());
    for (int n = 0; n <= cmp.order_used; ++n)
        if (f[n] != g[n]) {
            cmp.first_mismatch = n;
            break;
        }
    return cmp;
}

inline TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g) {
    TruncatedSeries out(std::min(f.order(), g.order()));
    for (int n = 0; n <= out.order(); ++n) out.coeff(n) = f[n] + g[n];
    return out;
}

inline TruncatedSeries sub(const TruncatedSeries& f, const TruncatedSeries& g) {
    TruncatedSeries out(std::min(f.order(), g.order()));
    for (int n = 0; n <= out.order(); ++n) out.coeff(n) = f[n] - g[n];
    return out;
}

inline TruncatedSeries scale(const Int& a, const TruncatedSeries& f) {
    TruncatedSeries out(f.order());
    for (int n = 0; n <= out.order(); ++n) out.coeff(n) = a * f[n];
    return out;
}

// Cauchy product, truncated to the smaller order.
inline TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g) {
    TruncatedSeries out(std::min(f.order(), g.order()));
    int N = out.order();
    for (int i = 0; i <= N; ++i) {
        if (f[i] == 0) continue;
        for (int j = 0; i + j <= N; ++j) {
            if (g[j] == 0) continue;
            out.coeff(i + j) += f[i] * g[j];
        }
    }
    return out;
}

// Reciprocal of a unit series via the standard linear recurrence.
inline TruncatedSeries inverse(const TruncatedSeries& f) {
    const Int& a0 = f[0];
    if (a0 != 1 && a0 != -1)
        throw NotInvertibleError("constant term " + a0.get_str() + " is not a unit");
    TruncatedSeries out(f.order());
    out.coeff(0) = a0;  // 1/(+-1) == +-1
    for (int n = 1; n <= f.order(); ++n) {
        Int acc = 0;
        for (int k = 1; k <= n; ++k)
            if (f[k] != 0) acc += f[k] * out[n - k];
        out.coeff(n) = -a0 * acc;
    }
    return out;
}

// f(q) / (1 - q): running prefix sums. Kept separate from mul/inverse so the
// deep operator chains stay linear-time.
inline TruncatedSeries prefix_sums(const TruncatedSeries& f) {
    TruncatedSeries out(f.order());
    Int acc = 0;
    for (int n = 0; n <= f.order(); ++n) {
        acc += f[n];
        out.coeff(n) = acc;
    }
    return out;
}

// q * f(q); the old a(N) falls off the end.
inline TruncatedSeries mul_q(const TruncatedSeries& f) {
    TruncatedSeries out(f.order());
    for (int n = 1; n <= f.order(); ++n) out.coeff(n) = f[n - 1];
    return out;
}

// h_r(q) = q / (1-q)^{r+1}: coefficient C(n-1+r, r) at n >= 1, 0 at n = 0.
inline TruncatedSeries h_series(int r, int order) {
    if (r < 0) throw std::invalid_argument("h_series: r must be >= 0");
    TruncatedSeries out(order);
    for (int n = 1; n <= order; ++n)
        out.coeff(n) = binomial(static_cast<unsigned long>(n - 1 + r), static_cast<unsigned long>(r));
    return out;
}

// g(q) = f(q^m), truncated to order(f).
inline TruncatedSeries subst_power(const TruncatedSeries& f, int m) {
    if (m < 2) throw std::invalid_argument("subst_power: m must be >= 2");
    TruncatedSeries out(f.order());
    for (int n = 0; m * static_cast<long long>(n) <= f.order(); ++n)
        out.coeff(m * n) = f[n];
    return out;
}

// Multisection: picks every m-th coefficient, a(n) -> a(m n).
// The order shrinks to floor(N/m).
inline TruncatedSeries u_op(const TruncatedSeries& f, int m) {
    if (m < 2) throw std::invalid_argument("u_op: m must be >= 2");
    TruncatedSeries out(f.order() / m);
    for (int n = 0; n <= out.order(); ++n) out.coeff(n) = f[m * n];
    return out;
}

// Plain-text dump: one coefficient per line, index first.
inline void dump(const TruncatedSeries& f, std::ostream& os) {
    for (int n = 0; n <= f.order(); ++n) os << n << ' ' << f[n].get_str() << '\n';
}

}  // namespace maryp
