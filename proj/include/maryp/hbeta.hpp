#pragma once

// The series family
//
//   H_() = h_0,    H_(m_1,...,m_r) = U_{m_r}( H_(m_1,...,m_{r-1}) / (1-q) )
//
// and the integers beta expressing each member against the h basis:
//
//   H_(m_1..m_r) = m_1 m_2^2 ... m_r^r h_r
//                  - sum_{T proper tuple} beta_T(m_1..m_r) H_(sub(T)).
//
// The beta values here are the canonical ones produced by the recurrences
// below; the decomposition is not unique, and correctness means exactly that
// expansion_check passes. Sign convention: beta enters the expansion with a
// minus, so the recurrence accumulates negated alpha contributions.

#include <maryp/alpha.hpp>
#include <maryp/bigint.hpp>
#include <maryp/mseq.hpp>
#include <maryp/report.hpp>
#include <maryp/series.hpp>

#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace maryp {

// Order-aware memo for built H series, shared across calls that pass it.
class SeriesCache {
public:
    const TruncatedSeries* find(const std::vector<long>& ms, int min_order) const {
        auto it = map_.find(ms);
        if (it == map_.end() || it->second.order() < min_order) return nullptr;
        return &it->second;
    }

    void store(const std::vector<long>& ms, const TruncatedSeries& s) {
        auto it = map_.find(ms);
        if (it == map_.end())
            map_.emplace(ms, s);
        else if (it->second.order() < s.order())
            it->second = s;
    }

    std::size_t size() const { return map_.size(); }

private:
    std::map<std::vector<long>, TruncatedSeries> map_;
};

struct HSeries {
    std::vector<long> ms;
    long long base_order = 0;  // inflated order the chain started from
    TruncatedSeries series;
};

namespace detail {

inline TruncatedSeries build_h_rec(const std::vector<long>& ms, int order, SeriesCache* cache) {
    if (cache)
        if (const TruncatedSeries* hit = cache->find(ms, order)) return hit->truncated(order);
    TruncatedSeries out(0);
    if (ms.empty()) {
        out = TruncatedSeries(order);
        for (int n = 1; n <= order; ++n) out.coeff(n) = 1;  // h_0
    } else {
        long m_r = ms.back();
        std::vector<long> prefix(ms.begin(), ms.end() - 1);
        long long prev_order = static_cast<long long>(order) * m_r;
        if (prev_order >= kMaxSeriesOrder)
            throw OrderBudgetError("build_h: inflated order above cap", prev_order);
        TruncatedSeries prev = build_h_rec(prefix, static_cast<int>(prev_order), cache);
        out = u_op(prefix_sums(prev), static_cast<int>(m_r));
    }
    if (cache) cache->store(ms, out);
    return out;
}

}  // namespace detail

// H_(ms) truncated to the requested order. The chain is built at order
// inflated by prod(ms) so the final truncation is exact.
inline HSeries build_h(const std::vector<long>& ms, int order, SeriesCache* cache = nullptr) {
    long long base = order;
    for (long m : ms) {
        if (m < 2) throw std::invalid_argument("build_h: entries must be >= 2");
        base *= m;
        if (base >= kMaxSeriesOrder)
            throw OrderBudgetError("build_h: inflated order above cap", base);
    }
    return HSeries{ms, base, detail::build_h_rec(ms, order, cache)};
}

struct BetaMap {
    std::vector<long> ms;
    std::map<std::vector<int>, Int> entries;  // nonzero entries only

    Int at(const std::vector<int>& tuple) const {
        auto it = entries.find(tuple);
        return it == entries.end() ? Int(0) : it->second;
    }
};

namespace detail {

struct BetaCtx {
    std::map<std::pair<std::vector<long>, std::vector<int>>, Int> memo;
    std::map<std::pair<long, int>, AlphaTable> alphas;

    const AlphaTable& alpha_row(long m, int r) {
        auto key = std::make_pair(m, r);
        auto it = alphas.find(key);
        if (it == alphas.end()) it = alphas.emplace(key, alpha_table(m, r)).first;
        return it->second;
    }
};

// prod_{j=1}^{r-i-1} m_j^j * prod_{j=r-i}^{r-1} m_j^{r-i-1}
inline Int beta_weight(const std::vector<long>& ms, int i) {
    int r = static_cast<int>(ms.size());
    Int v = 1;
    for (int j = 1; j <= r - i - 1; ++j)
        v *= pow_int(Int(ms[static_cast<std::size_t>(j - 1)]), static_cast<unsigned long>(j));
    for (int j = r - i; j <= r - 1; ++j)
        v *= pow_int(Int(ms[static_cast<std::size_t>(j - 1)]), static_cast<unsigned long>(r - i - 1));
    return v;
}

inline Int beta_value(const std::vector<long>& ms, const std::vector<int>& tuple, BetaCtx& ctx) {
    int r = static_cast<int>(ms.size());
    int s = static_cast<int>(tuple.size());
    if (tuple.back() == r) {
        if (s == 1) return 0;
        std::vector<long> prefix(ms.begin(), ms.end() - 1);
        std::vector<int> head(tuple.begin(), tuple.end() - 1);
        return beta_value(prefix, head, ctx);
    }
    auto key = std::make_pair(ms, tuple);
    if (auto it = ctx.memo.find(key); it != ctx.memo.end()) return it->second;

    const AlphaTable& row = ctx.alpha_row(ms.back(), r);
    Int val = 0;
    bool block = true;  // tuple == (r-s, ..., r-1)?
    for (int k = 0; k < s; ++k)
        if (tuple[static_cast<std::size_t>(k)] != r - s + k) block = false;
    if (block) val -= beta_weight(ms, s) * row.alpha(s);
    for (int i = s + 1; i <= r - 1; ++i) {
        int shift = r - i - 1;  // tuple' = tuple - (r-i) + 1
        if (tuple.front() - shift < 1) continue;
        std::vector<int> shifted(tuple.size());
        for (int k = 0; k < s; ++k) shifted[static_cast<std::size_t>(k)] = tuple[static_cast<std::size_t>(k)] - shift;
        std::vector<long> sub(ms.begin() + (r - i - 1), ms.begin() + (r - 1));  // (m_{r-i}..m_{r-1})
        val -= beta_weight(ms, i) * row.alpha(i) * beta_value(sub, shifted, ctx);
    }
    ctx.memo.emplace(std::move(key), val);
    return val;
}

inline void for_each_tuple(int r, const std::function<void(const std::vector<int>&)>& fn) {
    for (int s = 1; s <= r - 1; ++s) {
        std::vector<int> tuple(static_cast<std::size_t>(s));
        for (int k = 0; k < s; ++k) tuple[static_cast<std::size_t>(k)] = k + 1;
        while (true) {
            fn(tuple);
            int k = s - 1;
            while (k >= 0 && tuple[static_cast<std::size_t>(k)] == r - s + 1 + k) --k;
            if (k < 0) break;
            ++tuple[static_cast<std::size_t>(k)];
            for (int j = k + 1; j < s; ++j)
                tuple[static_cast<std::size_t>(j)] = tuple[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
}

}  // namespace detail

// Canonical beta values for every index tuple of ms (zeros omitted).
inline BetaMap beta_map(const std::vector<long>& ms) {
    if (ms.empty()) throw std::invalid_argument("beta_map: ms must be nonempty");
    for (long m : ms)
        if (m < 2) throw std::invalid_argument("beta_map: entries must be >= 2");
    BetaMap out;
    out.ms = ms;
    detail::BetaCtx ctx;
    detail::for_each_tuple(static_cast<int>(ms.size()), [&](const std::vector<int>& tuple) {
        Int v = detail::beta_value(ms, tuple, ctx);
        if (v != 0) out.entries.emplace(tuple, std::move(v));
    });
    return out;
}

struct ExpansionReport {
    bool ok = false;
    int order = 0;
    int first_mismatch = -1;
};

// Rebuilds the right-hand side of the expansion from beta_map and the
// sub-H series and compares it against the directly built H_(ms).
inline ExpansionReport expansion_check(const std::vector<long>& ms, int order,
                                       SeriesCache* cache = nullptr) {
    int r = static_cast<int>(ms.size());
    TruncatedSeries lhs = build_h(ms, order, cache).series;
    Int lead = 1;
    for (int j = 1; j <= r; ++j)
        lead *= pow_int(Int(ms[static_cast<std::size_t>(j - 1)]), static_cast<unsigned long>(j));
    TruncatedSeries rhs = scale(lead, h_series(r, order));
    if (r >= 1)
        for (const auto& [tuple, value] : beta_map(ms).entries) {
            std::vector<long> picked;
            for (int t : tuple) picked.push_back(ms[static_cast<std::size_t>(t - 1)]);
            rhs = sub(rhs, scale(value, build_h(picked, order, cache).series));
        }
    SeriesComparison cmp = compare(lhs, rhs);
    return ExpansionReport{cmp.equal(), cmp.order_used, cmp.first_mismatch};
}

// beta_T == 0 mod prod of mu(m_t, t) over positions t outside T; for constant
// sequences additionally mod m^(r-s)/(m,2). Sample n is the tuple's index in
// enumeration order; tuples and per-tuple moduli are listed under params.
inline CongruenceReport beta_divisibility_report(const std::vector<long>& ms) {
    int r = static_cast<int>(ms.size());
    BetaMap bm = beta_map(ms);
    bool constant = true;
    for (long m : ms)
        if (m != ms[0]) constant = false;

    CongruenceReport rep;
    rep.check = "beta-divisibility";
    rep.params["ms"] = ms;
    rep.params["constant_sequence"] = constant;
    Json tuples = Json::array();
    Json moduli = Json::array();
    Int lcm_all = 1;
    long idx = 0;
    detail::for_each_tuple(r, [&](const std::vector<int>& tuple) {
        ++idx;
        Int mod = 1;
        for (int t = 1; t <= r; ++t) {
            bool in_tuple = false;
            for (int u : tuple)
                if (u == t) in_tuple = true;
            if (!in_tuple) mod *= mu(Int(ms[static_cast<std::size_t>(t - 1)]), Int(t));
        }
        if (constant) {
            int s = static_cast<int>(tuple.size());
            Int strengthened = pow_int(Int(ms[0]), static_cast<unsigned long>(r - s)) /
                               gcd_int(Int(ms[0]), Int(2));
            mod = lcm_int(mod, strengthened);
        }
        tuples.push_back(tuple);
        moduli.push_back(mod.get_str());
        lcm_all = lcm_int(lcm_all, mod);
        rep.add_sample_mod(idx, bm.at(tuple), bm.at(tuple), mod);
    });
    rep.modulus = lcm_all;
    rep.params["tuples"] = tuples;
    rep.params["sample_moduli"] = moduli;
    return rep;
}

// Every coefficient of H_(ms) up to the given order is divisible by
// prod_t calM(m_t, t).
inline CongruenceReport h_divisibility_report(const std::vector<long>& ms, int order,
                                              SeriesCache* cache = nullptr) {
    CongruenceReport rep;
    rep.check = "h-divisibility";
    rep.params["ms"] = ms;
    rep.params["order"] = order;
    Int mod = 1;
    for (int t = 1; t <= static_cast<int>(ms.size()); ++t)
        mod *= cal_m(Int(ms[static_cast<std::size_t>(t - 1)]), static_cast<unsigned long>(t));
    rep.modulus = mod;
    TruncatedSeries H = build_h(ms, order, cache).series;
    for (int n = 0; n <= order; ++n) rep.add_sample(n, H[n], H[n]);
    return rep;
}

}  // namespace maryp
