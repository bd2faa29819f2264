#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "degsplit/digraph.hpp"
#include "degsplit/pairing.hpp"
#include "degsplit/probability.hpp"
#include "degsplit/rational.hpp"
#include "degsplit/rng.hpp"

namespace degsplit {

/// Largest maximum in-degree admitted by the bounded-in-degree bisection
/// theorem at the given minimum out-degree: e^{eps^2 (delta - 1)} / (8 delta).
inline double admissible_max_indegree(double eps, int delta) {
    if (delta < 1) throw std::invalid_argument("admissible_max_indegree: delta must be >= 1");
    if (!(eps > 0.0 && eps < 0.5))
        throw std::invalid_argument("admissible_max_indegree: eps out of range");
    return std::exp(eps * eps * (static_cast<double>(delta) - 1.0)) /
           (8.0 * static_cast<double>(delta));
}

/// min{ delta : e^{-eps^2 (delta - 1)} < 1/4  and
///              e^{eps^2 (delta - 1)} / (8 delta) >= delta }.
/// Both conditions are monotone in delta (the second one over the region
/// where it can first become true), so doubling + binary search finds the
/// exact minimum.
inline std::uint64_t delta0_weighted_lll(double eps) {
    if (!(eps > 0.0 && eps < 0.5))
        throw std::invalid_argument("delta0_weighted_lll: eps out of range");
    auto ok = [&](std::uint64_t delta) {
        const double x = eps * eps * (static_cast<double>(delta) - 1.0);
        return x > std::log(4.0) && x >= std::log(8.0 * static_cast<double>(delta) *
                                                  static_cast<double>(delta));
    };
    std::uint64_t hi = 2;
    while (!ok(hi)) {
        if (hi > (std::uint64_t{1} << 60))
            throw std::overflow_error("delta0_weighted_lll: threshold exceeds 2^60");
        hi *= 2;
    }
    std::uint64_t lo = 2;
    while (lo < hi) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (ok(mid))
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

/// Weighted-local-lemma bookkeeping for a digraph at a given eps:
/// base probability p = e^{-eps^2 (delta - 1)}, per-vertex weights
/// t_v = d+(v) / delta, dependency bounds |D(v)| <= 2 d+(v) Delta^-, and the
/// per-vertex thresholds s_v.
struct lll_params {
    double p = 0.0;
    std::vector<rational> weights;
    std::vector<std::int64_t> dep_bound;
    std::vector<int> s;
};

inline lll_params make_lll_params(const digraph& d, const rational& eps) {
    if (d.vertex_count() == 0) throw std::invalid_argument("make_lll_params: empty digraph");
    const int delta = d.min_out_degree();
    if (delta < 1) throw std::invalid_argument("make_lll_params: requires delta^+ >= 1");
    const int max_in = d.max_in_degree();
    const double eps_f = rational_to_double(eps);
    const bad_threshold spec = bad_threshold::relative(eps);
    lll_params params;
    params.p = std::exp(-eps_f * eps_f * (static_cast<double>(delta) - 1.0));
    params.weights.reserve(d.vertex_count());
    params.dep_bound.reserve(d.vertex_count());
    params.s.reserve(d.vertex_count());
    for (vertex v = 0; v < d.vertex_count(); ++v) {
        const int dv = d.out_degree(v);
        params.weights.push_back(make_rational(dv, delta));
        params.dep_bound.push_back(2LL * dv * max_in);
        params.s.push_back(spec.threshold_for(dv));
    }
    return params;
}

/// Per-vertex and global verification of the weighted-local-lemma conditions
/// as the theorem's proof instantiates them.  Diagnostic report, never an
/// exception.
struct lll_report {
    int delta_plus = 0;
    int max_indegree = 0;
    double p = 0.0;
    bool p_le_quarter = false;

    // condition (a): e^{-eps^2 (d+(v) - 1)} <= p^{t_v}; equivalent to the
    // integer inequality (d+ - 1) delta >= (delta - 1) d+, checked exactly.
    bool cond_a_all = false;
    std::vector<vertex> cond_a_violations;

    // condition (b): 2p * |D(v)| <= t_v / 2 with |D(v)| <= 2 d+(v) Delta^-.
    bool cond_b_all = false;
    std::vector<vertex> cond_b_violations;
    double worst_b_lhs = 0.0;  // max over v of 2p * dep_bound(v)

    double admissible_indegree = 0.0;
    bool indegree_ok = false;

    std::uint64_t delta0 = 0;
    bool delta_ok = false;

    /// Lemma conditions hold; the resampler's termination guarantee applies.
    bool pass() const { return p_le_quarter && cond_a_all && cond_b_all; }
    /// Full theorem hypothesis (delta0 gate and admissible in-degree).
    bool hypothesis_met() const { return pass() && indegree_ok && delta_ok; }
};

inline lll_report check_weighted_lll(const digraph& d, double eps) {
    if (d.vertex_count() == 0) throw std::invalid_argument("check_weighted_lll: empty digraph");
    if (!(eps > 0.0 && eps < 0.5))
        throw std::invalid_argument("check_weighted_lll: eps out of range");
    lll_report rep;
    rep.delta_plus = d.min_out_degree();
    rep.max_indegree = d.max_in_degree();
    rep.p = std::exp(-eps * eps * (static_cast<double>(rep.delta_plus) - 1.0));
    rep.p_le_quarter = rep.p <= 0.25;
    rep.admissible_indegree = rep.delta_plus >= 1
                                  ? admissible_max_indegree(eps, rep.delta_plus)
                                  : 0.0;
    rep.indegree_ok = static_cast<double>(rep.max_indegree) <= rep.admissible_indegree;
    rep.delta0 = delta0_weighted_lll(eps);
    rep.delta_ok = static_cast<std::uint64_t>(rep.delta_plus) >= rep.delta0;

    const std::int64_t delta = rep.delta_plus;
    for (vertex v = 0; v < d.vertex_count(); ++v) {
        const std::int64_t dv = d.out_degree(v);
        // (a) via exact cross-multiplication of the exponents
        if ((dv - 1) * delta < (delta - 1) * dv) rep.cond_a_violations.push_back(v);
        // (b) in floating point, as the proof compares bound values
        const double lhs = 2.0 * rep.p * 2.0 * static_cast<double>(dv) *
                           static_cast<double>(rep.max_indegree);
        const double rhs = static_cast<double>(dv) / (2.0 * static_cast<double>(delta));
        rep.worst_b_lhs = std::max(rep.worst_b_lhs, lhs);
        if (lhs > rhs) rep.cond_b_violations.push_back(v);
    }
    rep.cond_a_all = rep.cond_a_violations.empty();
    rep.cond_b_all = rep.cond_b_violations.empty();
    return rep;
}

/// Result of the resampling run.  bad is empty exactly on success; history
/// records which vertex's event was resampled at each step.
struct resample_report {
    bipartition split;
    std::vector<bad_vertex> bad;
    std::int64_t resamples_used = 0;
    std::vector<vertex> history;
    std::uint64_t seed = 0;

    bool success() const { return bad.empty(); }
};

/// Moser-Tardos realization of the weighted-local-lemma bisection: fix one
/// pairing, give each pair (and the odd singleton) a coin, and while some
/// vertex v is bad (x(v) < s_v or x(v) > d+(v) - s_v) resample exactly the
/// variable set of its event: the coins of all pairs meeting N+(v) plus v's
/// own coin.  The lowest-indexed bad vertex is always chosen, so runs are
/// reproducible.  Exhaustion is a structured failure.
inline resample_report moser_tardos_split(const digraph& d, const rational& eps,
                                          std::uint64_t seed, std::int64_t max_resamples) {
    if (max_resamples < 0)
        throw std::invalid_argument("moser_tardos_split: negative resample budget");
    const bad_threshold spec = bad_threshold::relative(eps);
    const int n = d.vertex_count();

    rng gen(seed);
    const pairing p = random_pairing(d, gen.next());
    const int coins = p.coin_count();

    // coin index covering each vertex
    std::vector<int> coin_of(n, -1);
    for (std::size_t i = 0; i < p.pairs.size(); ++i) {
        coin_of[p.pairs[i].first] = static_cast<int>(i);
        coin_of[p.pairs[i].second] = static_cast<int>(i);
    }
    if (p.singleton) coin_of[*p.singleton] = coins - 1;

    std::vector<bool> coin_state(coins);
    for (int i = 0; i < coins; ++i) coin_state[i] = gen.coin();

    std::vector<int> thresholds(n);
    for (vertex v = 0; v < n; ++v) thresholds[v] = spec.threshold_for(d.out_degree(v));

    resample_report rep{apply_coins(p, coin_state), {}, 0, {}, seed};

    std::vector<char> touched(coins, 0);
    std::vector<int> var_set;
    while (true) {
        // lowest-indexed bad vertex under the current assignment
        vertex bad_v = -1;
        for (vertex v = 0; v < n; ++v) {
            const int x = out_degree_own_side(d, v, rep.split);
            if (x < thresholds[v] || x > d.out_degree(v) - thresholds[v]) {
                bad_v = v;
                break;
            }
        }
        if (bad_v < 0) break;
        if (rep.resamples_used >= max_resamples) {
            rep.bad = bad_vertices(d, rep.split, spec);
            return rep;
        }
        // variables of event A(bad_v): pairs meeting N+(bad_v), plus its own
        var_set.clear();
        auto add_coin = [&](int c) {
            if (!touched[c]) {
                touched[c] = 1;
                var_set.push_back(c);
            }
        };
        add_coin(coin_of[bad_v]);
        for (vertex u : d.out_neighbors(bad_v)) add_coin(coin_of[u]);
        std::sort(var_set.begin(), var_set.end());
        for (int c : var_set) {
            coin_state[c] = gen.coin();
            touched[c] = 0;
        }
        rep.split = apply_coins(p, coin_state);
        ++rep.resamples_used;
        rep.history.push_back(bad_v);
    }
    return rep;
}

}  // namespace degsplit
