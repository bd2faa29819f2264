#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "degsplit/digraph.hpp"
#include "degsplit/probability.hpp"
#include "degsplit/rng.hpp"

namespace degsplit {

/// Perfect matching of the vertex ids 0..n-1, plus one leftover singleton
/// when n is odd.  Pairs are what the split coins act on.
struct pairing {
    int n = 0;
    std::vector<std::pair<vertex, vertex>> pairs;
    std::optional<vertex> singleton;

    int coin_count() const { return static_cast<int>(pairs.size()) + (singleton ? 1 : 0); }

    void validate() const {
        std::vector<char> seen(n, 0);
        auto mark = [&](vertex v) {
            if (v < 0 || v >= n) throw std::invalid_argument("pairing: vertex out of range");
            if (seen[v]) throw std::invalid_argument("pairing: vertex covered twice");
            seen[v] = 1;
        };
        for (const auto& [x, y] : pairs) {
            mark(x);
            mark(y);
        }
        if (singleton) mark(*singleton);
        if (std::accumulate(seen.begin(), seen.end(), 0) != n)
            throw std::invalid_argument("pairing: does not cover the vertex set");
        if ((n % 2 == 0) == singleton.has_value())
            throw std::invalid_argument("pairing: singleton presence must match parity");
    }
};

/// Uniform random pairing (Fisher-Yates shuffle read off in consecutive
/// pairs; the leftover vertex becomes the singleton when n is odd).
inline pairing random_pairing(const digraph& d, std::uint64_t seed) {
    const int n = d.vertex_count();
    rng gen(seed);
    std::vector<vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (int i = n - 1; i > 0; --i) {
        const auto j = static_cast<int>(gen.below(static_cast<std::uint64_t>(i) + 1));
        std::swap(order[i], order[j]);
    }
    pairing p;
    p.n = n;
    for (int i = 0; i + 1 < n; i += 2) p.pairs.emplace_back(order[i], order[i + 1]);
    if (n % 2 == 1) p.singleton = order[n - 1];
    return p;
}

/// Applies one coin per pair (true: first endpoint to A) plus a final coin
/// for the singleton.  coins.size() must equal coin_count().
inline bipartition apply_coins(const pairing& p, const std::vector<bool>& coins) {
    if (static_cast<int>(coins.size()) != p.coin_count())
        throw std::invalid_argument("apply_coins: coin count mismatch");
    std::vector<vertex> a_side;
    a_side.reserve(static_cast<std::size_t>(p.n) / 2 + 1);
    for (std::size_t i = 0; i < p.pairs.size(); ++i)
        a_side.push_back(coins[i] ? p.pairs[i].first : p.pairs[i].second);
    if (p.singleton && coins.back()) a_side.push_back(*p.singleton);
    return bipartition(p.n, std::move(a_side));
}

/// Splits each pair independently and uniformly; the singleton lands on a
/// uniform side.  The result is always a bisection.
inline bipartition sample_split(const pairing& p, rng& gen) {
    std::vector<bool> coins(p.coin_count());
    for (std::size_t i = 0; i < coins.size(); ++i) coins[i] = gen.coin();
    return apply_coins(p, coins);
}

inline bipartition sample_split(const pairing& p, std::uint64_t seed) {
    rng gen(seed);
    return sample_split(p, gen);
}

/// Pairing statistics of v: a counts pairs fully inside N+(v); b counts the
/// Bernoulli slots (pairs meeting N+(v) once, v's own pair when its partner
/// is an out-neighbor, and a singleton out-neighbor).  See pair_profile.
inline pair_profile make_pair_profile(const digraph& d, vertex v, const pairing& p) {
    if (v < 0 || v >= d.vertex_count())
        throw std::out_of_range("make_pair_profile: unknown vertex id");
    if (p.n != d.vertex_count())
        throw std::invalid_argument("make_pair_profile: pairing size mismatch");
    int a = 0, b = 0;
    partner_rel rel = partner_rel::partner_in_nminus;
    for (const auto& [x, y] : p.pairs) {
        if (x == v || y == v) {
            const vertex partner = x == v ? y : x;
            if (d.has_arc(v, partner)) {
                rel = partner_rel::partner_in_nplus;
                ++b;
            }
            continue;
        }
        const int hits = (d.has_arc(v, x) ? 1 : 0) + (d.has_arc(v, y) ? 1 : 0);
        if (hits == 2) ++a;
        if (hits == 1) ++b;
    }
    if (p.singleton) {
        if (*p.singleton == v)
            rel = partner_rel::singleton;
        else if (d.has_arc(v, *p.singleton))
            ++b;
    }
    return pair_profile(a, b, rel);
}

/// One threshold violation: X_v landed outside [t, d+ - t].
struct bad_vertex {
    vertex v;
    int x;  // out-neighbors on v's own side
    int t;
    bool operator==(const bad_vertex&) const = default;
};

/// Exactly the vertices violating their threshold under the bipartition:
/// bad iff X_v < t or X_v > d+(v) - t, with t from the threshold spec.
inline std::vector<bad_vertex> bad_vertices(const digraph& d, const bipartition& p,
                                            const bad_threshold& spec) {
    if (p.vertex_count() != d.vertex_count())
        throw std::invalid_argument("bad_vertices: bipartition size mismatch");
    std::vector<bad_vertex> bad;
    for (vertex v = 0; v < d.vertex_count(); ++v) {
        const int dplus = d.out_degree(v);
        const int t = spec.threshold_for(dplus);
        const int x = out_degree_own_side(d, v, p);
        if (x < t || x > dplus - t) bad.push_back({v, x, t});
    }
    return bad;
}

/// Outcome of one sampling run.  bad is empty exactly on success; on
/// exhaustion the best-seen trial (fewest bad vertices, earliest trial
/// breaking ties) is returned.
struct sample_report {
    bipartition split;
    std::vector<bad_vertex> bad;
    int trials_used = 0;
    std::uint64_t seed = 0;

    bool success() const { return bad.empty(); }
};

namespace detail {

inline sample_report run_trial(const digraph& d, const bad_threshold& spec,
                               std::uint64_t master_seed, int trial_index) {
    rng gen(derive_stream_seed(master_seed, static_cast<std::uint64_t>(trial_index)));
    const pairing p = random_pairing(d, gen.next());
    const bipartition split = sample_split(p, gen);
    auto bad = bad_vertices(d, split, spec);
    return sample_report{split, std::move(bad), trial_index + 1, master_seed};
}

}  // namespace detail

/// Random-pairing sampler: fresh pairing + fresh coins per trial until a sample
/// has no bad vertices.  Trials draw from independent substreams of the
/// master seed, so reports are identical for any jobs count.  Exhaustion is
/// a structured result (success() == false), not an exception.
inline sample_report find_good_bisection(const digraph& d, const bad_threshold& spec,
                                         int max_trials, std::uint64_t seed, int jobs = 1) {
    if (max_trials < 1) throw std::invalid_argument("find_good_bisection: max_trials must be >= 1");
    if (jobs < 1) jobs = 1;

    std::optional<sample_report> best;
    auto better = [](const sample_report& x, const sample_report& y) {
        return x.bad.size() != y.bad.size() ? x.bad.size() < y.bad.size()
                                            : x.trials_used < y.trials_used;
    };

    for (int block = 0; block < max_trials; block += jobs) {
        const int count = std::min(jobs, max_trials - block);
        std::vector<std::optional<sample_report>> slot(count);
        if (count == 1) {
            slot[0] = detail::run_trial(d, spec, seed, block);
        } else {
            std::vector<std::thread> workers;
            workers.reserve(count);
            for (int i = 0; i < count; ++i)
                workers.emplace_back(
                    [&, i] { slot[i] = detail::run_trial(d, spec, seed, block + i); });
            for (auto& w : workers) w.join();
        }
        for (int i = 0; i < count; ++i) {
            if (slot[i]->success()) return std::move(*slot[i]);
            if (!best || better(*slot[i], *best)) best = std::move(*slot[i]);
        }
    }
    sample_report failure = std::move(*best);
    failure.trials_used = max_trials;
    return failure;
}

/// Upper bound sum_v 2 e^{-eps^2 (d+(v) - 1)} on the expected bad count.
/// Requires the Chernoff cap to be valid at every vertex, i.e. delta^+(D) >=
/// (2 + sqrt(2)) / eps; otherwise no bound is returned.
inline std::optional<double> expected_bad_upper(const digraph& d, double eps) {
    double sum = 0.0;
    for (vertex v = 0; v < d.vertex_count(); ++v) {
        const auto cap = chernoff_cap(d.out_degree(v), eps);
        if (!cap) return std::nullopt;
        sum += 2.0 * *cap;
    }
    return sum;
}

/// Exact E(bad count) for a concrete pairing: sum over vertices of
/// Pr(X_v < t) + Pr(X_v > d+ - t), as a rational.
inline rational expected_bad_exact(const digraph& d, const pairing& p,
                                   const bad_threshold& spec) {
    rational sum(0);
    for (vertex v = 0; v < d.vertex_count(); ++v) {
        const pair_profile profile = make_pair_profile(d, v, p);
        const int t = spec.threshold_for(profile.dplus);
        sum += prob_too_few(profile, t) + prob_too_many(profile, t);
    }
    return sum;
}

}  // namespace degsplit
