#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "degsplit/digraph.hpp"
#include "degsplit/pairing.hpp"
#include "degsplit/peeling.hpp"
#include "degsplit/rational.hpp"

namespace degsplit {

/// Exact probability mass function of X_v under the uniform pair-split
/// measure, by enumerating every split of the pairs meeting N+(v) or {v}
/// (and the odd singleton when it is v or one of its out-neighbors).  Ground
/// truth for the closed-form bad probabilities; shares no arithmetic with
/// them beyond the rational type.
inline std::map<int, rational> exact_xv_distribution(const digraph& d, vertex v,
                                                     const pairing& p, int max_coins = 24) {
    if (v < 0 || v >= d.vertex_count())
        throw std::out_of_range("exact_xv_distribution: unknown vertex id");
    if (p.n != d.vertex_count())
        throw std::invalid_argument("exact_xv_distribution: pairing size mismatch");

    // units: relevant coin-bearing pairs, singleton last if relevant
    struct unit_ref {
        int unit;
        bool first;  // side tracks the coin directly for first endpoints
    };
    std::vector<int> unit_pairs;
    int singleton_unit = -1;
    for (std::size_t i = 0; i < p.pairs.size(); ++i) {
        const auto& [x, y] = p.pairs[i];
        if (x == v || y == v || d.has_arc(v, x) || d.has_arc(v, y))
            unit_pairs.push_back(static_cast<int>(i));
    }
    int m = static_cast<int>(unit_pairs.size());
    if (p.singleton && (*p.singleton == v || d.has_arc(v, *p.singleton)))
        singleton_unit = m++;
    if (m > max_coins)
        throw std::invalid_argument("exact_xv_distribution: " + std::to_string(m) +
                                    " relevant pairs exceed the enumeration budget of " +
                                    std::to_string(max_coins));

    // locate v and each out-neighbor inside the units
    std::optional<unit_ref> v_ref;
    std::vector<unit_ref> out_refs;
    for (int u = 0; u < static_cast<int>(unit_pairs.size()); ++u) {
        const auto& [x, y] = p.pairs[unit_pairs[u]];
        if (x == v) v_ref = unit_ref{u, true};
        if (y == v) v_ref = unit_ref{u, false};
        if (d.has_arc(v, x)) out_refs.push_back({u, true});
        if (d.has_arc(v, y)) out_refs.push_back({u, false});
    }
    if (singleton_unit >= 0) {
        if (*p.singleton == v)
            v_ref = unit_ref{singleton_unit, true};
        else
            out_refs.push_back({singleton_unit, true});
    }
    if (!v_ref) throw std::logic_error("exact_xv_distribution: v not covered by the pairing");

    std::map<int, std::uint64_t> counts;
    const std::uint64_t total = std::uint64_t{1} << m;
    for (std::uint64_t coins = 0; coins < total; ++coins) {
        auto side = [&](const unit_ref& r) {
            const bool coin = (coins >> r.unit) & 1;
            return r.first ? coin : !coin;
        };
        const bool v_side = side(*v_ref);
        int x = 0;
        for (const auto& r : out_refs) x += side(r) == v_side;
        ++counts[x];
    }
    std::map<int, rational> pmf;
    const big_int denom = pow2(static_cast<unsigned long>(m));
    for (const auto& [x, c] : counts) pmf[x] = make_rational(big_int(c), denom);
    return pmf;
}

/// Tail mass sum_{x < t} pmf(x).
inline rational pmf_mass_below(const std::map<int, rational>& pmf, int t) {
    rational sum(0);
    for (const auto& [x, q] : pmf)
        if (x < t) sum += q;
    return sum;
}

/// Tail mass sum_{x > bound} pmf(x).
inline rational pmf_mass_above(const std::map<int, rational>& pmf, int bound) {
    rational sum(0);
    for (const auto& [x, q] : pmf)
        if (x > bound) sum += q;
    return sum;
}

namespace detail {

class split_search {
  public:
    split_search(const digraph& d, int s, int t, bool bisection_only)
        : d_(d), s_(s), t_(t), n_(d.vertex_count()) {
        side_.assign(n_, -1);
        cnt_a_.assign(n_, 0);
        cnt_b_.assign(n_, 0);
        unassigned_out_.resize(n_);
        for (vertex v = 0; v < n_; ++v) unassigned_out_[v] = d.out_degree(v);
        max_side_ = bisection_only ? (n_ + 1) / 2 : n_ - 1;
    }

    std::optional<bipartition> run() {
        if (dfs(0)) {
            std::vector<vertex> a;
            for (vertex v = 0; v < n_; ++v)
                if (side_[v] == 0) a.push_back(v);
            return bipartition(n_, std::move(a));
        }
        return std::nullopt;
    }

  private:
    // a vertex is viable while at least one side could still satisfy it
    bool viable(vertex v) const {
        const int pot_a = cnt_a_[v] + unassigned_out_[v];
        const int pot_b = cnt_b_[v] + unassigned_out_[v];
        if (side_[v] == 0) return pot_a >= s_;
        if (side_[v] == 1) return pot_b >= t_;
        return pot_a >= s_ || pot_b >= t_;
    }

    bool assign(vertex v, int side) {
        side_[v] = side;
        (side == 0 ? size_a_ : size_b_)++;
        for (vertex w : d_.in_neighbors(v)) {
            --unassigned_out_[w];
            ++(side == 0 ? cnt_a_ : cnt_b_)[w];
        }
        if ((side == 0 ? size_a_ : size_b_) > max_side_) return false;
        if (!viable(v)) return false;
        for (vertex w : d_.in_neighbors(v))
            if (!viable(w)) return false;
        return true;
    }

    void undo(vertex v, int side) {
        side_[v] = -1;
        (side == 0 ? size_a_ : size_b_)--;
        for (vertex w : d_.in_neighbors(v)) {
            ++unassigned_out_[w];
            --(side == 0 ? cnt_a_ : cnt_b_)[w];
        }
    }

    bool dfs(vertex v) {
        if (v == n_) return size_a_ > 0 && size_b_ > 0;
        for (int side = 0; side < 2; ++side) {
            const bool ok = assign(v, side);
            if (ok && dfs(v + 1)) return true;
            undo(v, side);
        }
        return false;
    }

    const digraph& d_;
    int s_, t_, n_;
    int max_side_;
    int size_a_ = 0, size_b_ = 0;
    std::vector<signed char> side_;
    std::vector<int> cnt_a_, cnt_b_, unassigned_out_;
};

}  // namespace detail

/// Exhaustive witness search: a bipartition (bisection when bisection_only)
/// with both sides nonempty, delta^+(D[A]) >= s and delta^+(D[B]) >= t, or a
/// certified "none exists" (nullopt).  Backtracking over vertex assignments
/// with potential-degree pruning; the witness, when one exists, is the
/// lexicographically first assignment (A preferred).
inline std::optional<bipartition> exists_split(const digraph& d, int s, int t,
                                               bool bisection_only = false) {
    if (s < 1 || t < 1) throw std::invalid_argument("exists_split: targets must be >= 1");
    const int limit = bisection_only ? 26 : 20;
    if (d.vertex_count() > limit)
        throw std::invalid_argument("exists_split: enumeration budget is n <= " +
                                    std::to_string(limit) +
                                    (bisection_only ? " for bisections" : " for bipartitions"));
    return detail::split_search(d, s, t, bisection_only).run();
}

/// All orientations of complete bipartite graphs with part sizes up to
/// max_part that are s-minimal.  No isomorphism reduction: labeled
/// duplicates are acceptable at these sizes, and the size-bound check does
/// not need uniqueness.
inline std::vector<digraph> exhaustive_bipartite_minimal_scan(int max_part, int s) {
    if (max_part < 1) throw std::invalid_argument("scan: max_part must be >= 1");
    if (max_part > 4)
        throw std::invalid_argument("scan: orientation space 2^(p*q) exceeds budget at max_part > 4");
    if (s < 1) throw std::invalid_argument("scan: s must be >= 1");
    std::vector<digraph> found;
    for (int p = 1; p <= max_part; ++p)
        for (int q = p; q <= max_part; ++q) {
            const int cross = p * q;
            std::vector<int> part_of(p + q, 0);
            for (int j = 0; j < q; ++j) part_of[p + j] = 1;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cross); ++mask) {
                std::vector<arc> arcs;
                arcs.reserve(cross);
                for (int i = 0; i < p; ++i)
                    for (int j = 0; j < q; ++j) {
                        const bool forward = (mask >> (i * q + j)) & 1;
                        arcs.emplace_back(forward ? arc{i, p + j} : arc{p + j, i});
                    }
                digraph cand(p + q, std::move(arcs), part_of);
                if (is_s_minimal(cand, s)) found.push_back(std::move(cand));
            }
        }
    return found;
}

}  // namespace degsplit
