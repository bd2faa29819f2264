#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace degsplit {

using vertex = int;
using arc = std::pair<vertex, vertex>;

/// Immutable simple digraph on dense vertex ids 0..n-1.
///
/// Arcs are stored three ways: sorted out/in adjacency lists for iteration,
/// and per-vertex bitset rows for O(1) membership and word-parallel degree
/// counting into vertex subsets.  The representation is frozen at
/// construction, so instances are safe for concurrent reads.
///
/// Antiparallel pairs (u,v),(v,u) are permitted -- tournament and
/// multipartite validation reject them.  Loops and duplicate arcs are
/// construction errors.  An optional partition into k >= 2 classes marks a
/// multipartite structure; every arc must then cross two distinct classes.
class digraph {
  public:
    digraph(int n, std::vector<arc> arcs,
            std::optional<std::vector<int>> part_of = std::nullopt)
        : n_(n), part_of_(std::move(part_of)) {
        if (n < 0) throw std::invalid_argument("digraph: negative vertex count");
        words_ = (static_cast<std::size_t>(n) + 63) / 64;
        std::sort(arcs.begin(), arcs.end());
        for (std::size_t i = 0; i < arcs.size(); ++i) {
            const auto [u, v] = arcs[i];
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw std::invalid_argument("digraph: arc endpoint out of range: (" +
                                            std::to_string(u) + "," + std::to_string(v) + ")");
            if (u == v)
                throw std::invalid_argument("digraph: loop at vertex " + std::to_string(u));
            if (i > 0 && arcs[i] == arcs[i - 1])
                throw std::invalid_argument("digraph: duplicate arc (" + std::to_string(u) +
                                            "," + std::to_string(v) + ")");
        }
        if (part_of_) validate_parts(arcs);

        arcs_ = std::move(arcs);
        out_adj_.assign(n_, {});
        in_adj_.assign(n_, {});
        out_mask_.assign(words_ * static_cast<std::size_t>(n_), 0);
        for (const auto& [u, v] : arcs_) {
            out_adj_[u].push_back(v);
            in_adj_[v].push_back(u);
            out_mask_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / 64] |=
                std::uint64_t{1} << (v % 64);
        }
        for (auto& nbrs : in_adj_) std::sort(nbrs.begin(), nbrs.end());
    }

    int vertex_count() const { return n_; }
    std::int64_t arc_count() const { return static_cast<std::int64_t>(arcs_.size()); }

    /// Arcs in sorted order.
    const std::vector<arc>& arcs() const { return arcs_; }

    std::span<const vertex> out_neighbors(vertex v) const {
        check_vertex(v);
        return out_adj_[v];
    }

    std::span<const vertex> in_neighbors(vertex v) const {
        check_vertex(v);
        return in_adj_[v];
    }

    bool has_arc(vertex u, vertex v) const {
        check_vertex(u);
        check_vertex(v);
        return (out_mask_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / 64] >>
                (v % 64)) & 1;
    }

    int out_degree(vertex v) const {
        check_vertex(v);
        return static_cast<int>(out_adj_[v].size());
    }

    int in_degree(vertex v) const {
        check_vertex(v);
        return static_cast<int>(in_adj_[v].size());
    }

    /// delta^+(D); n >= 1 required.
    int min_out_degree() const {
        require_nonempty();
        int d = out_degree(0);
        for (vertex v = 1; v < n_; ++v) d = std::min(d, out_degree(v));
        return d;
    }

    int max_out_degree() const {
        require_nonempty();
        int d = out_degree(0);
        for (vertex v = 1; v < n_; ++v) d = std::max(d, out_degree(v));
        return d;
    }

    /// Delta^-(D); n >= 1 required.
    int max_in_degree() const {
        require_nonempty();
        int d = in_degree(0);
        for (vertex v = 1; v < n_; ++v) d = std::max(d, in_degree(v));
        return d;
    }

    /// Part id per vertex (multipartite structure), if present.
    const std::optional<std::vector<int>>& part_of() const { return part_of_; }

    /// Number of parts; 0 when no part structure is attached.
    int part_count() const {
        if (!part_of_) return 0;
        int k = 0;
        for (int p : *part_of_) k = std::max(k, p + 1);
        return k;
    }

    /// Bitset row of v's out-neighborhood, words_per_row() words long.
    std::span<const std::uint64_t> out_row(vertex v) const {
        check_vertex(v);
        return {out_mask_.data() + static_cast<std::size_t>(v) * words_, words_};
    }

    std::size_t words_per_row() const { return words_; }

    bool operator==(const digraph& other) const {
        return n_ == other.n_ && arcs_ == other.arcs_ && part_of_ == other.part_of_;
    }

  private:
    void check_vertex(vertex v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("digraph: unknown vertex id " + std::to_string(v));
    }

    void require_nonempty() const {
        if (n_ == 0) throw std::invalid_argument("digraph: empty digraph");
    }

    void validate_parts(const std::vector<arc>& arcs) const {
        const auto& parts = *part_of_;
        if (static_cast<int>(parts.size()) != n_)
            throw std::invalid_argument("digraph: part assignment size mismatch");
        const int k = n_ == 0 ? 0 : *std::max_element(parts.begin(), parts.end()) + 1;
        if (k < 2) throw std::invalid_argument("digraph: multipartite structure needs >= 2 parts");
        std::vector<char> seen(k, 0);
        for (int p : parts) {
            if (p < 0 || p >= k) throw std::invalid_argument("digraph: part id out of range");
            seen[p] = 1;
        }
        if (std::find(seen.begin(), seen.end(), 0) != seen.end())
            throw std::invalid_argument("digraph: empty part class");
        for (const auto& [u, v] : arcs)
            if (parts[u] == parts[v])
                throw std::invalid_argument("digraph: arc (" + std::to_string(u) + "," +
                                            std::to_string(v) + ") inside one part");
    }

    int n_;
    std::size_t words_ = 0;
    std::vector<arc> arcs_;
    std::vector<std::vector<vertex>> out_adj_;
    std::vector<std::vector<vertex>> in_adj_;
    std::vector<std::uint64_t> out_mask_;
    std::optional<std::vector<int>> part_of_;
};

/// Disjoint cover (A, B) of the vertex set of an n-vertex digraph.
/// Value object; a bisection when the part sizes differ by at most one.
class bipartition {
  public:
    /// B is the complement of A.
    bipartition(int n, std::vector<vertex> a_side) : n_(n) {
        if (n < 0) throw std::invalid_argument("bipartition: negative vertex count");
        words_ = (static_cast<std::size_t>(n) + 63) / 64;
        a_mask_.assign(words_, 0);
        std::sort(a_side.begin(), a_side.end());
        for (std::size_t i = 0; i < a_side.size(); ++i) {
            const vertex v = a_side[i];
            if (v < 0 || v >= n) throw std::invalid_argument("bipartition: vertex out of range");
            if (i > 0 && a_side[i] == a_side[i - 1])
                throw std::invalid_argument("bipartition: duplicate vertex in A");
            a_mask_[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
        }
        a_ = std::move(a_side);
        b_.reserve(n_ - a_.size());
        for (vertex v = 0; v < n_; ++v)
            if (!in_a(v)) b_.push_back(v);
    }

    static bipartition from_sides(int n, std::vector<vertex> a_side,
                                  std::vector<vertex> b_side) {
        bipartition p(n, std::move(a_side));
        std::sort(b_side.begin(), b_side.end());
        if (b_side != p.b_)
            throw std::invalid_argument("bipartition: sides are not a disjoint cover");
        return p;
    }

    int vertex_count() const { return n_; }
    const std::vector<vertex>& a() const { return a_; }
    const std::vector<vertex>& b() const { return b_; }

    bool in_a(vertex v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("bipartition: unknown vertex id");
        return (a_mask_[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1;
    }

    bool is_bisection() const {
        return std::abs(static_cast<long>(a_.size()) - static_cast<long>(b_.size())) <= 1;
    }

    std::span<const std::uint64_t> a_mask() const { return a_mask_; }

    bool operator==(const bipartition& other) const { return n_ == other.n_ && a_ == other.a_; }

  private:
    int n_;
    std::size_t words_;
    std::vector<vertex> a_;
    std::vector<vertex> b_;
    std::vector<std::uint64_t> a_mask_;
};

/// Out-degree of v into its own side (in_own = true) or the other side.
inline int out_degree_side(const digraph& d, vertex v, const bipartition& p, bool side_a) {
    const auto row = d.out_row(v);
    const auto mask = p.a_mask();
    int count = 0;
    const std::size_t words = d.words_per_row();
    for (std::size_t w = 0; w < words; ++w) {
        // rows carry no padding bits, so the complement needs no clipping
        const std::uint64_t bits = side_a ? (row[w] & mask[w]) : (row[w] & ~mask[w]);
        count += __builtin_popcountll(bits);
    }
    return count;
}

/// d^+_A(v) when v's side is A.  X_v in the sampling analysis.
inline int out_degree_own_side(const digraph& d, vertex v, const bipartition& p) {
    return out_degree_side(d, v, p, p.in_a(v));
}

/// Induced subdigraph D[S].  Vertices are relabeled to 0..|S|-1 in ascending
/// order of their ids in D.  Part structure is restricted; empty classes are
/// dropped and the structure is removed entirely if fewer than two classes
/// survive.
inline digraph induced_subdigraph(const digraph& d, std::span<const vertex> s) {
    std::vector<vertex> sorted(s.begin(), s.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> new_id(d.vertex_count(), -1);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 0 || sorted[i] >= d.vertex_count())
            throw std::out_of_range("induced_subdigraph: unknown vertex id");
        new_id[sorted[i]] = static_cast<int>(i);
    }
    std::vector<arc> arcs;
    for (vertex u : sorted)
        for (vertex v : d.out_neighbors(u))
            if (new_id[v] >= 0) arcs.emplace_back(new_id[u], new_id[v]);

    std::optional<std::vector<int>> parts;
    if (d.part_of()) {
        std::vector<int> old_parts;
        old_parts.reserve(sorted.size());
        for (vertex v : sorted) old_parts.push_back((*d.part_of())[v]);
        std::vector<int> remap(d.part_count(), -1);
        int next = 0;
        for (int p : old_parts)
            if (remap[p] < 0) remap[p] = next++;
        if (next >= 2) {
            std::vector<int> restricted;
            restricted.reserve(old_parts.size());
            for (int p : old_parts) restricted.push_back(remap[p]);
            parts = std::move(restricted);
        }
    }
    return digraph(static_cast<int>(sorted.size()), std::move(arcs), std::move(parts));
}

/// Exactly one arc between every vertex pair, no digons.
inline bool is_tournament(const digraph& d) {
    const int n = d.vertex_count();
    if (d.arc_count() != static_cast<std::int64_t>(n) * (n - 1) / 2) return false;
    for (vertex u = 0; u < n; ++u)
        for (vertex v = u + 1; v < n; ++v)
            if (d.has_arc(u, v) == d.has_arc(v, u)) return false;
    return true;
}

/// True iff D carries a k-class part structure, every cross-part pair has
/// exactly one arc, and no arc lies inside a part (the latter holds by
/// construction).  Without an attached part structure the answer is false.
inline bool is_k_partite_tournament(const digraph& d, int k) {
    if (k < 2 || !d.part_of() || d.part_count() != k) return false;
    const auto& parts = *d.part_of();
    const int n = d.vertex_count();
    for (vertex u = 0; u < n; ++u)
        for (vertex v = u + 1; v < n; ++v) {
            if (parts[u] == parts[v]) {
                if (d.has_arc(u, v) || d.has_arc(v, u)) return false;
            } else if (d.has_arc(u, v) == d.has_arc(v, u)) {
                return false;
            }
        }
    return true;
}

/// Every ordered pair joined by a directed path.  A single vertex is strong.
inline bool is_strongly_connected(const digraph& d) {
    const int n = d.vertex_count();
    if (n == 0) throw std::invalid_argument("is_strongly_connected: empty digraph");
    if (n == 1) return true;
    // forward and backward reachability from vertex 0
    for (int dir = 0; dir < 2; ++dir) {
        std::vector<char> seen(n, 0);
        std::vector<vertex> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            const vertex u = stack.back();
            stack.pop_back();
            const auto nbrs = dir == 0 ? d.out_neighbors(u) : d.in_neighbors(u);
            for (vertex v : nbrs)
                if (!seen[v]) {
                    seen[v] = 1;
                    ++reached;
                    stack.push_back(v);
                }
        }
        if (reached != n) return false;
    }
    return true;
}

/// Disjoint union; the second digraph's ids are shifted by a.vertex_count().
/// Part structures are dropped (no canonical way to merge them).
inline digraph disjoint_union(const digraph& a, const digraph& b) {
    std::vector<arc> arcs = a.arcs();
    arcs.reserve(arcs.size() + b.arcs().size());
    const int shift = a.vertex_count();
    for (const auto& [u, v] : b.arcs()) arcs.emplace_back(u + shift, v + shift);
    return digraph(a.vertex_count() + b.vertex_count(), std::move(arcs));
}

}  // namespace degsplit
