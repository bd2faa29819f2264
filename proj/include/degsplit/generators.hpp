#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "degsplit/digraph.hpp"
#include "degsplit/rng.hpp"

namespace degsplit {

// All generators are pure functions of (parameters, seed); the PRNG is
// std::mt19937_64 with rejection-sampled bounded draws (see rng.hpp), so
// instances reproduce bit-for-bit across platforms.

/// Uniform random tournament: each unordered pair oriented by a fair coin.
inline digraph random_tournament(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_tournament: n must be >= 1");
    rng gen(seed);
    std::vector<arc> arcs;
    arcs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (vertex u = 0; u < n; ++u)
        for (vertex v = u + 1; v < n; ++v)
            arcs.emplace_back(gen.coin() ? arc{u, v} : arc{v, u});
    return digraph(n, std::move(arcs));
}

/// Rotational (circulant) tournament on odd n: i beats i+1, ..., i+(n-1)/2
/// mod n.  Regular with every out-degree (n-1)/2.
inline digraph rotational_tournament(int n) {
    if (n < 1 || n % 2 == 0)
        throw std::invalid_argument("rotational_tournament: n must be odd and >= 1");
    std::vector<arc> arcs;
    arcs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (vertex i = 0; i < n; ++i)
        for (int j = 1; j <= (n - 1) / 2; ++j) arcs.emplace_back(i, (i + j) % n);
    return digraph(n, std::move(arcs));
}

/// Uniform random k-partite tournament.  Vertices are numbered part by part:
/// part 0 first, then part 1, and so on.
inline digraph random_k_partite_tournament(const std::vector<int>& part_sizes,
                                           std::uint64_t seed) {
    if (part_sizes.size() < 2)
        throw std::invalid_argument("random_k_partite_tournament: need >= 2 parts");
    for (int s : part_sizes)
        if (s < 1) throw std::invalid_argument("random_k_partite_tournament: empty part");
    const int n = std::accumulate(part_sizes.begin(), part_sizes.end(), 0);
    std::vector<int> part_of(n);
    int next = 0;
    for (std::size_t p = 0; p < part_sizes.size(); ++p)
        for (int i = 0; i < part_sizes[p]; ++i) part_of[next++] = static_cast<int>(p);
    rng gen(seed);
    std::vector<arc> arcs;
    for (vertex u = 0; u < n; ++u)
        for (vertex v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v])
                arcs.emplace_back(gen.coin() ? arc{u, v} : arc{v, u});
    return digraph(n, std::move(arcs), std::move(part_of));
}

/// Random digraph in which every vertex gets exactly d out-neighbors, chosen
/// uniformly without replacement (digons allowed, loops excluded); thus
/// delta^+(D) = d.  Exact degree pins instances at the minimum-out-degree
/// hypothesis boundary of the splitting methods.
inline digraph random_digraph_min_outdegree(int n, int d, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_digraph_min_outdegree: n must be >= 1");
    if (d < 0 || d >= n)
        throw std::invalid_argument("random_digraph_min_outdegree: need 0 <= d < n");
    rng gen(seed);
    std::vector<arc> arcs;
    arcs.reserve(static_cast<std::size_t>(n) * d);
    std::vector<vertex> pool(n - 1);
    for (vertex v = 0; v < n; ++v) {
        // candidates are all vertices except v; partial Fisher-Yates picks d
        int idx = 0;
        for (vertex u = 0; u < n; ++u)
            if (u != v) pool[idx++] = u;
        for (int i = 0; i < d; ++i) {
            const auto j = i + static_cast<int>(gen.below(pool.size() - i));
            std::swap(pool[i], pool[j]);
            arcs.emplace_back(v, pool[i]);
        }
    }
    return digraph(n, std::move(arcs));
}

}  // namespace degsplit
