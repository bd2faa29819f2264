#include <catch2/catch.hpp>

#include <algorithm>

#include "degsplit/generators.hpp"
#include "degsplit/oracle.hpp"
#include "degsplit/peeling.hpp"

using namespace degsplit;

namespace {

std::vector<vertex> all_vertices(const digraph& d) {
    std::vector<vertex> v(d.vertex_count());
    for (int i = 0; i < d.vertex_count(); ++i) v[i] = i;
    return v;
}

digraph transitive_tournament(int n) {
    std::vector<arc> arcs;
    for (vertex u = 0; u < n; ++u)
        for (vertex v = u + 1; v < n; ++v) arcs.emplace_back(u, v);
    return digraph(n, std::move(arcs));
}

// peel violators in a seed-shuffled order instead of the queue order
std::vector<vertex> max_core_shuffled(const digraph& d, std::vector<vertex> s, int theta,
                                      std::uint64_t seed) {
    rng gen(seed);
    std::vector<char> in_set(d.vertex_count(), 0);
    for (vertex v : s) in_set[v] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<vertex> members;
        for (vertex v = 0; v < d.vertex_count(); ++v)
            if (in_set[v]) members.push_back(v);
        for (int i = static_cast<int>(members.size()) - 1; i > 0; --i)
            std::swap(members[i], members[gen.below(i + 1)]);
        for (vertex v : members) {
            if (!in_set[v]) continue;
            int deg = 0;
            for (vertex u : d.out_neighbors(v)) deg += in_set[u];
            if (deg < theta) {
                in_set[v] = 0;
                changed = true;
            }
        }
    }
    std::vector<vertex> core;
    for (vertex v = 0; v < d.vertex_count(); ++v)
        if (in_set[v]) core.push_back(v);
    return core;
}

}  // namespace

TEST_CASE("max core basics") {
    const digraph cyc(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(max_core(cyc, all_vertices(cyc), 1) == std::vector<vertex>{0, 1, 2});

    const digraph path(3, {{0, 1}, {1, 2}});
    CHECK(max_core(path, all_vertices(path), 1).empty());

    CHECK(max_core(transitive_tournament(5), all_vertices(transitive_tournament(5)), 1).empty());

    // per-vertex thresholds: vertex 3 cannot reach 2 and peels alone
    const digraph mixed(4, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {3, 0}});
    const std::vector<int> theta{1, 2, 1, 2};
    CHECK(max_core(mixed, all_vertices(mixed), theta) == std::vector<vertex>{0, 1, 2});
}

TEST_CASE("max core is order independent") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const auto d = random_digraph_min_outdegree(30, 3, seed);
        // random subset
        rng gen(seed + 17);
        std::vector<vertex> s;
        for (vertex v = 0; v < 30; ++v)
            if (gen.coin()) s.push_back(v);
        const auto core = max_core(d, s, 2);
        for (std::uint64_t order = 0; order < 4; ++order)
            CHECK(max_core_shuffled(d, s, 2, order) == core);
    }
}

TEST_CASE("minimal core basics") {
    const digraph cyc(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(minimal_core(cyc, all_vertices(cyc), 1) == std::vector<vertex>{0, 1, 2});

    const digraph two_cycles(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    const auto core = minimal_core(two_cycles, all_vertices(two_cycles), 1);
    CHECK(core.size() == 3);
    CHECK((core == std::vector<vertex>{0, 1, 2} || core == std::vector<vertex>{3, 4, 5}));

    const auto rot7_core = minimal_core(rotational_tournament(7), all_vertices(rotational_tournament(7)), 1);
    CHECK(rot7_core.size() == 3);
    CHECK(is_strongly_connected(induced_subdigraph(rotational_tournament(7), rot7_core)));

    const digraph path(3, {{0, 1}, {1, 2}});
    CHECK_THROWS_AS(minimal_core(path, all_vertices(path), 1), std::invalid_argument);
}

TEST_CASE("minimal core carries its certificate") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto d = random_k_partite_tournament({12, 12}, seed);
        const auto core = minimal_core(d, all_vertices(d), 1);
        // the theta-property holds on the core
        const auto recheck = max_core(d, core, 1);
        CHECK(recheck == core);
        // and deleting any single vertex empties it
        for (vertex v : core) {
            std::vector<vertex> without;
            for (vertex u : core)
                if (u != v) without.push_back(u);
            CHECK(max_core(d, without, 1).empty());
        }
    }
}

TEST_CASE("every minimal-core vertex has an in-neighbor of core degree exactly s") {
    const int s = 2;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto d = random_k_partite_tournament({30, 30}, seed);
        if (d.min_out_degree() < s) continue;
        const auto core = minimal_core(d, all_vertices(d), s);
        const auto inside = induced_subdigraph(d, core);
        for (vertex v = 0; v < inside.vertex_count(); ++v) {
            bool witnessed = false;
            for (vertex u : inside.in_neighbors(v))
                if (inside.out_degree(u) == s) witnessed = true;
            CHECK(witnessed);
        }
    }
}

TEST_CASE("strong split refines a good bisection") {
    const auto t = rotational_tournament(1001);
    const auto spec = bad_threshold::relative(make_rational(1, 5));
    const auto report = find_good_bisection(t, spec, 16, 31);
    REQUIRE(report.success());

    const auto refined = strong_split(t, report.split, spec);
    CHECK_FALSE(refined.a_prime.empty());
    CHECK(is_strongly_connected(induced_subdigraph(t, refined.a_prime)));
    for (vertex v = 0; v < t.vertex_count(); ++v) {
        const bool in_a = refined.split.in_a(v);
        const int need = spec.threshold_for(t.out_degree(v));
        CHECK(out_degree_side(t, v, refined.split, in_a) >= need);
    }

    // feeding a bisection that violates its own guarantee is an input error
    const bipartition junk(t.vertex_count(), {0});
    CHECK_THROWS_AS(strong_split(t, junk, spec), std::invalid_argument);
}

TEST_CASE("s-minimal size bounds") {
    const auto b12 = s_minimal_size_bound(1, 2);
    CHECK(b12.value == rational(4));
    CHECK(b12.inclusive);
    CHECK(b12.max_vertices == 4);

    const auto b22 = s_minimal_size_bound(2, 2);
    CHECK(b22.value == make_rational(81, 8));
    CHECK(b22.max_vertices == 10);

    const auto b13 = s_minimal_size_bound(1, 3);
    CHECK(b13.value == rational(12));  // max{8, 12}
    CHECK_FALSE(b13.inclusive);
    CHECK(b13.max_vertices == 11);

    CHECK(s_minimal_size_bound(3, 5).value == rational(std::max(2L * 3 * 16, 2L * 5 * 3 * 4)));

    CHECK_THROWS_AS(s_minimal_size_bound(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(s_minimal_size_bound(1, 1), std::invalid_argument);
}

TEST_CASE("peel split works on arbitrary digraphs") {
    const digraph two_cycles(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    const auto res = peel_split(two_cycles, split_spec(1, 1));
    REQUIRE(res.success);
    CHECK(res.split.a().size() == 3);
    for (vertex v = 0; v < 6; ++v)
        CHECK(out_degree_own_side(two_cycles, v, res.split) >= 1);

    // single cycle: the core is everything, so no B side remains
    const digraph cyc(3, {{0, 1}, {1, 2}, {2, 0}});
    const auto whole = peel_split(cyc, split_spec(1, 1));
    CHECK_FALSE(whole.success);
    CHECK_FALSE(whole.failure.empty());

    const digraph path(3, {{0, 1}, {1, 2}});
    CHECK_FALSE(peel_split(path, split_spec(1, 1)).success);
}

TEST_CASE("multipartite split on the C4 boundary case") {
    const digraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, std::vector<int>{0, 1, 0, 1});
    CHECK(minimal_core(c4, all_vertices(c4), 1) == std::vector<vertex>{0, 1, 2, 3});

    const auto res = split_multipartite(c4, split_spec(1, 1));
    CHECK_FALSE(res.success);
    CHECK_FALSE(res.hypothesis_met);  // delta+ = 1 < 1 + 4 - 1
    CHECK_FALSE(res.failure.empty());
    CHECK_THROWS_AS(split_multipartite(c4, split_spec(1, 1), true), std::invalid_argument);

    CHECK_THROWS_AS(split_multipartite(digraph(3, {{0, 1}}), split_spec(1, 1)),
                    std::invalid_argument);  // no part structure
}

TEST_CASE("multipartite split at scale") {
    const auto d = random_k_partite_tournament({200, 200}, 5);
    REQUIRE(rational(d.min_out_degree()) >= rational(3) + make_rational(81, 8) - rational(2));
    const auto res = split_multipartite(d, split_spec(2, 3));
    REQUIRE(res.success);
    CHECK(res.hypothesis_met);
    CHECK(res.split.a().size() <= 10);  // s_minimal_size_bound(2, 2)
    for (vertex v = 0; v < d.vertex_count(); ++v) {
        const bool in_a = res.split.in_a(v);
        CHECK(out_degree_side(d, v, res.split, in_a) >= (in_a ? 2 : 3));
    }
}

TEST_CASE("s-minimality") {
    const digraph cyc(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(is_s_minimal(cyc, 1));

    const digraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, std::vector<int>{0, 1, 0, 1});
    CHECK(is_s_minimal(c4, 1));
    CHECK(c4.vertex_count() == s_minimal_size_bound(1, 2).max_vertices);  // the bound is tight

    CHECK(is_s_minimal(rotational_tournament(5), 2));
    CHECK_FALSE(is_s_minimal(rotational_tournament(7), 1));  // out-degrees exceed 1
    CHECK_FALSE(is_s_minimal(transitive_tournament(3), 1));
    // two disjoint cycles: deleting one cycle keeps delta+ = 1
    const digraph two_cycles(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    CHECK_FALSE(is_s_minimal(two_cycles, 1));
}
