// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails.  Tolerances are pinned in code; exact-rational checks use
// zero tolerance.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "degsplit/degsplit.hpp"

using namespace degsplit;

namespace {

struct failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw failure(what);
}

// ---- criterion 1: probability-oracle equivalence, exact rationals --------
void criterion_probability_oracle() {
    for (std::uint64_t i = 0; i < 100; ++i) {
        const int n = 4 + static_cast<int>(i % 11);  // 4..14
        const digraph d = random_tournament(n, i);
        const pairing p = random_pairing(d, splitmix64(i ^ 0xabcdef));
        for (vertex v = 0; v < n; ++v) {
            const pair_profile prof = make_pair_profile(d, v, p);
            const auto pmf = exact_xv_distribution(d, v, p);
            for (int t = 0; t <= prof.dplus + 1; ++t) {
                require(pmf_mass_below(pmf, t) == prob_too_few(prof, t),
                        "too-few mismatch at seed " + std::to_string(i) + " v " +
                            std::to_string(v) + " t " + std::to_string(t));
                require(pmf_mass_above(pmf, prof.dplus - t) == prob_too_many(prof, t),
                        "too-many mismatch at seed " + std::to_string(i) + " v " +
                            std::to_string(v) + " t " + std::to_string(t));
            }
        }
    }
}

// ---- criterion 2: monotonicity identity, strict and exact ----------------
void criterion_monotone_envelope() {
    long checked = 0;
    for (int t = 2; t <= 15; ++t)
        for (int a = 1; a < t; ++a)
            for (int b = 1; b <= 60; ++b) {
                if (2 * a + b <= 2 * t) continue;
                require(monotone_f(a - 1, b + 2, t) > monotone_f(a, b, t),
                        "f(a-1,b+2) <= f(a,b) at a=" + std::to_string(a) +
                            " b=" + std::to_string(b) + " t=" + std::to_string(t));
                ++checked;
            }
    require(checked > 4000, "monotonicity range unexpectedly small");
}

// ---- criterion 3: chernoff domination up to N = 300 ----------------------
void criterion_chernoff_domination() {
    for (long n = 3; n <= 300; ++n)
        for (long k = 1; 2 * k < n; ++k) {
            const double sigma = 0.5 - static_cast<double>(k) / static_cast<double>(n);
            const double rhs = std::exp(-2.0 * static_cast<double>(n) * sigma * sigma);
            require(rational_to_double(binomial_tail(n, k)) < rhs + 1e-12,
                    "tail not dominated at N=" + std::to_string(n) + " k=" + std::to_string(k));
        }
}

// ---- criterion 4: delta0(0.2) = 512 ---------------------------------------
void criterion_delta0() {
    require(pairing_bisection_delta0(0.2) == 512,
            "delta0(0.2) = " + std::to_string(pairing_bisection_delta0(0.2)));
}

// shared by criteria 5 and 6
std::vector<sample_report> sampler_reports(int count) {
    static std::vector<sample_report> cache;
    const auto rot = rotational_tournament(1001);
    const auto spec = bad_threshold::relative(make_rational(1, 5));
    while (static_cast<int>(cache.size()) < count) {
        const auto seed = static_cast<std::uint64_t>(1000 + cache.size());
        cache.push_back(find_good_bisection(rot, spec, 5, seed));
    }
    return {cache.begin(), cache.begin() + count};
}

// ---- criterion 5: pairing sampler at desk scale ----------------------------
void criterion_sampler() {
    const auto rot = rotational_tournament(1001);
    const auto reports = sampler_reports(50);
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& rep = reports[i];
        require(rep.success(), "sampler failed within 5 trials at seed index " + std::to_string(i));
        require(rep.trials_used <= 5, "sampler exceeded 5 trials");
        require(rep.split.is_bisection(), "sampler output is not a bisection");
        for (vertex v = 0; v < 1001; ++v) {
            const int own = out_degree_own_side(rot, v, rep.split);
            require(std::min(own, rot.out_degree(v) - own) >= 150,
                    "threshold violated at vertex " + std::to_string(v));
        }
    }
}

// ---- criterion 6: strong-split pipeline -------------------------------------
void criterion_strong_split() {
    const auto rot = rotational_tournament(1001);
    const auto spec = bad_threshold::relative(make_rational(1, 5));
    const auto reports = sampler_reports(20);
    for (const auto& rep : reports) {
        const auto refined = strong_split(rot, rep.split, spec);
        require(!refined.a_prime.empty(), "empty strong side");
        require(is_strongly_connected(induced_subdigraph(rot, refined.a_prime)),
                "refined A side is not strong");
        for (vertex v = 0; v < 1001; ++v) {
            const bool in_a = refined.split.in_a(v);
            require(out_degree_side(rot, v, refined.split, in_a) >=
                        spec.threshold_for(rot.out_degree(v)),
                    "refined threshold violated at vertex " + std::to_string(v));
        }
    }
}

// ---- criterion 7: weighted-LLL resampler pipeline ---------------------------
void criterion_lll_pipeline() {
    const auto rot = rotational_tournament(1001);
    const auto spec = bad_threshold::relative(make_rational(1, 4));
    for (std::uint64_t i = 0; i < 10; ++i) {
        const digraph d = disjoint_union(rot, random_tournament(1001, 9000 + i));
        const auto check = check_weighted_lll(d, 0.25);
        require(check.pass(), "instance " + std::to_string(i) + " fails the LLL check");
        const auto rep = moser_tardos_split(d, make_rational(1, 4), 40 + i, 1000000);
        require(rep.success(), "resampler exhausted on instance " + std::to_string(i));
        require(bad_vertices(d, rep.split, spec).empty(), "resampler output has bad vertices");
        require(rep.split.is_bisection(), "resampler output is not a bisection");
    }
}

// ---- criterion 8: minimal-scan tightness and size bound ---------------------
void criterion_minimal_scan() {
    require(s_minimal_size_bound(1, 2).max_vertices == 4, "s_minimal_size_bound(1,2) != 4");
    const auto found = exhaustive_bipartite_minimal_scan(3, 1);
    bool c4_seen = false;
    for (const auto& d : found) {
        require(d.vertex_count() <= 4,
                "1-minimal instance with " + std::to_string(d.vertex_count()) + " vertices");
        if (d.vertex_count() == 4 && is_strongly_connected(d)) c4_seen = true;
    }
    require(c4_seen, "C4 not found by the scan");
}

// ---- criterion 9: multipartite constructive split ---------------------------
void criterion_multipartite_split() {
    const rational hypothesis = rational(3) + make_rational(81, 8) - rational(2);
    int produced = 0;
    std::uint64_t seed = 0;
    while (produced < 100) {
        const digraph d = random_k_partite_tournament({200, 200}, 5000 + seed++);
        if (rational(d.min_out_degree()) < hypothesis) continue;  // regenerate
        ++produced;
        const auto res = split_multipartite(d, split_spec(2, 3));
        require(res.success, "split failed: " + res.failure);
        require(res.hypothesis_met, "hypothesis flag wrong");
        require(res.split.a().size() <= 10, "core larger than s_minimal_size_bound(2,2)");
        for (vertex v = 0; v < d.vertex_count(); ++v) {
            const bool in_a = res.split.in_a(v);
            require(out_degree_side(d, v, res.split, in_a) >= (in_a ? 2 : 3),
                    "split verification failed at vertex " + std::to_string(v));
        }
    }
}

// ---- criterion 10: f(1,1) = 3 consistency ----------------------------------
void criterion_f11_consistency() {
    for (std::uint64_t i = 0; i < 500; ++i) {
        const int n = 8 + static_cast<int>(i % 9);  // 8..16
        const digraph d = random_digraph_min_outdegree(n, 3, i);
        const auto witness = exists_split(d, 1, 1);
        require(witness.has_value(), "no (1,1)-split at seed " + std::to_string(i));
        for (vertex v = 0; v < n; ++v)
            require(out_degree_own_side(d, v, *witness) >= 1, "witness fails re-validation");
    }
}

// ---- criterion 11: sampler-distribution consistency ------------------------
void criterion_monte_carlo() {
    const int trials = 100000;
    const auto spec = bad_threshold::relative(make_rational(1, 5));
    for (int inst = 0; inst < 10; ++inst) {
        const int n = 30 + 2 * inst;  // 30..48
        const digraph d = random_tournament(n, 7000 + inst);
        const pairing p = random_pairing(d, 7100 + inst);

        std::vector<int> too_few(n, 0), too_many(n, 0);
        for (int k = 0; k < trials; ++k) {
            const bipartition split = sample_split(p, derive_stream_seed(7200 + inst, k));
            for (vertex v = 0; v < n; ++v) {
                const int x = out_degree_own_side(d, v, split);
                const int t = spec.threshold_for(d.out_degree(v));
                too_few[v] += x < t;
                too_many[v] += x > d.out_degree(v) - t;
            }
        }
        for (vertex v = 0; v < n; ++v) {
            const pair_profile prof = make_pair_profile(d, v, p);
            const int t = spec.threshold_for(prof.dplus);
            const double exact_few = rational_to_double(prob_too_few(prof, t));
            const double exact_many = rational_to_double(prob_too_many(prof, t));
            for (const auto& [exact, count] :
                 {std::pair{exact_few, too_few[v]}, std::pair{exact_many, too_many[v]}}) {
                const double freq = static_cast<double>(count) / trials;
                const double sigma = std::sqrt(exact * (1.0 - exact) / trials);
                require(std::abs(freq - exact) <= 4.0 * sigma + 1e-15,
                        "frequency off by more than 4 sigma at instance " + std::to_string(inst) +
                            " vertex " + std::to_string(v));
            }
        }
    }
}

struct criterion {
    int id;
    const char* name;
    std::function<void()> run;
};

}  // namespace

int main() {
    const std::vector<criterion> criteria{
        {1, "probability-oracle equivalence (exact rationals)", criterion_probability_oracle},
        {2, "monotone envelope f(a-1,b+2) > f(a,b), exact", criterion_monotone_envelope},
        {3, "chernoff domination of binomial tails, N <= 300", criterion_chernoff_domination},
        {4, "delta0(0.2) = 512", criterion_delta0},
        {5, "pairing sampler: 50 seeds, n = 1001, <= 5 trials", criterion_sampler},
        {6, "strong split pipeline on 20 sampler outputs", criterion_strong_split},
        {7, "weighted-LLL resampler: 10 checked instances", criterion_lll_pipeline},
        {8, "exhaustive 1-minimal bipartite scan, parts <= 3", criterion_minimal_scan},
        {9, "multipartite (2,3)-splits on 100 instances", criterion_multipartite_split},
        {10, "f(1,1) = 3: 500 min-out-degree-3 digraphs", criterion_f11_consistency},
        {11, "monte carlo consistency within 4 sigma", criterion_monte_carlo},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string message;
        try {
            c.run();
        } catch (const std::exception& e) {
            message = e.what();
        }
        const auto secs =
            std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start).count() / 1000.0;
        if (message.empty()) {
            std::printf("[PASS] criterion %2d: %s (%.1fs)\n", c.id, c.name, secs);
        } else {
            std::printf("[FAIL] criterion %2d: %s (%.1fs): %s\n", c.id, c.name, secs,
                        message.c_str());
            ++failures;
        }
        std::fflush(stdout);
    }
    if (failures) std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
