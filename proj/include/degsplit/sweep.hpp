#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "degsplit/digraph.hpp"
#include "degsplit/generators.hpp"
#include "degsplit/pairing.hpp"
#include "degsplit/probability.hpp"
#include "degsplit/rng.hpp"

namespace degsplit {

/// Instance family for experiment grids.
struct instance_family {
    enum class kind { rotational, tournament, k_partite, min_outdegree };
    kind type = kind::tournament;
    int out_degree_d = 3;  // min_outdegree family

    static instance_family rotational() { return {kind::rotational, 0}; }
    static instance_family tournament() { return {kind::tournament, 0}; }
    static instance_family k_partite() { return {kind::k_partite, 0}; }
    static instance_family min_outdegree(int d) { return {kind::min_outdegree, d}; }

    std::string name() const {
        switch (type) {
            case kind::rotational: return "rotational";
            case kind::tournament: return "tournament";
            case kind::k_partite: return "kpartite";
            case kind::min_outdegree: return "minout";
        }
        return "?";
    }
};

inline digraph make_instance(const instance_family& family, int n, std::uint64_t seed) {
    switch (family.type) {
        case instance_family::kind::rotational:
            return rotational_tournament(n);
        case instance_family::kind::tournament:
            return random_tournament(n, seed);
        case instance_family::kind::k_partite:
            return random_k_partite_tournament({n / 2, n - n / 2}, seed);
        case instance_family::kind::min_outdegree:
            return random_digraph_min_outdegree(n, family.out_degree_d, seed);
    }
    throw std::logic_error("make_instance: unreachable");
}

/// One grid cell.  Absent columns stay empty in the CSV and are never
/// reused for other quantities.
struct sweep_row {
    rational epsilon;
    int n = 0;
    std::uint64_t seed = 0;
    int trials = 0;
    std::optional<double> mean_bad;
    std::optional<double> stderr_bad;
    std::optional<double> exact_ex;
    std::optional<double> analytic_bound;
    std::optional<double> success_rate;
};

inline const char* sweep_csv_header() {
    return "epsilon,n,seed,trials,mean_bad,stderr_bad,exact_EX,analytic_bound,success_rate";
}

namespace detail {

inline std::string format_double(double x, const char* fmt = "%.17g") {
    char buf[64];
    std::snprintf(buf, sizeof(buf), fmt, x);
    return buf;
}

inline std::string csv_cell(const std::optional<double>& x) {
    return x ? format_double(*x) : std::string();
}

/// Deterministic parallel map: slot i always receives fn(i), whatever the
/// worker count.
template <typename Fn>
void parallel_cells(int count, int jobs, Fn&& fn) {
    if (jobs < 2 || count < 2) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> workers;
    const int used = std::min(jobs, count);
    workers.reserve(used);
    for (int w = 0; w < used; ++w)
        workers.emplace_back([&, w] {
            for (int i = w; i < count; i += used) fn(i);
        });
    for (auto& t : workers) t.join();
}

}  // namespace detail

inline std::string to_csv(const std::vector<sweep_row>& rows) {
    std::string out = sweep_csv_header();
    out += '\n';
    for (const auto& r : rows) {
        out += detail::format_double(rational_to_double(r.epsilon), "%g");
        out += ',' + std::to_string(r.n);
        out += ',' + std::to_string(r.seed);
        out += ',' + std::to_string(r.trials);
        out += ',' + detail::csv_cell(r.mean_bad);
        out += ',' + detail::csv_cell(r.stderr_bad);
        out += ',' + detail::csv_cell(r.exact_ex);
        out += ',' + detail::csv_cell(r.analytic_bound);
        out += ',' + detail::csv_cell(r.success_rate);
        out += '\n';
    }
    return out;
}

/// Expected-bad-count comparison: per (eps, n) cell, the analytic bound
/// sum_v 2 e^{-eps^2 (d+ - 1)} (empty when the Chernoff cap is invalid), the
/// exact E(X) for one fixed pairing, and the Monte Carlo mean bad count over
/// `trials` independent re-splits of that same pairing, with its standard
/// error.  Cells draw from substreams of (seed, cell index), so rows are
/// reproducible bit for bit and independent of the jobs count.
inline std::vector<sweep_row> sweep_expected_bad(const instance_family& family,
                                                 const std::vector<rational>& eps_list,
                                                 const std::vector<int>& n_list, int trials,
                                                 std::uint64_t seed, int jobs = 1) {
    if (eps_list.empty() || n_list.empty())
        throw std::invalid_argument("sweep_expected_bad: empty grid");
    if (trials < 1) throw std::invalid_argument("sweep_expected_bad: trials must be >= 1");
    for (const auto& eps : eps_list)
        if (!(eps > 0 && eps < make_rational(1, 2)))
            throw std::invalid_argument("sweep_expected_bad: eps outside (0, 1/2)");

    const int cells = static_cast<int>(eps_list.size() * n_list.size());
    std::vector<sweep_row> rows(cells);
    detail::parallel_cells(cells, jobs, [&](int cell) {
        const rational& eps = eps_list[cell / n_list.size()];
        const int n = n_list[cell % n_list.size()];
        const std::uint64_t cell_seed = derive_stream_seed(seed, cell);
        const digraph d = make_instance(family, n, cell_seed);
        const bad_threshold spec = bad_threshold::relative(eps);
        const pairing p = random_pairing(d, derive_stream_seed(cell_seed, 0));

        sweep_row row;
        row.epsilon = eps;
        row.n = n;
        row.seed = cell_seed;
        row.trials = trials;
        row.exact_ex = rational_to_double(expected_bad_exact(d, p, spec));
        if (auto bound = expected_bad_upper(d, rational_to_double(eps))) row.analytic_bound = bound;

        double sum = 0.0, sum_sq = 0.0;
        for (int k = 0; k < trials; ++k) {
            const bipartition split = sample_split(p, derive_stream_seed(cell_seed, k + 1));
            const auto bad = bad_vertices(d, split, spec);
            const double x = static_cast<double>(bad.size());
            sum += x;
            sum_sq += x * x;
        }
        const double mean = sum / trials;
        row.mean_bad = mean;
        if (trials > 1)
            row.stderr_bad = std::sqrt(std::max(0.0, sum_sq - trials * mean * mean) /
                                       (static_cast<double>(trials) * (trials - 1)));
        rows[cell] = std::move(row);
    });
    return rows;
}

/// Success-frontier scan: per n, the fraction of single-shot samples (one
/// pairing + one split) with zero bad vertices.  The empirical frontier is
/// reported, never asserted as the analytic delta_0 -- that bound is
/// sufficient, not necessary.
inline std::vector<sweep_row> sweep_success_threshold(const instance_family& family,
                                                      const rational& eps,
                                                      const std::vector<int>& n_list, int trials,
                                                      std::uint64_t seed, int jobs = 1) {
    if (n_list.empty()) throw std::invalid_argument("sweep_success_threshold: empty grid");
    if (trials < 1) throw std::invalid_argument("sweep_success_threshold: trials must be >= 1");
    if (!(eps > 0 && eps < make_rational(1, 2)))
        throw std::invalid_argument("sweep_success_threshold: eps outside (0, 1/2)");

    const int cells = static_cast<int>(n_list.size());
    std::vector<sweep_row> rows(cells);
    detail::parallel_cells(cells, jobs, [&](int cell) {
        const int n = n_list[cell];
        const std::uint64_t cell_seed = derive_stream_seed(seed, cell);
        const digraph d = make_instance(family, n, cell_seed);
        const bad_threshold spec = bad_threshold::relative(eps);

        int successes = 0;
        for (int k = 0; k < trials; ++k)
            successes += find_good_bisection(d, spec, 1, derive_stream_seed(cell_seed, k)).success();

        sweep_row row;
        row.epsilon = eps;
        row.n = n;
        row.seed = cell_seed;
        row.trials = trials;
        row.success_rate = static_cast<double>(successes) / trials;
        rows[cell] = std::move(row);
    });
    return rows;
}

}  // namespace degsplit
