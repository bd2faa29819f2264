// degsplit -- batch CLI over the library: instance generation, the three
// split methods, probability queries, analytic bounds, verification of
// claimed artifacts, exhaustive oracles, and experiment sweeps.
//
// Exit codes: 0 success, 1 usage or validation error, 2 structured
// algorithmic failure (sampler exhausted, verification rejected, certified
// "none exists").  Every failure also emits a JSON diagnostic on stderr.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "degsplit/degsplit.hpp"
#include "degsplit/report_json.hpp"

namespace {

using namespace degsplit;

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_failure = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    out << content;
}

digraph read_digraph(const std::string& path) { return read_edge_list(read_file(path)); }

int emit_failure(const std::string& type, const std::string& message) {
    std::cerr << error_json(type, message).dump(2) << '\n';
    return exit_failure;
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            values.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string(what) + ": cannot parse '" + item + "'");
        }
    }
    if (values.empty()) throw std::invalid_argument(std::string(what) + ": empty list");
    return values;
}

struct generate_options {
    std::string family;
    int n = 0;
    std::string sizes;
    int d = 3;
    std::uint64_t seed = 0;
    std::string out;
};

int run_generate(const generate_options& opt) {
    digraph d = [&] {
        if (opt.family == "tournament") return random_tournament(opt.n, opt.seed);
        if (opt.family == "rotational") return rotational_tournament(opt.n);
        if (opt.family == "kpartite")
            return random_k_partite_tournament(parse_int_list(opt.sizes, "--sizes"), opt.seed);
        if (opt.family == "minout") return random_digraph_min_outdegree(opt.n, opt.d, opt.seed);
        throw std::invalid_argument("unknown family: " + opt.family);
    }();
    write_output(write_edge_list(d), opt.out);
    return exit_ok;
}

struct split_options {
    std::string in;
    std::string method = "pairing";
    std::string eps;
    int s = 0;
    int t = 0;
    std::uint64_t seed = 0;
    int max_trials = 64;
    std::int64_t max_resamples = 1000000;
    bool enforce_hypothesis = false;
    int jobs = 1;
    std::string out;
};

int run_split(const split_options& opt) {
    const digraph d = read_digraph(opt.in);

    if (opt.method == "pairing" || opt.method == "lll") {
        if (opt.eps.empty())
            throw std::invalid_argument("--method " + opt.method + " requires --eps");
        const rational eps = parse_rational(opt.eps);
        const bad_threshold spec = bad_threshold::relative(eps);

        json params{{"epsilon", rational_to_string(eps)}};
        bipartition split(d.vertex_count(), {});
        json stats;
        bool ok = false;
        if (opt.method == "pairing") {
            params["max_trials"] = opt.max_trials;
            auto rep = find_good_bisection(d, spec, opt.max_trials, opt.seed, opt.jobs);
            ok = rep.success();
            stats = json{{"trials_used", rep.trials_used},
                         {"bad_count", rep.bad.size()},
                         {"bad", bad_list_json(rep.bad)}};
            split = std::move(rep.split);
        } else {
            params["max_resamples"] = opt.max_resamples;
            auto rep = moser_tardos_split(d, eps, opt.seed, opt.max_resamples);
            ok = rep.success();
            stats = json{{"resamples_used", rep.resamples_used},
                         {"bad_count", rep.bad.size()},
                         {"bad", bad_list_json(rep.bad)},
                         {"lll_check_pass", check_weighted_lll(d, rational_to_double(eps)).pass()}};
            split = std::move(rep.split);
        }
        const bool verified = ok && split.is_bisection() && bad_vertices(d, split, spec).empty();
        write_output(split_report_json(opt.method, opt.seed, params, split, stats, verified)
                         .dump(2),
                     opt.out);
        if (!ok)
            return emit_failure("split_failed",
                                opt.method + " exhausted its budget with bad vertices left");
        return exit_ok;
    }

    if (opt.method == "peel") {
        if (opt.s < 1 || opt.t < 1)
            throw std::invalid_argument("--method peel requires --s and --t");
        json params{{"s", opt.s}, {"t", opt.t}, {"k", d.part_count()}};
        json stats;
        bool ok = false;
        bipartition split(d.vertex_count(), {});
        std::string why;
        if (d.part_count() >= 2) {
            // multipartite tournaments get the hypothesis bookkeeping
            auto res = split_multipartite(d, split_spec(opt.s, opt.t), opt.enforce_hypothesis);
            ok = res.success;
            why = res.failure;
            stats["hypothesis_met"] = res.hypothesis_met;
            stats["required_min_outdegree"] = rational_to_string(res.required_min_outdegree);
            split = std::move(res.split);
        } else {
            auto res = peel_split(d, split_spec(opt.s, opt.t));
            ok = res.success;
            why = res.failure;
            split = std::move(res.split);
        }
        stats["a_size"] = split.a().size();
        if (!why.empty()) stats["failure"] = why;
        write_output(split_report_json("peel", 0, params, split, stats, ok).dump(2), opt.out);
        if (!ok) return emit_failure("split_failed", why);
        return exit_ok;
    }
    throw std::invalid_argument("unknown method: " + opt.method);
}

struct prob_options {
    std::string profile;
    std::string in;
    std::string pairing_path;
    int vertex_id = -1;
    std::string eps;
    int t = -1;
};

int run_prob(const prob_options& opt) {
    std::optional<pair_profile> prof;
    if (!opt.profile.empty()) {
        const auto fields = [&] {
            std::vector<std::string> out;
            std::stringstream ss(opt.profile);
            std::string item;
            while (std::getline(ss, item, ',')) out.push_back(item);
            return out;
        }();
        if (fields.size() != 3)
            throw std::invalid_argument("--profile expects a,b,rel with rel in nplus|nminus|single");
        const partner_rel rel = fields[2] == "nplus"    ? partner_rel::partner_in_nplus
                                : fields[2] == "nminus" ? partner_rel::partner_in_nminus
                                : fields[2] == "single"
                                    ? partner_rel::singleton
                                    : throw std::invalid_argument("unknown partner relation: " +
                                                                  fields[2]);
        prof = pair_profile(std::stoi(fields[0]), std::stoi(fields[1]), rel);
    } else {
        if (opt.in.empty() || opt.pairing_path.empty() || opt.vertex_id < 0)
            throw std::invalid_argument("prob needs either --profile or --in/--pairing/--vertex");
        const digraph d = read_digraph(opt.in);
        const pairing p = read_pairing(read_file(opt.pairing_path), d.vertex_count());
        prof = make_pair_profile(d, opt.vertex_id, p);
    }

    std::optional<rational> eps;
    int t = opt.t;
    if (!opt.eps.empty()) {
        eps = parse_rational(opt.eps);
        t = bad_threshold::relative(*eps).threshold_for(prof->dplus);
    }
    if (t < 0) throw std::invalid_argument("prob needs --t or --eps");

    const rational few = prob_too_few(*prof, t);
    const rational many = prob_too_many(*prof, t);
    json out;
    out["profile"] = {{"a", prof->a},
                      {"b", prof->b},
                      {"rel", prof->rel == partner_rel::partner_in_nplus    ? "nplus"
                              : prof->rel == partner_rel::partner_in_nminus ? "nminus"
                                                                            : "single"},
                      {"dplus", prof->dplus}};
    out["t"] = t;
    out["prob_too_few"] = rational_to_string(few);
    out["prob_too_many"] = rational_to_string(many);
    out["prob_too_few_float"] = rational_to_double(few);
    out["prob_too_many_float"] = rational_to_double(many);
    out["prob_bad"] = rational_to_string(few + many);
    if (eps) {
        const auto cap = chernoff_cap(prof->dplus, rational_to_double(*eps));
        out["chernoff_cap"] = cap ? json(*cap) : json(nullptr);
    }
    std::cout << out.dump(2) << '\n';
    return exit_ok;
}

struct verify_options {
    std::string in;
    std::string split_path;
    std::string eps;
    int s = 0;
    int t = 0;
    bool lll = false;
    bool minimal = false;
};

int run_verify(const verify_options& opt) {
    const digraph d = read_digraph(opt.in);

    if (opt.lll) {
        if (opt.eps.empty()) throw std::invalid_argument("verify --lll requires --eps");
        const auto rep = check_weighted_lll(d, rational_to_double(parse_rational(opt.eps)));
        json out{{"delta_plus", rep.delta_plus},
                 {"max_indegree", rep.max_indegree},
                 {"p", rep.p},
                 {"p_le_quarter", rep.p_le_quarter},
                 {"cond_a_all", rep.cond_a_all},
                 {"cond_b_all", rep.cond_b_all},
                 {"worst_b_lhs", rep.worst_b_lhs},
                 {"admissible_indegree", rep.admissible_indegree},
                 {"indegree_ok", rep.indegree_ok},
                 {"delta0", rep.delta0},
                 {"delta_ok", rep.delta_ok},
                 {"pass", rep.pass()},
                 {"hypothesis_met", rep.hypothesis_met()}};
        std::cout << out.dump(2) << '\n';
        return rep.pass() ? exit_ok : emit_failure("lll_conditions", "weighted LLL conditions fail");
    }

    if (opt.split_path.empty()) throw std::invalid_argument("verify requires --split or --lll");
    const json report = json::parse(read_file(opt.split_path));
    const bipartition split = split_from_report(report, d.vertex_count());

    json checks;
    bool valid = true;
    if (!opt.eps.empty()) {
        const bad_threshold spec = bad_threshold::relative(parse_rational(opt.eps));
        const auto bad = bad_vertices(d, split, spec);
        checks["is_bisection"] = split.is_bisection();
        checks["bad_count"] = bad.size();
        checks["bad"] = bad_list_json(bad);
        valid = split.is_bisection() && bad.empty();
    } else if (opt.s >= 1 && opt.t >= 1) {
        bool sides_ok = !split.a().empty() && !split.b().empty();
        vertex violating = -1;
        for (vertex v = 0; sides_ok && v < d.vertex_count(); ++v) {
            const bool in_a = split.in_a(v);
            if (out_degree_side(d, v, split, in_a) < (in_a ? opt.s : opt.t)) {
                sides_ok = false;
                violating = v;
            }
        }
        checks["degrees_ok"] = sides_ok;
        if (violating >= 0) checks["violating_vertex"] = violating;
        valid = sides_ok;
        if (opt.minimal) {
            bool minimal_ok = valid;
            const auto& a = split.a();
            if (minimal_ok && max_core(d, a, opt.s).size() != a.size()) minimal_ok = false;
            for (std::size_t i = 0; minimal_ok && i < a.size(); ++i) {
                std::vector<vertex> without;
                for (std::size_t j = 0; j < a.size(); ++j)
                    if (j != i) without.push_back(a[j]);
                if (!max_core(d, without, opt.s).empty()) minimal_ok = false;
            }
            checks["a_is_minimal_core"] = minimal_ok;
            valid = valid && minimal_ok;
        }
    } else {
        throw std::invalid_argument("verify requires --eps or --s/--t");
    }

    json out{{"valid", valid}, {"checks", checks}};
    std::cout << out.dump(2) << '\n';
    return valid ? exit_ok : emit_failure("verification", "claimed split does not verify");
}

struct bound_options {
    std::vector<std::string> delta0;
    std::vector<int> lemma2;
    std::vector<std::string> max_indegree;
};

int run_bound(const bound_options& opt) {
    if (!opt.delta0.empty()) {
        std::cout << pairing_bisection_delta0(rational_to_double(parse_rational(opt.delta0[0]))) << '\n';
        return exit_ok;
    }
    if (!opt.lemma2.empty()) {
        const auto b = s_minimal_size_bound(opt.lemma2[0], opt.lemma2[1]);
        std::cout << rational_to_string(b.value) << '\n';
        return exit_ok;
    }
    if (!opt.max_indegree.empty()) {
        const double eps = rational_to_double(parse_rational(opt.max_indegree[0]));
        const int delta = std::stoi(opt.max_indegree[1]);
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.17g", admissible_max_indegree(eps, delta));
        std::cout << buf << '\n';
        return exit_ok;
    }
    throw std::invalid_argument("bound requires --delta0, --lemma2 or --max-indegree");
}

struct sweep_options {
    std::string mode = "expected";
    std::string family = "rotational";
    std::string eps;
    std::string n;
    int trials = 100;
    std::uint64_t seed = 0;
    int d = 3;
    int jobs = 1;
    std::string out;
};

int run_sweep(const sweep_options& opt) {
    const instance_family family = [&] {
        if (opt.family == "rotational") return instance_family::rotational();
        if (opt.family == "tournament") return instance_family::tournament();
        if (opt.family == "kpartite") return instance_family::k_partite();
        if (opt.family == "minout") return instance_family::min_outdegree(opt.d);
        throw std::invalid_argument("unknown family: " + opt.family);
    }();
    const auto n_list = parse_int_list(opt.n, "--n");
    std::vector<rational> eps_list;
    {
        std::stringstream ss(opt.eps);
        std::string item;
        while (std::getline(ss, item, ',')) eps_list.push_back(parse_rational(item));
        if (eps_list.empty()) throw std::invalid_argument("--eps: empty list");
    }
    std::vector<sweep_row> rows;
    if (opt.mode == "expected") {
        rows = sweep_expected_bad(family, eps_list, n_list, opt.trials, opt.seed, opt.jobs);
    } else if (opt.mode == "success") {
        if (eps_list.size() != 1)
            throw std::invalid_argument("--mode success takes a single --eps");
        rows = sweep_success_threshold(family, eps_list[0], n_list, opt.trials, opt.seed,
                                       opt.jobs);
    } else {
        throw std::invalid_argument("unknown mode: " + opt.mode);
    }
    write_output(to_csv(rows), opt.out);
    return exit_ok;
}

struct oracle_options {
    bool exists_split_mode = false;
    bool xv_dist_mode = false;
    bool scan_minimal_mode = false;
    std::string in;
    int s = 1;
    int t = 1;
    bool bisection = false;
    int vertex_id = -1;
    std::string pairing_path;
    int max_part = 3;
};

int run_oracle(const oracle_options& opt) {
    if (opt.exists_split_mode) {
        const digraph d = read_digraph(opt.in);
        const auto witness = exists_split(d, opt.s, opt.t, opt.bisection);
        json out{{"s", opt.s}, {"t", opt.t}, {"bisection_only", opt.bisection},
                 {"found", witness.has_value()}};
        if (witness) {
            out["A"] = witness->a();
            out["B"] = witness->b();
        }
        std::cout << out.dump(2) << '\n';
        return witness ? exit_ok
                       : emit_failure("no_witness", "exhaustive search certified none exists");
    }
    if (opt.xv_dist_mode) {
        const digraph d = read_digraph(opt.in);
        const pairing p = read_pairing(read_file(opt.pairing_path), d.vertex_count());
        const auto pmf = exact_xv_distribution(d, opt.vertex_id, p);
        json dist = json::object();
        for (const auto& [x, q] : pmf) dist[std::to_string(x)] = rational_to_string(q);
        json out{{"vertex", opt.vertex_id}, {"pmf", dist}};
        std::cout << out.dump(2) << '\n';
        return exit_ok;
    }
    if (opt.scan_minimal_mode) {
        const auto found = exhaustive_bipartite_minimal_scan(opt.max_part, opt.s);
        json instances = json::array();
        for (const auto& d : found)
            instances.push_back({{"n", d.vertex_count()}, {"edge_list", write_edge_list(d)}});
        json out{{"s", opt.s}, {"max_part", opt.max_part}, {"count", found.size()},
                 {"instances", instances}};
        std::cout << out.dump(2) << '\n';
        return exit_ok;
    }
    throw std::invalid_argument("oracle requires --exists-split, --xv-dist or --scan-minimal");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"degree-constrained bipartitions and bisections of digraphs"};
    app.require_subcommand(1);

    generate_options gen;
    auto* cmd_gen = app.add_subcommand("generate", "write a generated instance as an edge list");
    cmd_gen->add_option("--family", gen.family, "tournament|rotational|kpartite|minout")
        ->required();
    cmd_gen->add_option("--n", gen.n, "vertex count");
    cmd_gen->add_option("--sizes", gen.sizes, "part sizes for kpartite, e.g. 200,200");
    cmd_gen->add_option("--d", gen.d, "exact out-degree for minout");
    cmd_gen->add_option("--seed", gen.seed, "rng seed");
    cmd_gen->add_option("--out", gen.out, "output path (default stdout)");

    split_options split;
    auto* cmd_split = app.add_subcommand("split", "compute a degree-constrained split");
    cmd_split->add_option("--in", split.in, "input edge list")->required();
    cmd_split->add_option("--method", split.method, "pairing|lll|peel");
    cmd_split->add_option("--eps", split.eps, "epsilon in (0, 1/2), e.g. 0.2 or 1/5");
    cmd_split->add_option("--s", split.s, "A-side out-degree target (peel)");
    cmd_split->add_option("--t", split.t, "B-side out-degree target (peel)");
    cmd_split->add_option("--seed", split.seed, "rng seed");
    cmd_split->add_option("--max-trials", split.max_trials, "pairing retry budget");
    cmd_split->add_option("--max-resamples", split.max_resamples, "lll resample budget");
    cmd_split->add_flag("--enforce-hypothesis", split.enforce_hypothesis,
                        "error out below the degree hypothesis instead of warning");
    cmd_split->add_option("--jobs", split.jobs, "parallel trial workers")
        ->envname("DEGSPLIT_JOBS");
    cmd_split->add_option("--out", split.out, "report path (default stdout)");

    prob_options prob;
    auto* cmd_prob = app.add_subcommand("prob", "exact bad-probabilities for a profile");
    cmd_prob->add_option("--profile", prob.profile, "a,b,rel with rel in nplus|nminus|single");
    cmd_prob->add_option("--in", prob.in, "input edge list");
    cmd_prob->add_option("--pairing", prob.pairing_path, "pairing file");
    cmd_prob->add_option("--vertex", prob.vertex_id, "vertex id");
    cmd_prob->add_option("--eps", prob.eps, "epsilon; derives t");
    cmd_prob->add_option("--t", prob.t, "threshold t");

    verify_options verify;
    auto* cmd_verify = app.add_subcommand("verify", "recheck a claimed artifact");
    cmd_verify->add_option("--in", verify.in, "input edge list")->required();
    cmd_verify->add_option("--split", verify.split_path, "split report JSON");
    cmd_verify->add_option("--eps", verify.eps, "epsilon thresholds");
    cmd_verify->add_option("--s", verify.s, "A-side target");
    cmd_verify->add_option("--t", verify.t, "B-side target");
    cmd_verify->add_flag("--lll", verify.lll, "print the weighted-LLL condition report");
    cmd_verify->add_flag("--minimal", verify.minimal, "also verify A is a minimal s-core");

    bound_options bound;
    auto* cmd_bound = app.add_subcommand("bound", "print analytic quantities");
    cmd_bound->add_option("--delta0", bound.delta0, "eps")->expected(1);
    cmd_bound->add_option("--lemma2", bound.lemma2, "s k: size bound for s-minimal k-partite tournaments")->expected(2);
    cmd_bound->add_option("--max-indegree", bound.max_indegree, "eps delta")->expected(2);

    sweep_options sweep;
    auto* cmd_sweep = app.add_subcommand("sweep", "grid experiments, CSV output");
    cmd_sweep->add_option("--mode", sweep.mode, "expected|success");
    cmd_sweep->add_option("--family", sweep.family, "rotational|tournament|kpartite|minout");
    cmd_sweep->add_option("--eps", sweep.eps, "epsilon list, e.g. 0.2,0.25")->required();
    cmd_sweep->add_option("--n", sweep.n, "vertex-count list, e.g. 101,201")->required();
    cmd_sweep->add_option("--trials", sweep.trials, "samples per cell");
    cmd_sweep->add_option("--seed", sweep.seed, "master seed");
    cmd_sweep->add_option("--d", sweep.d, "out-degree for the minout family");
    cmd_sweep->add_option("--jobs", sweep.jobs, "parallel cell workers")->envname("DEGSPLIT_JOBS");
    cmd_sweep->add_option("--out", sweep.out, "CSV path (default stdout)");

    oracle_options oracle;
    auto* cmd_oracle = app.add_subcommand("oracle", "exhaustive desk-scale ground truth");
    cmd_oracle->add_flag("--exists-split", oracle.exists_split_mode, "witness search");
    cmd_oracle->add_flag("--xv-dist", oracle.xv_dist_mode, "exact X_v distribution");
    cmd_oracle->add_flag("--scan-minimal", oracle.scan_minimal_mode,
                         "scan bipartite orientations for s-minimal instances");
    cmd_oracle->add_option("--in", oracle.in, "input edge list");
    cmd_oracle->add_option("--s", oracle.s, "A-side target / minimality s");
    cmd_oracle->add_option("--t", oracle.t, "B-side target");
    cmd_oracle->add_flag("--bisection", oracle.bisection, "restrict to bisections");
    cmd_oracle->add_option("--vertex", oracle.vertex_id, "vertex id for --xv-dist");
    cmd_oracle->add_option("--pairing", oracle.pairing_path, "pairing file for --xv-dist");
    cmd_oracle->add_option("--max-part", oracle.max_part, "part-size cap for --scan-minimal");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << error_json("usage", e.what()).dump(2) << '\n';
        return exit_usage;
    }

    try {
        if (cmd_gen->parsed()) return run_generate(gen);
        if (cmd_split->parsed()) return run_split(split);
        if (cmd_prob->parsed()) return run_prob(prob);
        if (cmd_verify->parsed()) return run_verify(verify);
        if (cmd_bound->parsed()) return run_bound(bound);
        if (cmd_sweep->parsed()) return run_sweep(sweep);
        if (cmd_oracle->parsed()) return run_oracle(oracle);
    } catch (const std::invalid_argument& e) {
        std::cerr << error_json("validation", e.what()).dump(2) << '\n';
        return exit_usage;
    } catch (const std::out_of_range& e) {
        std::cerr << error_json("validation", e.what()).dump(2) << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << error_json("internal", e.what()).dump(2) << '\n';
        return exit_usage;
    }
    return exit_usage;
}
