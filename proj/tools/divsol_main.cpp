// Command-line front end: solve (the FPT algorithms), oracle (brute-force
// cross-check), gen (instance generators), and check (re-verify an emitted
// result file). Exit codes: 0 feasible and target met (or no target), 1
// feasible but target missed, 2 infeasible, 3 input error.

#include "divsol/core.hpp"
#include "divsol/flow.hpp"
#include "divsol/io.hpp"
#include "divsol/oracle.hpp"
#include "divsol/solvers.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitTargetMissed = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitInputError = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw divsol::ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

divsol::ProblemKind problem_from(const std::string& name) {
    if (name == "hitting-set") return divsol::ProblemKind::hitting_set;
    if (name == "vertex-cover") return divsol::ProblemKind::vertex_cover;
    if (name == "fvs") return divsol::ProblemKind::fvs;
    throw divsol::ParseError("unknown problem '" + name + "'");
}

struct CommonFlags {
    std::string problem = "hitting-set";
    std::string measure = "total";
    int k = 0;
    int r = 1;
    int t = -1;
    bool has_t = false;
    std::string input;
    std::string format = "json";
    int parallel = 1;
    long long tuple_budget = 10'000'000;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--problem", f.problem, "hitting-set | vertex-cover | fvs")
        ->check(CLI::IsMember({"hitting-set", "vertex-cover", "fvs"}));
    cmd->add_option("--measure", f.measure, "total | min")
        ->check(CLI::IsMember({"total", "min"}));
    cmd->add_option("-k", f.k, "per-solution size budget")->required();
    cmd->add_option("-r", f.r, "number of solutions")->required();
    cmd->add_option("-t", f.t, "diversity target")->check(CLI::NonNegativeNumber);
    cmd->add_option("-i,--input", f.input, "instance file")->required();
    cmd->add_option("--format", f.format, "json | text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--parallel", f.parallel, "worker threads for the tuple scan")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--tuple-budget", f.tuple_budget, "largest tuple count to enumerate")
        ->check(CLI::PositiveNumber);
}

struct LoadedInstance {
    divsol::HypergraphInstance hypergraph;
    divsol::SimpleGraph graph;
    bool is_graph = false;
};

LoadedInstance load_instance(divsol::ProblemKind problem, const std::string& path) {
    LoadedInstance inst;
    std::string text = read_file(path);
    if (problem == divsol::ProblemKind::hitting_set) {
        inst.hypergraph = divsol::parse_hypergraph(text);
    } else {
        std::vector<std::string> warnings;
        inst.graph = divsol::parse_graph(text, &warnings);
        inst.is_graph = true;
        for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
    }
    return inst;
}

divsol::DiverseQuery make_query(const CommonFlags& f) {
    divsol::DiverseQuery q;
    q.problem = problem_from(f.problem);
    q.measure = f.measure == "total" ? divsol::Measure::total : divsol::Measure::min;
    q.k = f.k;
    q.r = f.r;
    if (f.has_t) q.t = f.t;
    return q;
}

int report(const divsol::DiverseResult& res, const divsol::DiverseQuery& q,
           const std::string& format) {
    std::cout << divsol::emit_result(
        res, q, format == "json" ? divsol::OutputFormat::json : divsol::OutputFormat::text);
    if (!res.feasible) return kExitInfeasible;
    if (res.meets_target && !*res.meets_target) return kExitTargetMissed;
    return kExitOk;
}

int run_solve(const CommonFlags& f, const std::string& dump_path, bool early_exit) {
    divsol::DiverseQuery q = make_query(f);
    LoadedInstance inst = load_instance(q.problem, f.input);
    divsol::SolveOptions opts{.threads = f.parallel, .tuple_budget = f.tuple_budget};
    if (early_exit && q.t) opts.early_exit_target = *q.t;
    divsol::DiverseResult res =
        divsol::solve_query(q, inst.is_graph ? nullptr : &inst.hypergraph,
                            inst.is_graph ? &inst.graph : nullptr, opts);

    if (!dump_path.empty() && res.feasible && q.measure == divsol::Measure::total) {
        // Re-solve the reported tuple's network and dump arcs with flow.
        const divsol::SolutionTuple& tuple = *res.tuple;
        divsol::FlowNetwork net =
            divsol::build_network(inst.is_graph ? inst.graph.n : inst.hypergraph.n,
                                  tuple.sets, q.k);
        divsol::max_cost_augment(net);
        std::ofstream out(dump_path);
        divsol::dump_network(net, out);
    }
    return report(res, q, f.format);
}

int run_oracle(const CommonFlags& f, int enum_cap) {
    divsol::DiverseQuery q = make_query(f);
    LoadedInstance inst = load_instance(q.problem, f.input);
    divsol::OracleCaps caps{.max_universe = enum_cap, .max_tuples = f.tuple_budget};

    divsol::FullSolutionCatalog catalog;
    if (q.problem == divsol::ProblemKind::fvs) {
        catalog = divsol::enumerate_all_fvs(inst.graph, q.k, caps);
    } else {
        divsol::HypergraphInstance hs = q.problem == divsol::ProblemKind::vertex_cover
                                            ? divsol::vc_as_hitting_set(inst.graph)
                                            : inst.hypergraph;
        catalog = divsol::enumerate_all_hitting_sets(hs, q.k, caps);
    }
    divsol::BestTuple best = divsol::brute_force_best_tuple(catalog, q.r, q.measure, caps);

    divsol::DiverseResult res;
    if (best.feasible) {
        res.feasible = true;
        res.diversity = best.diversity;
        res.tuple = std::move(best.tuple);
    }
    res = divsol::check_target(std::move(res), q.t);
    return report(res, q, f.format);
}

int run_check(const std::string& instance_path, const std::string& solutions_path,
              const std::string& problem_name, const std::string& measure_name, int k, int r,
              bool has_t, int t) {
    divsol::ProblemKind problem = problem_from(problem_name);
    LoadedInstance inst = load_instance(problem, instance_path);

    nlohmann::json doc = nlohmann::json::parse(read_file(solutions_path));
    if (!doc.contains("feasible") || !doc["feasible"].is_boolean())
        throw divsol::ParseError("result file lacks a boolean 'feasible' key");
    if (!doc["feasible"].get<bool>()) {
        std::cout << "result file reports infeasible; nothing to verify\n";
        return kExitInfeasible;
    }

    divsol::SolutionTuple tuple;
    tuple.k = k;
    for (const auto& arr : doc.at("solutions"))
        tuple.sets.emplace_back(arr.get<std::vector<divsol::ElementId>>());

    auto fail = [](const std::string& why) {
        std::cerr << "check failed: " << why << '\n';
        return kExitInputError;
    };
    if (tuple.r() != r) return fail("expected " + std::to_string(r) + " solutions");
    for (const divsol::Solution& s : tuple.sets) {
        if (s.size() > k) return fail("a solution exceeds the budget k");
        bool valid = problem == divsol::ProblemKind::fvs
                         ? divsol::is_fvs(inst.graph, s)
                         : (problem == divsol::ProblemKind::vertex_cover
                                ? divsol::vc_as_hitting_set(inst.graph).hits_all(s)
                                : inst.hypergraph.hits_all(s));
        if (!valid) return fail("a reported set is not a valid solution");
    }

    int total = divsol::div_total(tuple);
    int min = r >= 2 ? divsol::div_min(tuple) : -1;
    if (doc.contains("diversity_total") && doc["diversity_total"].is_number() &&
        doc["diversity_total"].get<int>() != total)
        return fail("recomputed diversity_total differs from the file");
    if (doc.contains("diversity_min") && doc["diversity_min"].is_number() && r >= 2 &&
        doc["diversity_min"].get<int>() != min)
        return fail("recomputed diversity_min differs from the file");

    int value = measure_name == "total" ? total : min;
    std::cout << "ok: " << r << " valid solutions, diversity_total " << total;
    if (min >= 0) std::cout << ", diversity_min " << min;
    std::cout << '\n';
    if (has_t && value < t) return kExitTargetMissed;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"diverse solution portfolios for d-hitting set, vertex cover, and feedback "
                 "vertex set"};
    app.require_subcommand(1);

    CommonFlags solve_flags;
    std::string dump_path;
    bool early_exit = false;
    CLI::App* solve = app.add_subcommand("solve", "run the diverse-portfolio solver");
    add_common(solve, solve_flags);
    solve->add_option("--dump-network", dump_path,
                      "write the reported tuple's flow network to a file (measure total)");
    solve->add_flag("--early-exit", early_exit,
                    "stop the tuple scan at the first tuple meeting -t (may be suboptimal)")
        ->needs("-t");

    CommonFlags oracle_flags;
    int enum_cap = 25;
    CLI::App* oracle = app.add_subcommand("oracle", "brute-force reference solver");
    add_common(oracle, oracle_flags);
    oracle->add_option("--enum-cap", enum_cap, "largest universe the oracle enumerates");

    divsol::GenSpec gen_spec;
    std::string gen_out;
    CLI::App* gen = app.add_subcommand("gen", "generate an instance file");
    gen->add_option("kind", gen_spec.kind, "path | cycle | random-hs | random-graph")
        ->required()
        ->check(CLI::IsMember({"path", "cycle", "random-hs", "random-graph"}));
    gen->add_option("-n", gen_spec.n, "universe / vertex count")->required();
    gen->add_option("-m", gen_spec.m, "set / edge count (random kinds)");
    gen->add_option("-d", gen_spec.d, "maximum set size (random-hs)");
    gen->add_option("--seed", gen_spec.seed, "RNG seed (random kinds)");
    gen->add_option("-o,--output", gen_out, "output file (default stdout)");

    std::string check_instance, check_solutions;
    std::string check_problem = "hitting-set", check_measure = "total";
    int check_k = 0, check_r = 1, check_t = -1;
    CLI::App* check = app.add_subcommand("check", "re-verify an emitted result file");
    check->add_option("-i,--input", check_instance, "instance file")->required();
    check->add_option("--solutions", check_solutions, "result JSON file")->required();
    check->add_option("--problem", check_problem, "hitting-set | vertex-cover | fvs")
        ->check(CLI::IsMember({"hitting-set", "vertex-cover", "fvs"}));
    check->add_option("--measure", check_measure, "total | min")
        ->check(CLI::IsMember({"total", "min"}));
    check->add_option("-k", check_k, "per-solution size budget")->required();
    check->add_option("-r", check_r, "number of solutions")->required();
    CLI::Option* check_t_opt = check->add_option("-t", check_t, "diversity target");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (solve->parsed()) {
            solve_flags.has_t = solve->count("-t") > 0;
            return run_solve(solve_flags, dump_path, early_exit);
        }
        if (oracle->parsed()) {
            oracle_flags.has_t = oracle->count("-t") > 0;
            return run_oracle(oracle_flags, enum_cap);
        }
        if (gen->parsed()) {
            std::string text = divsol::generate(gen_spec);
            if (gen_out.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(gen_out);
                if (!out) throw divsol::ParseError("cannot write '" + gen_out + "'");
                out << text;
            }
            return kExitOk;
        }
        if (check->parsed())
            return run_check(check_instance, check_solutions, check_problem, check_measure,
                             check_k, check_r, check_t_opt->count() > 0, check_t);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}
