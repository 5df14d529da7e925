#include "cliquesat/constructions.hpp"
#include "cliquesat/counters.hpp"
#include "cliquesat/errors.hpp"
#include "cliquesat/graph_io.hpp"
#include "cliquesat/lab/args.hpp"
#include "cliquesat/lab/experiments.hpp"
#include "cliquesat/lab/formulas.hpp"
#include "cliquesat/lab/plot.hpp"
#include "cliquesat/lab/runner.hpp"
#include "cliquesat/lab/verify.hpp"
#include "cliquesat/named_graph.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

using namespace cliquesat;
using namespace cliquesat::lab;

namespace {

constexpr int kExitHardFailure = 1;
constexpr int kExitUsage = 2;

using Meta = std::vector<std::pair<std::string, std::string>>;

// Writes the artifact to `out` (stdout when empty) and the metadata next to it.
template <typename Writer>
void emit(const std::string& out, Writer&& write, const Meta& meta) {
    if (out.empty()) {
        write(std::cout);
        for (const auto& [k, v] : meta) {
            std::cerr << k << " = " << v << '\n';
        }
        return;
    }
    std::ofstream file(out);
    if (!file) {
        throw InputError("cannot open " + out + " for writing");
    }
    write(file);
    std::ofstream side(out + ".meta");
    if (!side) {
        throw InputError("cannot open " + out + ".meta for writing");
    }
    for (const auto& [k, v] : meta) {
        side << k << " = " << v << '\n';
    }
    std::cout << "wrote " << out << " and " << out << ".meta\n";
}

std::string b(bool v) { return v ? "true" : "false"; }

int construct(const std::string& name, const Params& params, const std::string& out) {
    ArgReader args(params, "construct " + name);
    Meta meta{{"construction", name}};
    for (const auto& [k, v] : params) {
        meta.emplace_back("param." + k, v);
    }
    if (name == "named") {
        const NamedGraph g = args.graph("F");
        args.finish();
        emit(out, [&](std::ostream& os) { write_graph(os, g.graph); }, meta);
    } else if (name == "gnp") {
        const std::size_t n = args.size("n");
        const double p = static_cast<double>(args.real("p"));
        const std::uint64_t seed = args.u64("seed", 1);
        args.finish();
        const Graph g = sample_gnp(n, p, seed);
        meta.emplace_back("edges", std::to_string(g.edge_count()));
        emit(out, [&](std::ostream& os) { write_graph(os, g); }, meta);
    } else if (name == "disjoint") {
        const std::size_t count = args.size("count");
        const std::size_t size = args.size("size");
        args.finish();
        emit(out, [&](std::ostream& os) { write_graph(os, disjoint_cliques(count, size)); }, meta);
    } else if (name == "random_cliques") {
        RandomCliqueParams p;
        p.n = args.size("n");
        p.m = args.size("m");
        p.u = static_cast<double>(args.real("u"));
        p.seed = args.u64("seed", 1);
        args.finish();
        const auto sample = sample_random_clique_graph(p);
        meta.emplace_back("cliques", std::to_string(sample.cliques.size()));
        meta.emplace_back("p", format_real(sample.p));
        meta.emplace_back("saturated", b(sample.saturated));
        meta.emplace_back("exhaustive", b(sample.exhaustive));
        emit(out, [&](std::ostream& os) { write_clique_union(os, sample.cliques); }, meta);
    } else if (name == "f_free") {
        const std::size_t n = args.size("n");
        const std::size_t r = args.size("r");
        const NamedGraph f = args.graph("F");
        const double alpha = static_cast<double>(args.real("alpha", 0.1L));
        const std::uint64_t seed = args.u64("seed", 1);
        args.finish();
        const auto res = build_f_free_clique_graph(n, r, f.graph, alpha, seed);
        const auto& rep = res.report;
        meta.emplace_back("m", std::to_string(rep.m));
        meta.emplace_back("u", format_real(rep.u));
        meta.emplace_back("sampled_u", format_real(rep.sampled_u));
        meta.emplace_back("initial_cliques", std::to_string(rep.initial_cliques));
        meta.emplace_back("pairs", rep.pairs.to_string());
        meta.emplace_back("removed", std::to_string(rep.removed.size()));
        meta.emplace_back("final_cliques", std::to_string(rep.final_cliques));
        meta.emplace_back("saturated", b(rep.saturated));
        emit(out, [&](std::ostream& os) { write_clique_union(os, res.cliques); }, meta);
    } else if (name == "path_search") {
        const std::size_t m = args.size("m");
        const std::size_t n = args.size("n");
        const std::size_t ell = args.size("ell", 2);
        const std::size_t target = args.size("target", m * n);
        const std::uint64_t seed = args.u64("seed", 1);
        const SearchStrategy strategy = parse_strategy(args.text("strategy", "random_order"));
        args.finish();
        const auto res = search_path_bounded_bipartite(m, n, ell, target, seed, strategy);
        meta.emplace_back("edges", std::to_string(res.graph.edge_count()));
        meta.emplace_back("edge_target", std::to_string(res.edge_target));
        meta.emplace_back("proposals", std::to_string(res.proposals));
        meta.emplace_back("reached_target", b(res.reached_target));
        meta.emplace_back("path_multiplicity", std::to_string(path_multiplicity(res.graph)));
        emit(out, [&](std::ostream& os) { write_bipartite(os, res.graph); }, meta);
    } else if (name == "clique_graph") {
        const std::string file = args.text("bipartite");
        args.finish();
        const Graph g = clique_graph(load_bipartite(file));
        meta.emplace_back("edges", std::to_string(g.edge_count()));
        emit(out, [&](std::ostream& os) { write_graph(os, g); }, meta);
    } else if (name == "lemma37") {
        Lemma37Params p;
        p.n = args.size("n");
        p.epsilon = args.rational("eps", Rational(0));
        p.ell = args.size("ell", 2);
        p.t = args.size("t", 3);
        p.r = args.size("r", 3);
        p.c = static_cast<double>(args.real("c", 1));
        p.d = static_cast<double>(args.real("D", 4));
        p.seed = args.u64("seed", 1);
        p.strategy = parse_strategy(args.text("strategy", "random_order"));
        args.finish();
        const auto res = lemma37_construction(p);
        const auto& rep = res.report;
        meta.emplace_back("u_size", std::to_string(rep.u_size));
        meta.emplace_back("edge_target", std::to_string(rep.edge_target));
        meta.emplace_back("edges_found", std::to_string(rep.edges_found));
        meta.emplace_back("degree_cap", std::to_string(rep.degree_cap));
        meta.emplace_back("pruned_u_size", std::to_string(rep.pruned_u_size));
        meta.emplace_back("edges_after_prune", std::to_string(rep.edges_after_prune));
        meta.emplace_back("kept_majority", b(rep.kept_majority));
        meta.emplace_back("max_u_degree", std::to_string(rep.max_u_degree));
        meta.emplace_back("multiplicity", std::to_string(rep.multiplicity));
        meta.emplace_back("cliques", rep.cliques.to_string());
        meta.emplace_back("k2t", rep.k2t.to_string());
        meta.emplace_back("k2t_cap", rep.k2t_cap.to_string());
        emit(out, [&](std::ostream& os) { write_graph(os, res.graph); }, meta);
    } else {
        throw InputError("unknown construction '" + name +
                         "' (known: named, gnp, disjoint, random_cliques, f_free, path_search, clique_graph, lemma37)");
    }
    return 0;
}

int count(const std::string& pattern, const std::string& graph_file, const std::string& cliques_file,
          const std::string& named) {
    const int sources = int(!graph_file.empty()) + int(!cliques_file.empty()) + int(!named.empty());
    if (sources != 1) {
        throw InputError("give exactly one of --graph, --cliques, --named");
    }
    Graph host;
    if (!graph_file.empty()) {
        host = load_graph(graph_file);
    } else if (!cliques_file.empty()) {
        host = union_graph(load_clique_union(cliques_file));
    } else {
        host = named_graph(named).graph;
    }
    const CountReport report = count_pattern(named_graph(pattern), host);
    std::cout << "pattern = " << report.pattern << "\ncount = " << report.count.to_string()
              << "\nmethod = " << report.method << "\nseconds = " << format_real(report.elapsed_seconds) << '\n';
    return 0;
}

int bounds_eval(const std::string& formula, const std::vector<std::string>& assignments) {
    const FormulaResult res = evaluate_formula(formula, parse_assignments(assignments));
    for (const auto& [k, v] : res.fields) {
        std::cout << k << " = " << v << '\n';
    }
    return 0;
}

int experiment_run(const std::string& spec_path, const std::string& output, int threads) {
    ExperimentSpec spec = load_spec(spec_path);
    if (apply_seed_override(spec)) {
        std::cerr << "LAB_SEED overrides the master seed: " << spec.seed << '\n';
    }
    if (!output.empty()) {
        spec.output = output;
    }
    if (threads >= 0) {
        spec.threads = static_cast<std::size_t>(threads);
    }
    const RunOutput run = run_experiment(spec);
    print_summary(std::cout, run.summary);
    if (!spec.output.empty()) {
        std::cout << "records appended to " << spec.output << '\n';
    }
    return run.summary.hard_failures == 0 ? 0 : kExitHardFailure;
}

int experiment_plot(const std::string& records, const std::string& x, const std::vector<std::string>& ys,
                    const std::string& prefix) {
    const PlotResult res = emit_plot_data(records, x, ys, prefix);
    std::cout << "rows = " << res.rows << "\nskipped = " << res.skipped << "\ntable = " << res.table.string()
              << "\nscript = " << res.script.string() << "\nnotes = " << res.notes.string() << '\n';
    return 0;
}

int experiment_replay(const std::string& records_path) {
    const auto records = load_records(records_path);
    std::size_t mismatches = 0;
    for (const Record& r : records) {
        const ReplayResult res = replay(r);
        if (!res.identical) {
            ++mismatches;
            std::cout << "MISMATCH experiment=" << r.experiment << " point=" << r.point << " trial=" << r.trial
                      << ": " << res.detail << '\n';
        }
    }
    std::cout << "replayed = " << records.size() << "\nmismatches = " << mismatches << '\n';
    return mismatches == 0 ? 0 : kExitHardFailure;
}

int verify(const std::string& scale_name, bool strict) {
    const Scale scale = parse_scale(scale_name);
    const auto results = verify_all(scale, &std::cout);
    bool hard = true;
    bool stat = true;
    for (const auto& r : results) {
        hard = hard && r.hard_ok;
        stat = stat && r.stat_ok;
    }
    if (!hard) {
        return kExitHardFailure;
    }
    return strict && !stat ? kExitHardFailure : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Clique-density lab: counters, constructions, bounds and seeded experiments"};
    app.require_subcommand(1);
    int status = 0;

    auto* count_cmd = app.add_subcommand("count", "Count copies of a pattern in a host graph");
    std::string pattern;
    std::string graph_file;
    std::string cliques_file;
    std::string named_host;
    count_cmd->add_option("pattern", pattern, "Pattern name, e.g. K3, K2,3, C4, P3, T:0,0,1")->required();
    count_cmd->add_option("--graph", graph_file, "Host in edge-list format");
    count_cmd->add_option("--cliques", cliques_file, "Host as the union of a clique-list file");
    count_cmd->add_option("--named", named_host, "Host given as a named graph");
    count_cmd->callback([&] { status = count(pattern, graph_file, cliques_file, named_host); });

    auto* construct_cmd = app.add_subcommand("construct", "Build a graph and write it with a .meta sidecar");
    std::string construction;
    std::vector<std::string> construct_args;
    std::string construct_out;
    construct_cmd->add_option("name", construction, "named, gnp, disjoint, random_cliques, f_free, path_search, "
                                                    "clique_graph, lemma37")
        ->required();
    construct_cmd->add_option("params", construct_args, "key=value parameters");
    construct_cmd->add_option("--out", construct_out, "Output file (stdout when omitted)");
    construct_cmd->callback(
        [&] { status = construct(construction, parse_assignments(construct_args), construct_out); });

    auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate closed-form bounds");
    bounds_cmd->require_subcommand(1);
    auto* eval_cmd = bounds_cmd->add_subcommand("eval", "Evaluate one formula");
    std::string formula;
    std::vector<std::string> formula_args;
    eval_cmd->add_option("formula", formula, "Formula name (see 'lab bounds list')")->required();
    eval_cmd->add_option("params", formula_args, "key=value parameters");
    eval_cmd->callback([&] { status = bounds_eval(formula, formula_args); });
    auto* list_cmd = bounds_cmd->add_subcommand("list", "List formula names");
    list_cmd->callback([&] {
        for (const auto& name : formula_names()) {
            std::cout << name << '\n';
        }
    });

    auto* exp_cmd = app.add_subcommand("experiment", "Run, plot and replay seeded experiments");
    exp_cmd->require_subcommand(1);
    auto* run_cmd = exp_cmd->add_subcommand("run", "Run an experiment spec file");
    std::string spec_path;
    std::string run_output;
    int threads = -1;
    run_cmd->add_option("spec", spec_path, "Spec file")->required();
    run_cmd->add_option("--output", run_output, "Record file (overrides the spec)");
    run_cmd->add_option("--threads", threads, "Worker count, 0 for all cores (overrides the spec)");
    run_cmd->callback([&] { status = experiment_run(spec_path, run_output, threads); });

    auto* plot_cmd = exp_cmd->add_subcommand("plot", "Emit a plot table and script from records");
    std::string plot_records;
    std::string plot_x;
    std::vector<std::string> plot_y;
    std::string plot_out;
    plot_cmd->add_option("records", plot_records, "Record file")->required();
    plot_cmd->add_option("--x", plot_x, "x key")->required();
    plot_cmd->add_option("--y", plot_y, "y keys")->required();
    plot_cmd->add_option("--out", plot_out, "Output prefix")->required();
    plot_cmd->callback([&] { status = experiment_plot(plot_records, plot_x, plot_y, plot_out); });

    auto* replay_cmd = exp_cmd->add_subcommand("replay", "Re-run every record and compare");
    std::string replay_records;
    replay_cmd->add_option("records", replay_records, "Record file")->required();
    replay_cmd->callback([&] { status = experiment_replay(replay_records); });

    auto* names_cmd = exp_cmd->add_subcommand("list", "List experiment names");
    names_cmd->callback([&] {
        for (const auto& name : experiment_names()) {
            std::cout << name << '\n';
        }
    });

    auto* verify_cmd = app.add_subcommand("verify", "Run the acceptance suite");
    std::string scale = "smoke";
    bool strict = false;
    verify_cmd->add_option("--scale", scale, "smoke or desk")->check(CLI::IsMember({"smoke", "desk"}));
    verify_cmd->add_flag("--strict", strict, "Also exit 1 when a statistical check misses");
    verify_cmd->callback([&] { status = verify(scale, strict); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const CapabilityError& e) {
        std::cerr << "capability error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitHardFailure;
    }
    return status;
}
