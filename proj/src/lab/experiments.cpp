#include "cliquesat/lab/experiments.hpp"

#include "cliquesat/bounds.hpp"
#include "cliquesat/constructions.hpp"
#include "cliquesat/counters.hpp"
#include "cliquesat/covers.hpp"
#include "cliquesat/errors.hpp"
#include "cliquesat/extraction.hpp"
#include "cliquesat/lab/args.hpp"
#include "cliquesat/lab/formulas.hpp"
#include "cliquesat/random.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <istream>
#include <set>

namespace cliquesat::lab {

namespace {

const std::set<std::string> kReservedKeys = {"experiment", "trials", "seed", "output", "threads"};

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return "";
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = value.find(',', start);
        out.push_back(trim(value.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

// Named graphs like "K2,3" contain commas; rejoin list items that only make sense
// together ("K2" followed by "3").
std::vector<std::string> rejoin_bipartite(const std::vector<std::string>& items) {
    std::vector<std::string> out;
    for (const std::string& item : items) {
        const bool digits = !item.empty() && std::all_of(item.begin(), item.end(), ::isdigit);
        if (digits && !out.empty() && out.back().size() >= 2 && out.back()[0] == 'K' &&
            out.back().find(',') == std::string::npos &&
            std::all_of(out.back().begin() + 1, out.back().end(), ::isdigit)) {
            out.back() += "," + item;
        } else {
            out.push_back(item);
        }
    }
    return out;
}

std::size_t parse_size(const std::string& text, std::size_t line_no, const std::string& key) {
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(text, &used);
        if (used != text.size() || text.front() == '-') {
            throw std::invalid_argument("trailing");
        }
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw ParseError(line_no, key + " must be a non-negative integer, got '" + text + "'");
    }
}

std::string count_text(Count c) { return c.to_string(); }

TrialOutcome skip(std::string reason) {
    TrialOutcome out;
    out.status = Status::skip;
    out.reason = std::move(reason);
    return out;
}

TrialOutcome verdict(bool ok, Kind kind, std::string failure) {
    TrialOutcome out;
    out.kind = kind;
    out.status = ok ? Status::pass : Status::fail;
    if (!ok) {
        out.reason = std::move(failure);
    }
    return out;
}

std::string family_text(const ValidFamily& family) {
    std::string out;
    for (SubsetMask s : family.sets) {
        out += (out.empty() ? "" : "|") + std::to_string(s);
    }
    return out;
}

std::string copy_text(const std::vector<Vertex>& copy) {
    std::string out;
    for (Vertex v : copy) {
        out += (out.empty() ? "" : ",") + std::to_string(v);
    }
    return out;
}

// ---------------------------------------------------------------------------------

TrialOutcome lemma31_clique_count(ArgReader& args, std::uint64_t seed) {
    const std::size_t n = args.size("n", 24);
    const std::size_t m = args.size("m", 6);
    const std::size_t r = args.size("r", 3);
    const long double u = args.real("u", 10);
    args.finish();
    const long double umr = u * std::pow(static_cast<long double>(m), static_cast<long double>(r));
    if (r < 2 || !(u >= 1) || m < 2 * r || m > n || umr > std::pow(static_cast<long double>(n), static_cast<long double>(r))) {
        return skip("needs r >= 2, u >= 1, m >= 2r, m <= n and u m^r <= n^r");
    }
    const auto sample = sample_random_clique_graph({n, m, static_cast<double>(u), seed});
    const Count cliques = count_cliques(union_graph(sample.cliques), r);
    TrialOutcome out;
    out.kind = Kind::stat;
    out.outputs["cliques"] = count_text(cliques);
    out.outputs["sampled"] = std::to_string(sample.cliques.size());
    out.outputs["u_m_r"] = format_real(umr);
    out.outputs["ratio"] = format_real(cliques.to_long_double() / umr);
    return out;
}

TrialOutcome lemma32_expectation(ArgReader& args, std::uint64_t seed) {
    const NamedGraph f = args.graph("F", "C4");
    const std::size_t n = args.size("n", 60);
    const std::size_t m = args.size("m", 6);
    const long double u = args.real("u", 40);
    args.finish();
    const Graph& pattern = f.graph;
    if (!in_maximizer_regime(pattern, u, static_cast<long double>(m), static_cast<long double>(n))) {
        return skip("outside the regime: needs 2-balanced F, e(F) >= 2, u m^2 < n^2 and u (m/n)^{2-(v-2)/(e-1)} > 1");
    }
    const auto sample = sample_random_clique_graph({n, m, static_cast<double>(u), seed});
    const Count copies = count_subgraph(pattern, union_graph(sample.cliques));
    const long double nn = static_cast<long double>(n);
    const long double scale = std::pow(u * m * m / (nn * nn), static_cast<long double>(pattern.edge_count())) *
                              std::pow(nn, static_cast<long double>(pattern.vertex_count()));
    TrialOutcome out;
    out.kind = Kind::stat;
    out.outputs["copies"] = count_text(copies);
    out.outputs["scale"] = format_real(scale);
    out.outputs["ratio"] = format_real(copies.to_long_double() / scale);
    return out;
}

TrialOutcome lemma33_Z_dominance(ArgReader& args, std::uint64_t seed) {
    const NamedGraph f = args.graph("F", "C4");
    const std::size_t n = args.size("n", 10);
    const std::size_t m = args.size("m", 3);
    const long double u = args.real("u", 4);
    args.finish();
    const auto sample = sample_random_clique_graph({n, m, static_cast<double>(u), seed});
    ZReport z;
    try {
        z = count_Z(f.graph, sample.cliques);
    } catch (const CapabilityError& e) {
        return skip(e.what());
    }
    const Count copies = count_subgraph(f.graph, union_graph(sample.cliques));
    auto out = verdict(copies <= z.z, Kind::hard,
                       "N(F,G) = " + copies.to_string() + " exceeds Z = " + z.z.to_string());
    out.outputs["copies"] = count_text(copies);
    out.outputs["z"] = count_text(z.z);
    out.outputs["cliques"] = std::to_string(sample.cliques.size());
    return out;
}

TrialOutcome lemma34_maximizer(ArgReader& args, std::uint64_t) {
    const NamedGraph f = args.graph("F", "C4");
    const long double u = args.real("u", 50);
    const long double m = args.real("m", 10);
    const long double n = args.real("n", 100);
    args.finish();
    const Graph& pattern = f.graph;
    if (!in_maximizer_regime(pattern, u, m, n)) {
        return skip("outside the regime: needs 2-balanced F, e(F) >= 2, u m^2 < n^2 and u (m/n)^{2-(v-2)/(e-1)} > 1");
    }
    const auto report = max_weight_family(pattern, u, m, n);
    const ValidFamily expected = edge_family(pattern);
    const long double e = static_cast<long double>(pattern.edge_count());
    const long double expected_log = e * std::log(u) + 2 * e * std::log(m / n);
    std::size_t worst_intersection = 0;
    for (const auto& fam : report.maximizers) {
        worst_intersection = std::max(worst_intersection, fam.max_pairwise_intersection());
    }
    const bool unique = report.maximizers.size() == 1 && !report.float_tie;
    const bool weight_ok = std::abs(report.log_weight - expected_log) <= 1e-9L * std::max(1.0L, std::abs(expected_log));
    const bool ok = report.best == expected && unique && weight_ok && worst_intersection <= 1;
    auto out = verdict(ok, Kind::hard,
                       "argmax " + family_text(report.best) + " vs E(F) " + family_text(expected) +
                           (unique ? "" : ", not unique") + (weight_ok ? "" : ", weight mismatch"));
    out.outputs["argmax"] = family_text(report.best);
    out.outputs["members"] = std::to_string(report.best_members);
    out.outputs["total_size"] = std::to_string(report.best_total_size);
    out.outputs["log_weight"] = format_real(report.log_weight);
    out.outputs["expected_log_weight"] = format_real(expected_log);
    out.outputs["maximizers"] = std::to_string(report.maximizers.size());
    out.outputs["max_intersection"] = std::to_string(worst_intersection);
    out.outputs["families"] = std::to_string(report.families_scanned);
    return out;
}

TrialOutcome lemma35_K2t_cap(ArgReader& args, std::uint64_t seed) {
    const std::size_t m = args.size("m", 12);
    const std::size_t n = args.size("n", 12);
    const std::size_t ell = args.size("ell", 2);
    const std::size_t t = args.size("t", 3);
    const std::size_t target = args.size("target", m * n);
    const SearchStrategy strategy = parse_strategy(args.text("strategy", "random_order"));
    args.finish();
    if (ell < 2 || t <= ell) {
        return skip("needs t > ell >= 2");
    }
    const auto search = search_path_bounded_bipartite(m, n, ell, target, seed, strategy);
    const BipartiteGraph& b = search.graph;
    const std::size_t multiplicity = path_multiplicity(b);
    const std::size_t d = b.max_u_degree();
    const Count k2t = count_complete_bipartite(clique_graph(b), 2, t);
    const Count cap = k2t_clique_graph_cap(ell, d, t, b.u_size());
    auto out = verdict(multiplicity <= ell && k2t <= cap, Kind::hard,
                       "N(K_{2,t}, K(B)) = " + k2t.to_string() + " vs cap " + cap.to_string() + ", multiplicity " +
                           std::to_string(multiplicity));
    out.outputs["edges"] = std::to_string(b.edge_count());
    out.outputs["d"] = std::to_string(d);
    out.outputs["multiplicity"] = std::to_string(multiplicity);
    out.outputs["k2t"] = count_text(k2t);
    out.outputs["cap"] = count_text(cap);
    return out;
}

TrialOutcome lemma36_extremal_cap(ArgReader& args, std::uint64_t seed) {
    const std::size_t m = args.size("m", 16);
    const std::size_t n = args.size("n", 16);
    const std::size_t ell = args.size("ell", 2);
    const std::size_t target = args.size("target", m * n);
    const SearchStrategy strategy = parse_strategy(args.text("strategy", "random_order"));
    args.finish();
    if (ell < 1) {
        return skip("needs ell >= 1");
    }
    const auto search = search_path_bounded_bipartite(m, n, ell, target, seed, strategy);
    const std::size_t edges = search.graph.edge_count();
    const std::size_t multiplicity = path_multiplicity(search.graph);
    const long double cap = 4 * std::pow(static_cast<long double>(ell), 0.25L) *
                                std::pow(static_cast<long double>(n), 0.75L) * std::sqrt(static_cast<long double>(m)) +
                            10.0L * m + 10.0L * n;
    auto out = verdict(multiplicity <= ell && static_cast<long double>(edges) < cap, Kind::hard,
                       "e(B) = " + std::to_string(edges) + " vs cap " + format_real(cap) + ", multiplicity " +
                           std::to_string(multiplicity));
    out.outputs["edges"] = std::to_string(edges);
    out.outputs["multiplicity"] = std::to_string(multiplicity);
    out.outputs["cap"] = format_real(cap);
    out.outputs["proposals"] = std::to_string(search.proposals);
    out.outputs["reached_target"] = search.reached_target ? "1" : "0";
    return out;
}

TrialOutcome thm14_deletion(ArgReader& args, std::uint64_t seed) {
    const NamedGraph f = args.graph("F", "C4");
    const std::size_t n = args.size("n", 30);
    const std::size_t r = args.size("r", 3);
    const long double alpha = args.real("alpha", 0.1L);
    args.finish();
    FFreeResult result;
    try {
        result = build_f_free_clique_graph(n, r, f.graph, static_cast<double>(alpha), seed);
    } catch (const InternalError& e) {
        return verdict(false, Kind::hard, e.what());
    }
    const Count left = count_subgraph(f.graph, union_graph(result.cliques));
    auto out = verdict(left == Count{0}, Kind::hard, "output still holds " + left.to_string() + " copies of F");
    const auto& rep = result.report;
    out.outputs["u"] = format_real(rep.u);
    out.outputs["initial"] = std::to_string(rep.initial_cliques);
    out.outputs["pairs"] = count_text(rep.pairs);
    out.outputs["removed"] = std::to_string(rep.removed.size());
    out.outputs["final"] = std::to_string(rep.final_cliques);
    out.outputs["final_positive"] = rep.final_cliques > 0 ? "1" : "0";
    out.outputs["f_copies"] = count_text(left);
    return out;
}

TrialOutcome prop15_trees(ArgReader& args, std::uint64_t seed) {
    const NamedGraph tree = args.graph("T", "P3");
    const std::size_t r = args.size("r", 3);
    const std::string family = args.text("graph", "gnp");
    Graph g;
    if (family == "gnp") {
        const std::size_t n = args.size("n", 14);
        const long double p = args.real("p", 0.7L);
        args.finish();
        g = sample_gnp(n, static_cast<double>(p), seed);
    } else if (family == "disjoint") {
        const std::size_t blocks = args.size("blocks", 4);
        const std::size_t size = args.size("size", 6);
        args.finish();
        g = disjoint_cliques(blocks, size);
    } else {
        throw InputError("prop15_trees: graph must be gnp or disjoint");
    }
    const auto rep = prop15_pipeline(g, tree.graph, r);
    bool greedy_ok = true;
    const std::size_t k = tree.graph.vertex_count();
    if (rep.hyperedges > 0 && rep.realized_min_degree >= 2 * k) {
        const Graph sub = g.induced(rep.extraction.kept_vertices);
        greedy_ok = greedy_tree_count(sub, tree.graph, rep.realized_min_degree).certified;
    }
    const bool ok = (rep.hyperedges == 0 || rep.extraction_certified) && rep.certified && greedy_ok;
    auto out = verdict(ok, Kind::hard,
                       "bound " + format_real(rep.bound) + " vs N(T,G') = " + rep.exact_in_subgraph.to_string() +
                           (rep.extraction_certified ? "" : ", extraction not certified") +
                           (greedy_ok ? "" : ", greedy count not certified"));
    out.outputs["hyperedges"] = std::to_string(rep.hyperedges);
    out.outputs["ell"] = std::to_string(rep.ell);
    out.outputs["kept"] = std::to_string(rep.extraction.kept_vertices.size());
    out.outputs["degree_floor"] = format_real(rep.degree_floor);
    out.outputs["min_degree"] = std::to_string(rep.realized_min_degree);
    out.outputs["bound"] = format_real(rep.bound);
    out.outputs["exact_in_subgraph"] = count_text(rep.exact_in_subgraph);
    out.outputs["exact"] = count_text(rep.exact);
    return out;
}

TrialOutcome thm11_expansion(ArgReader& args, std::uint64_t seed) {
    const std::string family = args.text("graph", "gnp");
    const std::size_t n = args.size("n", 10);
    const std::size_t t = args.size("t", 2);
    const std::size_t r = args.size("r", 3);
    Graph g;
    if (family == "gnp") {
        const long double p = args.real("p", 0.6L);
        args.finish();
        g = sample_gnp(n, static_cast<double>(p), seed);
    } else if (family == "complete") {
        args.finish();
        g = complete_graph(n);
    } else {
        throw InputError("thm11_expansion: graph must be gnp or complete");
    }
    if (t < 2) {
        return skip("needs t >= 2");
    }
    Count sum{0};
    for (const Edge& e : g.edges()) {
        const Vertex ends[] = {e.u, e.v};
        sum += binomial(common_neighborhood(g, ends).size(), t);
    }
    const Count k2t = count_complete_bipartite(g, 2, t);
    auto out = verdict(sum <= Count{2} * k2t, Kind::hard,
                       "sum " + sum.to_string() + " exceeds 2 N(K_{2,t}) = " + (Count{2} * k2t).to_string());
    out.outputs["sum"] = count_text(sum);
    out.outputs["k2t"] = count_text(k2t);
    out.outputs["twice_k2t"] = count_text(Count{2} * k2t);
    out.outputs["tight"] = sum == Count{2} * k2t ? "1" : "0";
    out.outputs["cliques"] = count_text(count_cliques(g, r));
    return out;
}

TrialOutcome kruskal_katona(ArgReader& args, std::uint64_t seed) {
    const std::size_t n = args.size("n", 10);
    const long double p = args.real("p", 0.5L);
    const std::size_t r = args.size("r", 3);
    const std::size_t s = args.size("s", 2);
    args.finish();
    if (s < 1 || s > r) {
        return skip("needs 1 <= s <= r");
    }
    const Graph g = sample_gnp(n, static_cast<double>(p), seed);
    const Count big = count_cliques(g, r);
    if (big == Count{0}) {
        TrialOutcome out = skip("no r-cliques");
        out.outputs["cliques_r"] = "0";
        return out;
    }
    const Count small = count_cliques(g, s);
    const long double bound = kruskal_katona_bound(big, r, s);
    auto out = verdict(small.to_long_double() >= bound * (1 - 1e-9L), Kind::hard,
                       std::to_string(s) + "-cliques " + small.to_string() + " below bound " + format_real(bound));
    out.outputs["cliques_r"] = count_text(big);
    out.outputs["cliques_s"] = count_text(small);
    out.outputs["bound"] = format_real(bound);
    return out;
}

TrialOutcome bounds_grid(ArgReader& args, std::uint64_t) {
    const std::string formula = args.text("formula", "thm11");
    Params rest;
    for (const auto& key : {"F", "T", "r", "s", "t", "k", "n", "N", "u", "m", "alpha", "eps", "name"}) {
        if (args.has(key)) {
            rest[key] = args.text(key);
        }
    }
    args.finish();
    FormulaResult res;
    try {
        res = evaluate_formula(formula, rest);
    } catch (const InputError& e) {
        // Unknown formula names are a spec error, not a gate.
        if (std::string(e.what()).rfind("unknown formula", 0) == 0) {
            throw;
        }
        return skip(e.what());
    }
    TrialOutcome out;
    out.kind = Kind::hard;
    for (const auto& [k, v] : res.fields) {
        out.outputs[k] = v;
    }
    return out;
}

using Runner = std::function<TrialOutcome(ArgReader&, std::uint64_t)>;

const std::map<std::string, Runner>& registry() {
    static const std::map<std::string, Runner> table = {
        {"lemma31_clique_count", lemma31_clique_count},
        {"lemma32_expectation", lemma32_expectation},
        {"lemma33_Z_dominance", lemma33_Z_dominance},
        {"lemma34_maximizer", lemma34_maximizer},
        {"lemma35_K2t_cap", lemma35_K2t_cap},
        {"lemma36_extremal_cap", lemma36_extremal_cap},
        {"thm14_deletion", thm14_deletion},
        {"prop15_trees", prop15_trees},
        {"thm11_expansion", thm11_expansion},
        {"kruskal_katona", kruskal_katona},
        {"bounds_grid", bounds_grid},
    };
    return table;
}

std::vector<double> output_values(std::span<const Record> records, const std::string& key) {
    std::vector<double> out;
    for (const Record& r : records) {
        const auto it = r.outputs.find(key);
        if (r.status != Status::skip && it != r.outputs.end()) {
            out.push_back(std::stod(it->second));
        }
    }
    return out;
}

} // namespace

ExperimentSpec parse_spec(std::istream& in) {
    ExperimentSpec spec;
    std::set<std::string> seen;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string body = trim(line);
        if (body.empty() || body.front() == '#') {
            continue;
        }
        const auto eq = body.find('=');
        if (eq == std::string::npos) {
            throw ParseError(line_no, "expected 'key = value'");
        }
        const std::string key = trim(body.substr(0, eq));
        const std::string value = trim(body.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw ParseError(line_no, "empty key or value");
        }
        if (!seen.insert(key).second) {
            throw ParseError(line_no, "duplicate key '" + key + "'");
        }
        if (key == "experiment") {
            spec.experiment = value;
        } else if (key == "trials") {
            spec.trials = parse_size(value, line_no, key);
            if (spec.trials < 1) {
                throw ParseError(line_no, "trials must be at least 1");
            }
        } else if (key == "seed") {
            spec.seed = parse_size(value, line_no, key);
        } else if (key == "output") {
            spec.output = value;
        } else if (key == "threads") {
            spec.threads = parse_size(value, line_no, key);
        } else {
            auto values = rejoin_bipartite(split_list(value));
            for (const auto& v : values) {
                if (v.empty()) {
                    throw ParseError(line_no, "empty list item for '" + key + "'");
                }
            }
            spec.grid[key] = std::move(values);
        }
    }
    if (spec.experiment.empty()) {
        throw ParseError(line_no, "spec has no 'experiment' line");
    }
    if (!is_known_experiment(spec.experiment)) {
        throw InputError("unknown experiment '" + spec.experiment + "'");
    }
    return spec;
}

ExperimentSpec load_spec(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open spec file " + path.string());
    }
    return parse_spec(in);
}

bool apply_seed_override(ExperimentSpec& spec) {
    const char* env = std::getenv("LAB_SEED");
    if (env == nullptr || *env == '\0') {
        return false;
    }
    spec.seed = parse_size(env, 0, "LAB_SEED");
    return true;
}

std::vector<Params> grid_points(const ExperimentSpec& spec) {
    std::vector<Params> points{Params{}};
    for (const auto& [key, values] : spec.grid) {
        std::vector<Params> next;
        next.reserve(points.size() * values.size());
        for (const Params& base : points) {
            for (const std::string& v : values) {
                Params p = base;
                p[key] = v;
                next.push_back(std::move(p));
            }
        }
        points = std::move(next);
    }
    return points;
}

std::uint64_t trial_seed(std::uint64_t master, std::size_t point, std::size_t trial) {
    return mix64(mix64(mix64(master) ^ point) ^ trial);
}

const std::vector<std::string>& experiment_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) {
            out.push_back(name);
        }
        return out;
    }();
    return names;
}

bool is_known_experiment(const std::string& name) {
    return registry().count(name) != 0;
}

TrialOutcome run_trial(const std::string& experiment, const Params& params, std::uint64_t seed) {
    const auto it = registry().find(experiment);
    if (it == registry().end()) {
        throw InputError("unknown experiment '" + experiment + "'");
    }
    ArgReader args(params, experiment);
    try {
        return it->second(args, seed);
    } catch (const InputError& e) {
        if (!args.finished()) {
            throw;
        }
        return skip(e.what());
    } catch (const CapabilityError& e) {
        return skip(e.what());
    }
}

double largest_passing_delta(std::span<const double> ratios) {
    if (ratios.empty()) {
        return 0;
    }
    std::vector<double> sorted(ratios.begin(), ratios.end());
    std::sort(sorted.begin(), sorted.end());
    const auto total = static_cast<double>(sorted.size());
    for (int step = 9999; step >= 1; --step) {
        const double delta = step * 1e-4;
        const auto above = static_cast<double>(sorted.end() - std::upper_bound(sorted.begin(), sorted.end(), delta));
        if (above / total > delta) {
            return delta;
        }
    }
    return 0;
}

Params aggregate_point(const std::string& experiment, std::span<const Record> records) {
    Params out;
    const auto mean_sd = [](const std::vector<double>& xs) {
        double mean = 0;
        for (double x : xs) {
            mean += x;
        }
        mean /= static_cast<double>(xs.size());
        double var = 0;
        for (double x : xs) {
            var += (x - mean) * (x - mean);
        }
        var = xs.size() > 1 ? var / static_cast<double>(xs.size() - 1) : 0;
        return std::pair{mean, std::sqrt(var)};
    };
    if (experiment == "lemma31_clique_count") {
        const auto ratios = output_values(records, "ratio");
        if (!ratios.empty()) {
            const double delta = largest_passing_delta(ratios);
            const auto above = std::count_if(ratios.begin(), ratios.end(), [&](double x) { return x > delta; });
            out["delta"] = format_real(delta);
            out["freq_above_delta"] = format_real(static_cast<double>(above) / static_cast<double>(ratios.size()));
            out["mean_ratio"] = format_real(mean_sd(ratios).first);
        }
    } else if (experiment == "lemma32_expectation") {
        const auto copies = output_values(records, "copies");
        const auto scales = output_values(records, "scale");
        if (!copies.empty()) {
            const auto [mean, sd] = mean_sd(copies);
            const double half = 1.96 * sd / std::sqrt(static_cast<double>(copies.size()));
            out["mean_copies"] = format_real(mean);
            out["ci95_half_width"] = format_real(half);
            out["constant"] = format_real(mean / scales.front());
            out["constant_upper"] = format_real((mean + half) / scales.front());
        }
    } else if (experiment == "thm14_deletion") {
        const auto positive = output_values(records, "final_positive");
        if (!positive.empty()) {
            out["positive_rate"] = format_real(mean_sd(positive).first);
        }
    } else if (experiment == "lemma35_K2t_cap") {
        const auto k2t = output_values(records, "k2t");
        const auto cap = output_values(records, "cap");
        double worst = 0;
        for (std::size_t i = 0; i < k2t.size(); ++i) {
            worst = std::max(worst, cap[i] > 0 ? k2t[i] / cap[i] : 0.0);
        }
        out["max_k2t_over_cap"] = format_real(worst);
    } else if (experiment == "lemma36_extremal_cap") {
        const auto edges = output_values(records, "edges");
        const auto cap = output_values(records, "cap");
        double worst = 0;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            worst = std::max(worst, edges[i] / cap[i]);
        }
        out["max_edges_over_cap"] = format_real(worst);
    } else if (experiment == "thm11_expansion") {
        const auto tight = output_values(records, "tight");
        if (!tight.empty()) {
            out["tight_rate"] = format_real(mean_sd(tight).first);
        }
    }
    return out;
}

} // namespace cliquesat::lab
