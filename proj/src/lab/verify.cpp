#include "cliquesat/lab/verify.hpp"

#include "cliquesat/bounds.hpp"
#include "cliquesat/constructions.hpp"
#include "cliquesat/counters.hpp"
#include "cliquesat/covers.hpp"
#include "cliquesat/errors.hpp"
#include "cliquesat/extraction.hpp"
#include "cliquesat/lab/args.hpp"
#include "cliquesat/lab/runner.hpp"
#include "cliquesat/named_graph.hpp"
#include "cliquesat/oracle.hpp"
#include "cliquesat/random.hpp"

#include <array>
#include <bit>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <tuple>

namespace cliquesat::lab {

using cliquesat::to_string;

namespace {

bool desk(Scale s) { return s == Scale::desk; }

CriterionResult make_result(int id, std::string name) {
    CriterionResult res;
    res.id = id;
    res.name = std::move(name);
    return res;
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
    std::string out;
    for (const auto& item : items) {
        out += (out.empty() ? "" : sep) + item;
    }
    return out;
}

// Collects the first few violations as witnesses.
struct Violations {
    std::size_t count = 0;
    std::vector<std::string> witnesses;

    void add(const std::string& witness) {
        if (witnesses.size() < 3) {
            witnesses.push_back(witness);
        }
        ++count;
    }
    [[nodiscard]] std::string text() const {
        return std::to_string(count) + " violations" + (witnesses.empty() ? "" : " (" + join(witnesses, "; ") + ")");
    }
};

std::string graph_text(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + ":";
    for (const Edge& e : g.edges()) {
        out += " " + std::to_string(e.u) + "-" + std::to_string(e.v);
    }
    return out;
}

RunSummary run_spec(const std::string& experiment, std::map<std::string, std::vector<std::string>> grid,
                    std::size_t trials, std::uint64_t seed) {
    ExperimentSpec spec;
    spec.experiment = experiment;
    spec.grid = std::move(grid);
    spec.trials = trials;
    spec.seed = seed;
    return run_experiment(spec).summary;
}

std::string witnesses_of(const RunSummary& s) {
    std::vector<std::string> out;
    for (const auto& p : s.points) {
        for (const auto& w : p.failure_reasons) {
            if (out.size() < 3) {
                out.push_back(w);
            }
        }
    }
    return out.empty() ? "" : " witnesses: " + join(out, "; ");
}

// ---------------------------------------------------------------------------------

CriterionResult oracle_equivalence(Scale scale) {
    CriterionResult res = make_result(1, "oracle equivalence");
    const std::size_t graphs = desk(scale) ? 500 : 100;
    const char* patterns[] = {"K3", "K4", "K2,2", "K2,3", "P3", "C4"};
    Rng rng(101);
    Violations bad;
    std::size_t comparisons = 0;
    for (std::size_t i = 0; i < graphs; ++i) {
        const std::size_t n = 3 + rng.below(7);
        const Graph g = sample_gnp(n, 0.15 + 0.8 * rng.uniform(), rng.next());
        for (const char* spec : patterns) {
            const NamedGraph pattern = named_graph(spec);
            const Count generic = count_subgraph(pattern.graph, g);
            const Count special = count_pattern(pattern, g).count;
            const Count brute = oracle::count_subgraph(pattern.graph, g);
            comparisons += 2;
            if (special != generic || generic != brute) {
                bad.add(std::string(spec) + " on " + graph_text(g) + ": specialized " + special.to_string() +
                        ", generic " + generic.to_string() + ", brute " + brute.to_string());
            }
        }
        for (std::size_t r = 3; r <= 4; ++r) {
            if (count_cliques(g, r) != count_subgraph(complete_graph(r), g)) {
                bad.add("clique count r=" + std::to_string(r) + " on " + graph_text(g));
            }
        }
        for (std::size_t t = 2; t <= 3; ++t) {
            if (count_complete_bipartite(g, 2, t) != count_subgraph(complete_bipartite_graph(2, t), g)) {
                bad.add("K2," + std::to_string(t) + " count on " + graph_text(g));
            }
        }
        comparisons += 4;
    }
    res.hard_ok = bad.count == 0;
    res.detail = std::to_string(graphs) + " graphs, " + std::to_string(comparisons) + " comparisons, " + bad.text();
    return res;
}

// Every graph on n vertices as adjacency bitmasks; calls visit(adj).
template <typename Visit>
void for_each_small_graph(std::size_t n, Visit visit) {
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }
    }
    std::array<std::uint8_t, 8> adj{};
    for (std::uint32_t mask = 0; mask < (1U << pairs.size()); ++mask) {
        adj.fill(0);
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if ((mask >> i) & 1U) {
                adj[pairs[i].first] |= static_cast<std::uint8_t>(1U << pairs[i].second);
                adj[pairs[i].second] |= static_cast<std::uint8_t>(1U << pairs[i].first);
            }
        }
        visit(adj);
    }
}

Graph from_adjacency(std::size_t n, const std::array<std::uint8_t, 8>& adj) {
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            if ((adj[a] >> b) & 1U) {
                edges.push_back({a, b});
            }
        }
    }
    return Graph::from_edges(n, edges);
}

std::uint64_t ipow(std::uint64_t base, std::size_t e) {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < e; ++i) {
        out *= base;
    }
    return out;
}

CriterionResult common_neighborhood_suite(Scale scale) {
    CriterionResult res = make_result(2, "clique counts through small sets");
    const std::size_t max_n = desk(scale) ? 7 : 6;
    Violations bad;
    std::size_t checks = 0;
    std::size_t graphs = 0;
    for (std::size_t n = 1; n <= max_n; ++n) {
        for_each_small_graph(n, [&](const std::array<std::uint8_t, 8>& adj) {
            ++graphs;
            // through[r-3][set mask] for sets of size 1 and 2.
            std::map<std::uint32_t, std::uint64_t> through[2];
            for (std::uint32_t a = 0; a < n; ++a) {
                for (std::uint32_t b = a + 1; b < n; ++b) {
                    if (!((adj[a] >> b) & 1U)) {
                        continue;
                    }
                    const std::uint32_t ab = adj[a] & adj[b];
                    for (std::uint32_t c = b + 1; c < n; ++c) {
                        if (!((ab >> c) & 1U)) {
                            continue;
                        }
                        const std::uint32_t tri[] = {a, b, c};
                        for (std::uint32_t x : tri) {
                            ++through[0][1U << x];
                        }
                        ++through[0][(1U << a) | (1U << b)];
                        ++through[0][(1U << a) | (1U << c)];
                        ++through[0][(1U << b) | (1U << c)];
                        const std::uint32_t abc = ab & adj[c];
                        for (std::uint32_t d = c + 1; d < n; ++d) {
                            if (!((abc >> d) & 1U)) {
                                continue;
                            }
                            const std::uint32_t quad[] = {a, b, c, d};
                            for (std::size_t i = 0; i < 4; ++i) {
                                ++through[1][1U << quad[i]];
                                for (std::size_t j = i + 1; j < 4; ++j) {
                                    ++through[1][(1U << quad[i]) | (1U << quad[j])];
                                }
                            }
                        }
                    }
                }
            }
            for (std::uint32_t a = 0; a < n; ++a) {
                for (std::uint32_t b = a; b < n; ++b) {
                    const std::uint32_t set = (1U << a) | (1U << b);
                    const std::size_t size = a == b ? 1 : 2;
                    const auto common = static_cast<std::uint64_t>(std::popcount(
                        static_cast<std::uint32_t>(a == b ? adj[a] : (adj[a] & adj[b]))));
                    for (std::size_t r = 3; r <= 4; ++r) {
                        const auto it = through[r - 3].find(set);
                        const std::uint64_t cliques = it == through[r - 3].end() ? 0 : it->second;
                        ++checks;
                        if (ipow(common, r - size) < cliques) {
                            bad.add("n=" + std::to_string(n) + " set " + std::to_string(set));
                        }
                    }
                }
            }
            // The bitmask tally is cross-checked against the brute-force counter on small n.
            if (n <= 5) {
                const Graph g = from_adjacency(n, adj);
                for (Vertex a = 0; a < n; ++a) {
                    const auto it = through[0].find(1U << a);
                    const Count fast{it == through[0].end() ? 0 : it->second};
                    if (fast != oracle::cliques_containing(g, VertexSet{a}, 3)) {
                        bad.add("tally mismatch on " + graph_text(g));
                    }
                }
            }
        });
    }
    const std::size_t samples = desk(scale) ? 10000 : 1000;
    Rng rng(202);
    for (std::size_t i = 0; i < samples; ++i) {
        const std::size_t n = 8 + rng.below(5);
        const Graph g = sample_gnp(n, 0.3 + 0.6 * rng.uniform(), rng.next());
        for (Vertex a = 0; a < n; ++a) {
            for (Vertex b = a; b < n; ++b) {
                const VertexSet s = a == b ? VertexSet{a} : VertexSet{a, b};
                const VertexSet common = common_neighborhood(g, s);
                const Graph inside = g.induced(common);
                for (std::size_t r = 3; r <= 4; ++r) {
                    const std::size_t rest = r - s.size();
                    const bool is_clique = s.size() == 1 || g.has_edge(a, b);
                    const Count cliques = is_clique ? count_cliques(inside, rest) : Count{0};
                    ++checks;
                    if (Count{ipow(common.size(), rest)} < cliques) {
                        bad.add(graph_text(g) + " S={" + std::to_string(a) + "," + std::to_string(b) + "}");
                    }
                }
            }
        }
    }
    res.hard_ok = bad.count == 0;
    res.detail = std::to_string(graphs) + " exhaustive graphs (n <= " + std::to_string(max_n) + ") + " +
                 std::to_string(samples) + " sampled, " + std::to_string(checks) + " checks, " + bad.text();
    return res;
}

Hypergraph random_hypergraph(Rng& rng) {
    const std::size_t n = 3 + rng.below(10);
    const std::size_t uniformity = 2 + rng.below(std::min<std::size_t>(3, n - 1));
    const std::uint64_t possible = binomial(n, uniformity).to_u64();
    const std::size_t edges = 1 + rng.below(std::min<std::uint64_t>(possible, 3 * n));
    std::set<VertexSet> picked;
    while (picked.size() < edges) {
        std::set<Vertex> e;
        while (e.size() < uniformity) {
            e.insert(static_cast<Vertex>(rng.below(n)));
        }
        picked.insert({e.begin(), e.end()});
    }
    return Hypergraph(n, {picked.begin(), picked.end()});
}

CriterionResult extraction_suite(Scale scale) {
    CriterionResult res = make_result(3, "min-degree extraction");
    const std::size_t count = desk(scale) ? 1000 : 200;
    const Rational bs[] = {Rational(1), Rational(3, 2), Rational(2), Rational(3)};
    Rng rng(303);
    Violations bad;
    for (std::size_t i = 0; i < count; ++i) {
        const Hypergraph h = random_hypergraph(rng);
        for (const Rational& b : bs) {
            try {
                const auto result = extract_min_degree(h, static_cast<double>(to_real(b)));
                if (result.kept_vertices.empty() || !certify_extraction(h, result, b)) {
                    bad.add("hypergraph " + std::to_string(i) + " b=" + to_string(b) + " min degree " +
                            std::to_string(result.min_degree));
                }
            } catch (const InternalError& e) {
                bad.add("hypergraph " + std::to_string(i) + " b=" + to_string(b) + ": " + e.what());
            }
        }
    }
    res.hard_ok = bad.count == 0;
    res.detail = std::to_string(count) + " hypergraphs x 4 values of b, " + bad.text();
    return res;
}

CriterionResult z_dominance(Scale scale) {
    CriterionResult res = make_result(4, "copies bounded by Z");
    const std::size_t trials = desk(scale) ? 23 : 3;
    std::vector<std::string> parts;
    for (const char* f : {"C4", "K2,3", "K3"}) {
        const auto s = run_spec("lemma33_Z_dominance", {{"F", {f}}, {"n", {"8", "10", "12"}}, {"u", {"2", "4", "6"}}},
                                trials, 404);
        if (s.hard_failures > 0) {
            res.hard_ok = false;
        }
        if (desk(scale) && s.pass + s.fail < 200) {
            res.hard_ok = false;
        }
        parts.push_back(std::string(f) + ": " + std::to_string(s.pass) + "/" + std::to_string(s.pass + s.fail) +
                        " (" + std::to_string(s.skip) + " skipped)" + witnesses_of(s));
    }
    res.detail = join(parts, ", ");
    return res;
}

struct Triple {
    long double u, m, n;
};

std::vector<Triple> regime_triples(const Graph& f) {
    const long double x = 2.0L - static_cast<long double>(f.vertex_count() - 2) / static_cast<long double>(f.edge_count() - 1);
    std::vector<Triple> out;
    for (long double n : {100.0L, 1000.0L, 10000.0L}) {
        for (long double ratio : {5.0L, 10.0L, 20.0L, 50.0L}) {
            const long double m = n / ratio;
            const long double lower = std::pow(ratio, x);
            const long double upper = ratio * ratio;
            for (long double u : {lower * 1.01L, std::sqrt(lower * upper), upper * 0.99L}) {
                out.push_back({u, m, n});
            }
        }
    }
    return out;
}

CriterionResult maximizer_suite(Scale scale) {
    CriterionResult res = make_result(5, "weight maximizer is E(F)");
    std::vector<std::string> parts;
    for (const char* spec : {"P2", "K3", "C4", "K2,3"}) {
        const Graph f = named_graph(spec).graph;
        auto triples = regime_triples(f);
        if (!desk(scale)) {
            triples.resize(6);
        }
        // Independent enumeration: (a, b) pairs of every valid family from the oracle.
        std::set<std::pair<std::size_t, std::size_t>> pairs;
        for (const auto& family : oracle::valid_families(f)) {
            std::size_t b = 0;
            for (auto s : family) {
                b += static_cast<std::size_t>(std::popcount(s));
            }
            pairs.insert({family.size(), b});
        }
        const std::pair<std::size_t, std::size_t> edge_pair{f.edge_count(), 2 * f.edge_count()};
        std::size_t in_regime = 0;
        Violations bad;
        for (const Triple& t : triples) {
            if (!in_maximizer_regime(f, t.u, t.m, t.n)) {
                continue;
            }
            ++in_regime;
            Params params{{"F", spec}, {"u", format_real(t.u)}, {"m", format_real(t.m)}, {"n", format_real(t.n)}};
            const TrialOutcome outcome = run_trial("lemma34_maximizer", params, 0);
            if (outcome.status != Status::pass) {
                bad.add(std::string(spec) + " u=" + params["u"] + " m=" + params["m"] + " n=" + params["n"] + ": " +
                        (outcome.status == Status::skip ? "skipped: " : "") + outcome.reason);
            }
            // Oracle side: the unique best (a, b) pair must be (e, 2e).
            const long double lu = std::log(t.u);
            const long double lr = std::log(t.m / t.n);
            std::pair<std::size_t, std::size_t> best{0, 0};
            long double best_w = -INFINITY;
            std::size_t ties = 0;
            for (const auto& p : pairs) {
                const long double w = static_cast<long double>(p.first) * lu + static_cast<long double>(p.second) * lr;
                if (w > best_w + 1e-12L) {
                    best_w = w;
                    best = p;
                    ties = 1;
                } else if (std::abs(w - best_w) <= 1e-12L) {
                    ++ties;
                }
            }
            if (best != edge_pair || ties != 1) {
                bad.add(std::string(spec) + " oracle argmax (" + std::to_string(best.first) + "," +
                        std::to_string(best.second) + ")");
            }
        }
        if (bad.count > 0 || (desk(scale) && in_regime < 20)) {
            res.hard_ok = false;
        }
        parts.push_back(std::string(spec) + ": " + std::to_string(in_regime) + " triples, " + bad.text());
    }
    res.detail = join(parts, "; ");
    return res;
}

CriterionResult k2t_cap_suite(Scale scale) {
    CriterionResult res = make_result(6, "K_{2,t} cap on clique graphs");
    const std::vector<std::string> sizes = desk(scale) ? std::vector<std::string>{"5", "10", "15", "20"}
                                                       : std::vector<std::string>{"5", "10"};
    const std::size_t trials = desk(scale) ? 7 : 2;
    const auto s = run_spec("lemma35_K2t_cap", {{"m", sizes}, {"n", sizes}, {"ell", {"2"}}, {"t", {"3"}}}, trials, 606);
    res.hard_ok = s.hard_failures == 0 && (!desk(scale) || s.pass + s.fail >= 100);
    double worst = 0;
    for (const auto& p : s.points) {
        worst = std::max(worst, std::stod(p.aggregates.at("max_k2t_over_cap")));
    }
    res.detail = std::to_string(s.pass) + "/" + std::to_string(s.pass + s.fail) + " graphs within the cap, max ratio " +
                 format_real(worst) + witnesses_of(s);
    return res;
}

CriterionResult extremal_cap_suite(Scale scale) {
    CriterionResult res = make_result(7, "path-bounded edge cap");
    const std::size_t max_side = desk(scale) ? 4 : 3;
    Violations bad;
    std::size_t exhaustive = 0;
    for (std::size_t m = 1; m <= max_side; ++m) {
        for (std::size_t n = 1; n <= max_side; ++n) {
            const std::size_t cells = m * n;
            for (std::uint32_t mask = 0; mask < (1U << cells); ++mask) {
                std::vector<std::pair<Vertex, Vertex>> edges;
                for (std::size_t i = 0; i < cells; ++i) {
                    if ((mask >> i) & 1U) {
                        edges.emplace_back(static_cast<Vertex>(i / n), static_cast<Vertex>(i % n));
                    }
                }
                const auto b = BipartiteGraph::from_edges(m, n, edges);
                const std::size_t ell = std::max<std::size_t>(1, path_multiplicity(b));
                const long double cap = 4 * std::pow(static_cast<long double>(ell), 0.25L) *
                                            std::pow(static_cast<long double>(n), 0.75L) *
                                            std::sqrt(static_cast<long double>(m)) +
                                        10.0L * m + 10.0L * n;
                ++exhaustive;
                if (!(static_cast<long double>(b.edge_count()) < cap)) {
                    bad.add(std::to_string(m) + "x" + std::to_string(n) + " mask " + std::to_string(mask));
                }
            }
        }
    }
    const std::vector<std::string> sides = desk(scale) ? std::vector<std::string>{"8", "16", "24", "32"}
                                                       : std::vector<std::string>{"8", "16"};
    const std::vector<std::string> ells =
        desk(scale) ? std::vector<std::string>{"1", "2", "3"} : std::vector<std::string>{"1", "2"};
    const auto s = run_spec("lemma36_extremal_cap", {{"m", sides}, {"n", sides}, {"ell", ells}}, desk(scale) ? 2 : 1, 707);
    double worst = 0;
    for (const auto& p : s.points) {
        worst = std::max(worst, std::stod(p.aggregates.at("max_edges_over_cap")));
    }
    res.hard_ok = bad.count == 0 && s.hard_failures == 0;
    res.detail = std::to_string(exhaustive) + " exhaustive graphs (m, n <= " + std::to_string(max_side) + "), " +
                 bad.text() + "; generator " + std::to_string(s.pass) + "/" + std::to_string(s.pass + s.fail) +
                 " below the cap, max e/cap " + format_real(worst) + witnesses_of(s);
    return res;
}

CriterionResult deletion_suite(Scale scale) {
    CriterionResult res = make_result(8, "F-free deletion construction");
    const std::size_t trials = desk(scale) ? 100 : 10;
    const auto s = run_spec("thm14_deletion",
                            {{"F", {"C4"}}, {"r", {"3"}}, {"n", {"20", "30", "40"}}, {"alpha", {"0.1"}}}, trials, 808);
    res.hard_ok = s.hard_failures == 0 && s.skip == 0;
    std::vector<std::string> rates;
    for (const auto& p : s.points) {
        const double rate = std::stod(p.aggregates.at("positive_rate"));
        if (rate < 0.5) {
            res.stat_ok = false;
        }
        rates.push_back("n=" + p.params.at("n") + " " + format_real(rate));
    }
    res.detail = std::to_string(s.pass) + "/" + std::to_string(s.pass + s.fail + s.skip) +
                 " outputs F-free; surviving-clique rate " + join(rates, ", ") + witnesses_of(s);
    return res;
}

CriterionResult clique_count_suite(Scale scale) {
    CriterionResult res = make_result(9, "clique count tail");
    const std::size_t trials = desk(scale) ? 2000 : 200;
    const auto s = run_spec("lemma31_clique_count", {{"n", {"24"}}, {"m", {"6"}}, {"r", {"3"}}, {"u", {"10"}}}, trials,
                            kLemma31Seed);
    const auto& agg = s.points.front().aggregates;
    const double delta = std::stod(agg.at("delta"));
    res.stat_ok = delta >= 1e-3 && s.skip == 0;
    std::string baseline_note;
    if (desk(scale)) {
        if (kLemma31DeltaBaseline <= 0) {
            res.stat_ok = false;
            baseline_note = ", no frozen baseline";
        } else {
            const double drift = std::abs(delta - kLemma31DeltaBaseline) / kLemma31DeltaBaseline;
            res.stat_ok = res.stat_ok && drift <= 0.2;
            baseline_note = ", baseline " + format_real(kLemma31DeltaBaseline) + " (drift " + format_real(drift) + ")";
        }
    }
    res.detail = std::to_string(trials) + " trials, delta " + format_real(delta) + " with freq " +
                 agg.at("freq_above_delta") + ", mean N/(u m^3) " + agg.at("mean_ratio") + baseline_note;
    return res;
}

CriterionResult expansion_suite(Scale scale) {
    CriterionResult res = make_result(10, "edge expansion identity");
    const TrialOutcome k5 = run_trial("thm11_expansion", {{"graph", "complete"}, {"n", "5"}, {"t", "2"}, {"r", "3"}}, 0);
    const bool exact = k5.outputs.at("sum") == "30" && k5.outputs.at("k2t") == "15" && k5.outputs.at("tight") == "1";
    const auto s = run_spec("thm11_expansion", {{"n", {"6", "8", "10"}}, {"p", {"0.4", "0.7"}}, {"t", {"2", "3"}}},
                            desk(scale) ? 20 : 3, 1010);
    res.hard_ok = exact && k5.status == Status::pass && s.hard_failures == 0;
    res.detail = "K5: sum " + k5.outputs.at("sum") + ", N(K_{2,2}) " + k5.outputs.at("k2t") + ", 2N == sum " +
                 (exact ? "yes" : "no") + "; random graphs " + std::to_string(s.pass) + "/" +
                 std::to_string(s.pass + s.fail) + " satisfy sum <= 2N" + witnesses_of(s);
    return res;
}

CriterionResult formula_suite(Scale scale) {
    CriterionResult res = make_result(11, "formula cross-checks");
    Violations bad;
    // Predicate agreement over every graph on at most 7 (smoke: 6) vertices; the
    // predicates depend on (v, e, r) only, so each combination is evaluated once and
    // every graph is checked against the cached verdict.
    const std::size_t max_v = desk(scale) ? 7 : 6;
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, bool> agree;
    std::size_t graphs = 0;
    for (std::size_t v = 3; v <= max_v; ++v) {
        for_each_small_graph(v, [&](const std::array<std::uint8_t, 8>& adj) {
            std::size_t e = 0;
            for (std::size_t x = 0; x < v; ++x) {
                e += static_cast<std::size_t>(std::popcount(static_cast<std::uint32_t>(adj[x])));
            }
            e /= 2;
            if (e < 2) {
                return;
            }
            ++graphs;
            for (std::size_t r = 3; r < v; ++r) {
                const auto key = std::make_tuple(v, e, r);
                auto it = agree.find(key);
                if (it == agree.end()) {
                    it = agree.emplace(key, beta_beats_gnp(v, e, r) == density_beats_gnp(v, e, r)).first;
                }
                if (!it->second) {
                    bad.add("v=" + std::to_string(v) + " e=" + std::to_string(e) + " r=" + std::to_string(r));
                }
            }
        });
    }
    std::size_t crossings = 0;
    for (std::size_t t = 2; t <= 12; ++t) {
        for (std::size_t r = 3; r < 2 + t; ++r) {
            const auto [a, b] = thm11_crossover_exponents(r, t);
            if (a != b) {
                bad.add("crossover exponents differ at r=" + std::to_string(r) + " t=" + std::to_string(t));
            }
            for (long double n : {1e3L, 1e6L, 1e12L}) {
                const long double k = std::pow(n, to_real(Rational(static_cast<std::int64_t>(r) - 2, 2 * static_cast<std::int64_t>(t))));
                try {
                    const auto value = thm11_lower(std::max(k, 1.0L), n, r, t);
                    const long double rel = std::abs(value.log_first - value.log_second);
                    ++crossings;
                    if (rel > 1e-9L) {
                        bad.add("branches differ by " + format_real(rel) + " at r=" + std::to_string(r));
                    }
                } catch (const InternalError& e) {
                    bad.add(e.what());
                }
            }
        }
    }
    std::size_t kk = 0;
    for (std::size_t m = 1; m <= 20; ++m) {
        for (std::size_t r = 1; r <= m; ++r) {
            for (std::size_t s = 1; s <= r; ++s) {
                ++kk;
                const long double got = kruskal_katona_bound(binomial(m, r), r, s);
                if (got != binomial(m, s).to_long_double()) {
                    bad.add("kk m=" + std::to_string(m) + " r=" + std::to_string(r) + " s=" + std::to_string(s) +
                            " gave " + format_real(got));
                }
            }
        }
    }
    res.hard_ok = bad.count == 0;
    res.detail = std::to_string(graphs) + " patterns, " + std::to_string(crossings) + " crossover evaluations, " +
                 std::to_string(kk) + " binomial identities, " + bad.text();
    return res;
}

} // namespace

Scale parse_scale(const std::string& name) {
    if (name == "smoke") {
        return Scale::smoke;
    }
    if (name == "desk") {
        return Scale::desk;
    }
    throw InputError("unknown scale '" + name + "' (expected smoke or desk)");
}

std::string to_string(Scale scale) {
    return scale == Scale::smoke ? "smoke" : "desk";
}

std::string CriterionResult::label() const {
    if (!hard_ok) {
        return "FAIL";
    }
    return stat_ok ? "PASS" : "WARN";
}

CriterionResult run_criterion(int id, Scale scale) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult res;
    try {
        switch (id) {
        case 1:
            res = oracle_equivalence(scale);
            break;
        case 2:
            res = common_neighborhood_suite(scale);
            break;
        case 3:
            res = extraction_suite(scale);
            break;
        case 4:
            res = z_dominance(scale);
            break;
        case 5:
            res = maximizer_suite(scale);
            break;
        case 6:
            res = k2t_cap_suite(scale);
            break;
        case 7:
            res = extremal_cap_suite(scale);
            break;
        case 8:
            res = deletion_suite(scale);
            break;
        case 9:
            res = clique_count_suite(scale);
            break;
        case 10:
            res = expansion_suite(scale);
            break;
        case 11:
            res = formula_suite(scale);
            break;
        default:
            throw InputError("no criterion " + std::to_string(id));
        }
    } catch (const InputError&) {
        throw;
    } catch (const std::exception& e) {
        res.id = id;
        res.name = "criterion " + std::to_string(id);
        res.hard_ok = false;
        res.detail = std::string("aborted: ") + e.what();
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

std::string format_criterion(const CriterionResult& r) {
    std::ostringstream out;
    out << "criterion " << r.id << ' ' << r.label() << ' ' << r.name << ": " << r.detail << " [" << std::fixed
        << std::setprecision(1) << r.seconds << " s]";
    return out.str();
}

std::vector<CriterionResult> verify_all(Scale scale, std::ostream* progress) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriterionCount; ++id) {
        out.push_back(run_criterion(id, scale));
        if (progress != nullptr) {
            *progress << format_criterion(out.back()) << std::endl;
        }
    }
    return out;
}

} // namespace cliquesat::lab
