#include "cliquesat/bounds.hpp"
#include "cliquesat/constructions.hpp"
#include "cliquesat/counters.hpp"
#include "cliquesat/errors.hpp"
#include "cliquesat/named_graph.hpp"
#include "cliquesat/oracle.hpp"
#include "cliquesat/random.hpp"

#include <doctest.h>

#include <cmath>

using namespace cliquesat;

namespace {

double lemma36_cap(std::size_t ell, std::size_t m, std::size_t n) {
    return 4 * std::pow(static_cast<double>(ell), 0.25) * std::pow(static_cast<double>(n), 0.75) *
               std::sqrt(static_cast<double>(m)) +
           10.0 * static_cast<double>(m) + 10.0 * static_cast<double>(n);
}

double mean_clique_count(std::size_t n, std::size_t m, double u, int trials, std::uint64_t base) {
    double total = 0;
    for (int i = 0; i < trials; ++i) {
        total += static_cast<double>(sample_random_clique_graph({n, m, u, base + static_cast<std::uint64_t>(i)}).cliques.size());
    }
    return total / trials;
}

} // namespace

TEST_CASE("random clique graph edge cases") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto full = sample_random_clique_graph({4, 4, 1, seed});
        CHECK(full.saturated);
        CHECK(full.cliques.cliques() == std::vector<VertexSet>{{0, 1, 2, 3}});
        CHECK(sample_random_clique_graph({10, 3, 0, seed}).cliques.size() == 0);
    }
    CHECK_THROWS_AS(sample_random_clique_graph({5, 1, 1, 0}), InputError);
    CHECK_THROWS_AS(sample_random_clique_graph({3, 4, 1, 0}), InputError);
    CHECK_THROWS_AS(sample_random_clique_graph({5, 3, -1, 0}), InputError);
}

TEST_CASE("random clique graph is deterministic per seed") {
    for (std::uint64_t seed : {1ULL, 42ULL, 9001ULL}) {
        CHECK(sample_random_clique_graph({20, 4, 8, seed}).cliques == sample_random_clique_graph({20, 4, 8, seed}).cliques);
        CHECK(sample_random_clique_graph({60, 6, 8, seed}).cliques == sample_random_clique_graph({60, 6, 8, seed}).cliques);
    }
    CHECK_FALSE(sample_random_clique_graph({20, 4, 8, 1}).cliques == sample_random_clique_graph({20, 4, 8, 2}).cliques);
}

TEST_CASE("random clique graph mean matches u") {
    // C(20,4) = 4845 takes the per-subset branch.
    const double small = mean_clique_count(20, 4, 8, 10000, 1000);
    CHECK(std::abs(small - 8) < 4 * std::sqrt(8.0 / 10000));
    // C(60,6) is about 5e7 and takes the count-then-draw branch.
    const auto big = sample_random_clique_graph({60, 6, 8, 3});
    CHECK_FALSE(big.exhaustive);
    const double large = mean_clique_count(60, 6, 8, 4000, 50000);
    CHECK(std::abs(large - 8) < 4 * std::sqrt(8.0 / 4000));
    // Tiny p goes through the Poisson branch.
    const double tiny = mean_clique_count(200, 20, 3, 2000, 90000);
    CHECK(std::abs(tiny - 3) < 4 * std::sqrt(3.0 / 2000));
}

TEST_CASE("disjoint cliques") {
    CHECK(count_cliques(disjoint_cliques(3, 4), 3) == Count{12});
    CHECK(oracle::count_cliques(disjoint_cliques(3, 4), 3) == Count{12});
    CHECK(count_cliques(disjoint_cliques(1, 5), 5) == Count{1});
    const Graph matching = disjoint_cliques(5, 2);
    CHECK(matching.edge_count() == 5);
    CHECK(count_cliques(matching, 3) == Count{0});
}

TEST_CASE("clique graph of a bipartite graph") {
    CHECK(clique_graph(complete_bipartite(1, 3)) == complete_graph(3));
    const Graph c8 = clique_graph(bipartite_cycle(4));
    CHECK(c8.vertex_count() == 4);
    CHECK(count_subgraph(cycle_graph(4), c8) == Count{1});
    CHECK(c8.edge_count() == 4);
    const Graph empty = clique_graph(BipartiteGraph::from_edges(2, 5, {}));
    CHECK(empty.vertex_count() == 5);
    CHECK(empty.edge_count() == 0);
    CHECK(oracle::clique_graph(bipartite_cycle(4)) == c8);
}

TEST_CASE("pruning high-degree U-vertices") {
    const auto same = prune_high_degree(complete_bipartite(2, 3), {3});
    CHECK(same.pruned == complete_bipartite(2, 3));
    CHECK(same.kept_majority);

    const auto gone = prune_high_degree(complete_bipartite(2, 3), {2});
    CHECK(gone.pruned.u_size() == 0);
    CHECK(gone.edges_after == 0);
    CHECK_FALSE(gone.kept_majority);

    const std::pair<Vertex, Vertex> star_edges[] = {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}};
    const auto star = prune_high_degree(BipartiteGraph::from_edges(2, 6, star_edges), {2});
    CHECK(star.kept_u == VertexSet{1});
    CHECK(star.edges_after == 1);
    CHECK(star.edges_before == 6);
}

TEST_CASE("deletion construction") {
    const Graph c4 = cycle_graph(4);
    const auto none = build_f_free_clique_graph(10, 3, c4, 0, 1);
    CHECK(none.cliques.size() == 0);
    CHECK(none.report.final_cliques == 0);

    int positive = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto out = build_f_free_clique_graph(30, 3, c4, 0.1, seed);
        CHECK(count_subgraph(c4, union_graph(out.cliques)) == Count{0});
        CHECK(out.report.final_cliques == out.report.initial_cliques - out.report.removed.size());
        CHECK(Count{out.report.removed.size()} <= out.report.pairs);
        positive += out.report.final_cliques > 0 ? 1 : 0;
    }
    CHECK(positive >= 5);

    // Gates: 2-balanced pattern and r < v(F).
    const Edge pendant[] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}};
    CHECK_THROWS_AS(build_f_free_clique_graph(20, 3, Graph::from_edges(5, pendant), 0.1, 1), InputError);
    CHECK_THROWS_AS(build_f_free_clique_graph(20, 4, c4, 0.1, 1), InputError);

    // Two disjoint edges: whatever the balance check says decides the gate.
    const Edge matching[] = {{0, 1}, {2, 3}};
    const Graph two_k2 = Graph::from_edges(4, matching);
    if (is_2_balanced(two_k2)) {
        const auto out = build_f_free_clique_graph(8, 3, two_k2, 0.05, 3);
        CHECK(count_subgraph(two_k2, union_graph(out.cliques)) == Count{0});
    } else {
        CHECK_THROWS_AS(build_f_free_clique_graph(8, 3, two_k2, 0.05, 3), InputError);
    }
}

TEST_CASE("path-bounded search") {
    const auto tiny = search_path_bounded_bipartite(4, 4, 1, 4, 7);
    CHECK(path_multiplicity(tiny.graph) <= 1);
    CHECK(oracle::path_multiplicity(tiny.graph, 4) <= 1);

    const auto star = search_path_bounded_bipartite(1, 5, 1, 5, 7);
    CHECK(star.graph == complete_bipartite(1, 5));
    CHECK(star.reached_target);

    for (SearchStrategy strategy : {SearchStrategy::random_order, SearchStrategy::degree_balanced}) {
        const auto target = static_cast<std::size_t>(std::ceil(4 * std::pow(2.0, 0.25) * std::pow(16.0, 0.75) * 4));
        const auto dense = search_path_bounded_bipartite(16, 16, 2, target, 11, strategy);
        CHECK(path_multiplicity(dense.graph) <= 2);
        CHECK(static_cast<double>(dense.graph.edge_count()) < lemma36_cap(2, 16, 16));
        CHECK(parse_strategy(to_string(strategy)) == strategy);
    }
    CHECK_THROWS_AS(parse_strategy("annealing"), InputError);
}

TEST_CASE("path-bounded graphs stay below the extremal cap") {
    // Every bipartite graph with m, n <= 3, any ell.
    for (std::size_t m = 1; m <= 3; ++m) {
        for (std::size_t n = 1; n <= 3; ++n) {
            const std::size_t pairs = m * n;
            for (std::uint32_t mask = 0; mask < (1U << pairs); ++mask) {
                std::vector<std::pair<Vertex, Vertex>> edges;
                for (std::size_t i = 0; i < pairs; ++i) {
                    if ((mask >> i) & 1U) {
                        edges.emplace_back(static_cast<Vertex>(i / n), static_cast<Vertex>(i % n));
                    }
                }
                const auto b = BipartiteGraph::from_edges(m, n, edges);
                const std::size_t ell = std::max<std::size_t>(1, path_multiplicity(b));
                CHECK(static_cast<double>(b.edge_count()) < lemma36_cap(ell, m, n));
            }
        }
    }
}

TEST_CASE("K_{2,t} cap on clique graphs of path-bounded graphs") {
    Rng rng(314);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t m = 4 + rng.below(10);
        const std::size_t n = 4 + rng.below(10);
        const auto search = search_path_bounded_bipartite(m, n, 2, m * n, rng.next());
        const auto& b = search.graph;
        const Graph k = clique_graph(b);
        CHECK(count_complete_bipartite(k, 2, 3) <= k2t_clique_graph_cap(2, b.max_u_degree(), 3, b.u_size()));
    }
    CHECK(k2t_clique_graph_cap(2, 3, 3, 10) == Count{64 * 243 * 10});
}

TEST_CASE("clique-graph construction") {
    Lemma37Params params;
    params.n = 16;
    params.seed = 5;
    const auto out = lemma37_construction(params);
    const auto& report = out.report;
    CHECK(report.u_size == 64);
    CHECK(report.edge_target == 128);
    CHECK(report.degree_cap == 8);
    CHECK(report.multiplicity <= 2);
    CHECK(report.k2t <= report.k2t_cap);
    CHECK(report.cliques == count_cliques(out.graph, 3));

    params.n = 9;
    const auto nine = lemma37_construction(params);
    CHECK(nine.report.cliques == oracle::count_cliques(nine.graph, 3));
    CHECK(nine.report.k2t == oracle::count_subgraph(complete_bipartite_graph(2, 3), nine.graph));

    params.epsilon = Rational(1, 5);
    CHECK_THROWS_AS(lemma37_construction(params), InputError);
    params.epsilon = Rational(0);
    params.t = 2;
    CHECK_THROWS_AS(lemma37_construction(params), InputError);
}
