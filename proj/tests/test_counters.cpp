#include "cliquesat/constructions.hpp"
#include "cliquesat/counters.hpp"
#include "cliquesat/errors.hpp"
#include "cliquesat/named_graph.hpp"
#include "cliquesat/oracle.hpp"
#include "cliquesat/random.hpp"

#include <doctest.h>

using namespace cliquesat;

namespace {

Graph union_of(std::size_t n, std::vector<VertexSet> cliques) {
    const std::size_t m = cliques.front().size();
    return union_graph(CliqueUnion(n, m, std::move(cliques)));
}

BipartiteGraph random_bipartite(std::size_t m, std::size_t n, double p, Rng& rng) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < m; ++u) {
        for (Vertex v = 0; v < n; ++v) {
            if (rng.bernoulli(p)) {
                edges.emplace_back(u, v);
            }
        }
    }
    return BipartiteGraph::from_edges(m, n, edges);
}

} // namespace

TEST_CASE("clique counts") {
    CHECK(count_cliques(complete_graph(5), 3) == Count{10});
    CHECK(count_cliques(cycle_graph(4), 3) == Count{0});
    const Graph two = union_of(4, {{0, 1, 2}, {1, 2, 3}});
    CHECK(count_cliques(two, 3) == Count{2});
    CHECK(oracle::count_cliques(two, 3) == Count{2});
    CHECK(count_cliques(complete_graph(7), 1) == Count{7});
    CHECK(count_cliques(complete_graph(7), 2) == Count{21});
    CHECK(count_cliques(complete_graph(12), 6) == binomial(12, 6));
    CHECK(count_cliques(complete_graph(4), 5) == Count{0});
    CHECK(list_cliques(two, 3) == std::vector<VertexSet>{{0, 1, 2}, {1, 2, 3}});
}

TEST_CASE("subgraph counts") {
    CHECK(count_subgraph(complete_bipartite_graph(2, 2), complete_graph(4)) == Count{3});
    CHECK(count_subgraph(path_graph(2), complete_graph(3)) == Count{3});
    const Graph host = union_of(4, {{0, 1, 2}, {0, 1, 3}});
    CHECK(count_subgraph(cycle_graph(4), host) == Count{1});
    CHECK(oracle::count_subgraph(cycle_graph(4), host) == Count{1});
    CHECK(automorphism_count(cycle_graph(5)) == Count{10});
    CHECK(automorphism_count(complete_bipartite_graph(2, 3)) == Count{12});
    CHECK_THROWS_AS(count_subgraph(path_graph(10), complete_graph(12)), CapabilityError);
}

TEST_CASE("complete bipartite counts") {
    CHECK(count_complete_bipartite(complete_graph(5), 2, 2) == Count{15});
    CHECK(count_complete_bipartite(star_graph(4), 2, 2) == Count{0});
    CHECK(count_complete_bipartite(complete_bipartite_graph(2, 3), 2, 3) == Count{1});
    CHECK(count_complete_bipartite(star_graph(4), 1, 3) == Count{4});
    CHECK_THROWS_AS(count_complete_bipartite(star_graph(4), 3, 2), InputError);
}

TEST_CASE("specialized counters agree with the oracle") {
    Rng rng(2024);
    const char* patterns[] = {"K3", "K4", "K2,2", "K2,3", "P3", "C4", "S3"};
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t n = 4 + rng.below(6);
        const Graph g = sample_gnp(n, 0.2 + 0.6 * rng.uniform(), rng.next());
        for (const char* spec : patterns) {
            const auto pattern = named_graph(spec);
            const Count brute = oracle::count_subgraph(pattern.graph, g);
            CHECK(count_subgraph(pattern.graph, g) == brute);
            CHECK(count_pattern(pattern, g).count == brute);
        }
        for (std::size_t r = 1; r <= 5; ++r) {
            CHECK(count_cliques(g, r) == oracle::count_cliques(g, r));
        }
    }
}

TEST_CASE("edge clique degree") {
    CHECK(edge_clique_degree(complete_graph(5), {0, 1}, 3) == Count{3});
    CHECK(edge_clique_degree(complete_graph(5), {2, 4}, 4) == Count{3});
    CHECK(edge_clique_degree(cycle_graph(4), {0, 1}, 3) == Count{0});
    CHECK_THROWS_AS(edge_clique_degree(cycle_graph(4), {0, 2}, 3), InputError);
}

TEST_CASE("cliques through a set are bounded by its common neighborhood") {
    Rng rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = sample_gnp(8, 0.7, rng.next());
        for (std::size_t r : {3, 4}) {
            for (Vertex a = 0; a < 8; ++a) {
                for (Vertex b = a; b < 8; ++b) {
                    const VertexSet s = a == b ? VertexSet{a} : VertexSet{a, b};
                    const Count through = oracle::cliques_containing(g, s, r);
                    const auto c = common_neighborhood(g, s).size();
                    Count cap{1};
                    for (std::size_t i = 0; i < r - s.size(); ++i) {
                        cap *= Count{c};
                    }
                    CHECK(through <= cap);
                }
            }
        }
    }
}

TEST_CASE("edge expansion counts each K_{2,t} at most twice") {
    Rng rng(99);
    for (int trial = 0; trial < 80; ++trial) {
        const Graph g = sample_gnp(4 + rng.below(6), 0.6, rng.next());
        for (std::size_t t : {2, 3}) {
            Count expansion{0};
            for (const Edge& e : g.edges()) {
                const Vertex ends[] = {e.u, e.v};
                expansion += binomial(common_neighborhood(g, ends).size(), t);
            }
            CHECK(expansion <= Count{2} * count_complete_bipartite(g, 2, t));
        }
    }
    Count k5{0};
    for (const Edge& e : complete_graph(5).edges()) {
        const Vertex ends[] = {e.u, e.v};
        k5 += binomial(common_neighborhood(complete_graph(5), ends).size(), 2);
    }
    CHECK(k5 == Count{30});
}

TEST_CASE("path multiplicity") {
    CHECK(path_multiplicity(bipartite_cycle(4)) == 2);
    CHECK(path_multiplicity(complete_bipartite(1, 3)) == 1);
    CHECK(path_multiplicity(complete_bipartite(2, 2)) == 2);
    CHECK(path_multiplicity(bipartite_cycle(4), 2) == 1);
    CHECK(oracle::path_multiplicity(bipartite_cycle(4), 4) == 2);
    CHECK_THROWS_AS(path_multiplicity(bipartite_cycle(4), 3), InputError);

    Rng rng(17);
    for (int trial = 0; trial < 150; ++trial) {
        const auto b = random_bipartite(1 + rng.below(5), 2 + rng.below(5), 0.5, rng);
        CHECK(path_multiplicity(b, 4) == oracle::path_multiplicity(b, 4));
        CHECK(path_multiplicity(b, 2) == oracle::path_multiplicity(b, 2));
    }
}

TEST_CASE("incremental path counter matches a rebuild") {
    Rng rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t m = 2 + rng.below(5);
        const std::size_t n = 2 + rng.below(6);
        const std::size_t limit = 1 + rng.below(3);
        PathCounter counter(m, n);
        for (int step = 0; step < 30; ++step) {
            const auto u = static_cast<Vertex>(rng.below(m));
            const auto v = static_cast<Vertex>(rng.below(n));
            const bool had = counter.has_edge(u, v);
            const bool added = counter.try_add_edge(u, v, limit);
            const BipartiteGraph now = counter.graph();
            CHECK(oracle::path_multiplicity(now, 4) <= limit);
            if (!had && !added) {
                // The rejected edge really would break the limit.
                auto edges = now.edges();
                edges.emplace_back(u, v);
                CHECK(oracle::path_multiplicity(BipartiteGraph::from_edges(m, n, edges), 4) > limit);
            }
        }
    }
}

TEST_CASE("labeled P4 counts") {
    CHECK(count_labeled_p4(bipartite_cycle(4), 0) == Count{8});
    CHECK(oracle::count_labeled_p4(bipartite_cycle(4), 0) == Count{8});
    CHECK(count_labeled_p4(complete_bipartite(1, 2), 0) == Count{0});
    // With U the three-vertex side, every U-degree is 2 and the threshold excludes all.
    CHECK(count_labeled_p4(complete_bipartite(3, 2), 3) == Count{0});
    // With U the two-vertex side both U-vertices qualify: 3 middles, 2 orders, 2 * 1 ends.
    CHECK(count_labeled_p4(complete_bipartite(2, 3), 3) == Count{12});
    CHECK(oracle::count_labeled_p4(complete_bipartite(2, 3), 3) == Count{12});

    Rng rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        const auto b = random_bipartite(2 + rng.below(4), 3 + rng.below(4), 0.6, rng);
        for (std::size_t threshold : {0, 2, 3}) {
            CHECK(count_labeled_p4(b, threshold) == oracle::count_labeled_p4(b, threshold));
        }
    }
}

TEST_CASE("degeneracy order is a permutation") {
    const Graph g = sample_gnp(15, 0.4, 1);
    auto order = degeneracy_order(g);
    std::sort(order.begin(), order.end());
    for (Vertex v = 0; v < 15; ++v) {
        CHECK(order[v] == v);
    }
}
