#include "cliquesat/errors.hpp"
#include "cliquesat/graph.hpp"
#include "cliquesat/graph_io.hpp"
#include "cliquesat/named_graph.hpp"
#include "cliquesat/random.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

using namespace cliquesat;

namespace {

Graph from_text(const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
}

Graph random_graph(std::size_t n, double p, Rng& rng) {
    GraphBuilder builder(n);
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            if (rng.bernoulli(p)) {
                builder.add_edge(a, b);
            }
        }
    }
    return std::move(builder).build();
}

} // namespace

TEST_CASE("common neighborhood on small graphs") {
    const Vertex pair01[] = {0, 1};
    const Vertex pair02[] = {0, 2};
    CHECK(common_neighborhood(complete_graph(5), pair01) == VertexSet{2, 3, 4});
    CHECK(common_neighborhood(cycle_graph(4), pair02) == VertexSet{1, 3});
    CHECK(common_neighborhood(cycle_graph(4), pair01).empty());

    const Vertex bad[] = {0, 9};
    CHECK_THROWS_AS((void)common_neighborhood(cycle_graph(4), bad), InputError);
    CHECK_THROWS_AS((void)common_neighborhood(cycle_graph(4), std::span<const Vertex>{}), InputError);
}

TEST_CASE("common neighborhood shrinks as the set grows") {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = random_graph(9, 0.6, rng);
        for (Vertex a = 0; a < 9; ++a) {
            for (Vertex b = a + 1; b < 9; ++b) {
                const Vertex one[] = {a};
                const Vertex two[] = {a, b};
                const auto big = common_neighborhood(g, one);
                for (Vertex w : common_neighborhood(g, two)) {
                    CHECK(std::binary_search(big.begin(), big.end(), w));
                }
            }
        }
    }
}

TEST_CASE("union of cliques") {
    const Graph g = union_graph(CliqueUnion(4, 3, {{0, 1, 2}, {1, 2, 3}}));
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(g.validate());

    const Graph empty = union_graph(CliqueUnion(5, 3, {}));
    CHECK(empty.vertex_count() == 5);
    CHECK(empty.edge_count() == 0);

    CHECK(union_graph(CliqueUnion(6, 3, {{0, 1, 2}, {3, 4, 5}})).edge_count() == 6);
}

TEST_CASE("union edge count is at most the sum of clique edges") {
    Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        std::set<VertexSet> picked;
        const std::size_t count = 1 + rng.below(5);
        while (picked.size() < count) {
            VertexSet c;
            while (c.size() < 3) {
                const auto v = static_cast<Vertex>(rng.below(8));
                if (std::find(c.begin(), c.end(), v) == c.end()) {
                    c.push_back(v);
                }
            }
            std::sort(c.begin(), c.end());
            picked.insert(c);
        }
        const CliqueUnion cu(8, 3, {picked.begin(), picked.end()});
        bool edge_disjoint = true;
        for (std::size_t i = 0; i < cu.size(); ++i) {
            for (std::size_t j = i + 1; j < cu.size(); ++j) {
                edge_disjoint = edge_disjoint && intersect_size(cu.clique(i), cu.clique(j)) < 2;
            }
        }
        const std::size_t edges = union_graph(cu).edge_count();
        CHECK(edges <= 3 * cu.size());
        CHECK((edges == 3 * cu.size()) == edge_disjoint);
    }
}

TEST_CASE("clique union rejects bad cliques") {
    CHECK_THROWS_AS(CliqueUnion(4, 3, {{0, 1}}), InputError);
    CHECK_THROWS_AS(CliqueUnion(4, 3, {{0, 1, 7}}), InputError);
    CHECK_THROWS_AS(CliqueUnion(4, 3, {{0, 1, 2}, {2, 1, 0}}), InputError);
    CHECK_THROWS_AS(CliqueUnion(4, 3, {{0, 0, 1}}), InputError);
    const CliqueUnion cu(5, 2, {{0, 1}, {2, 3}, {3, 4}});
    const std::size_t drop[] = {1};
    CHECK(cu.without(drop).cliques() == std::vector<VertexSet>{{0, 1}, {3, 4}});
    CHECK(cu.with({1, 2}).size() == 4);
}

TEST_CASE("graph builder and validation") {
    GraphBuilder builder(3);
    CHECK_THROWS_AS(builder.add_edge(1, 1), InputError);
    CHECK_THROWS_AS(builder.add_edge(0, 3), InputError);
    builder.add_edge(2, 0);
    builder.add_edge(0, 2);
    const Graph g = std::move(builder).build();
    CHECK(g.edge_count() == 1);
    CHECK(g.has_edge(0, 2));
    CHECK_FALSE(g.has_edge(0, 1));
    CHECK(g.validate());

    const Edge dup[] = {{0, 1}, {1, 0}};
    CHECK_THROWS_AS(Graph::from_edges(2, dup), InputError);
}

TEST_CASE("edge-list reading and writing") {
    const Graph path = from_text("3 2\n0 1\n1 2\n");
    CHECK(path == path_graph(2));

    std::ostringstream out;
    write_graph(out, complete_graph(3));
    CHECK(out.str() == "3 3\n0 1\n0 2\n1 2\n");

    try {
        (void)from_text("2 1\n0 5\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS((void)from_text("3 x\n"), ParseError);
    CHECK_THROWS_AS((void)from_text("3 2\n0 1\n1 0\n"), ParseError);
    CHECK_THROWS_AS((void)from_text("3 2\n0 1\n"), ParseError);
    CHECK_THROWS_AS((void)from_text("3 1\n1 1\n"), ParseError);
}

TEST_CASE("round trips") {
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = random_graph(12, 0.3, rng);
        std::stringstream buffer;
        write_graph(buffer, g);
        CHECK(read_graph(buffer) == g);
    }
    const BipartiteGraph b = bipartite_cycle(4);
    std::stringstream buffer;
    write_bipartite(buffer, b);
    CHECK(buffer.str().rfind("4 4 8\n", 0) == 0);
    CHECK(read_bipartite(buffer) == b);

    const CliqueUnion cu(6, 3, {{0, 1, 2}, {2, 4, 5}});
    std::stringstream cu_buffer;
    write_clique_union(cu_buffer, cu);
    CHECK(read_clique_union(cu_buffer) == cu);
}

TEST_CASE("named graphs") {
    const auto k23 = named_graph("K2,3");
    CHECK(k23.graph.vertex_count() == 5);
    CHECK(k23.graph.edge_count() == 6);
    REQUIRE(k23.bipartition);
    CHECK(*k23.bipartition == std::pair<std::size_t, std::size_t>{2, 3});

    const auto c8 = named_graph("C8");
    CHECK(c8.graph.vertex_count() == 8);
    CHECK(c8.graph.edge_count() == 8);
    CHECK(c8.graph.min_degree() == 2);

    const auto p4 = named_graph("P4");
    CHECK(p4.graph.vertex_count() == 5);
    CHECK(p4.graph.edge_count() == 4);

    const auto tree = named_graph("T:0,0,1");
    CHECK(tree.graph.edge_count() == 3);
    CHECK(tree.graph.has_edge(1, 3));

    CHECK(named_graph("K4").clique_order == std::size_t{4});
    CHECK(named_graph("S3").graph.max_degree() == 3);
    for (const char* bad : {"", "Q3", "K", "C2", "T:1", "K2,", "P-1", "K3x"}) {
        CHECK_THROWS_AS(named_graph(bad), InputError);
    }
}

TEST_CASE("bipartite graph queries") {
    const BipartiteGraph b = complete_bipartite(2, 3);
    CHECK(b.edge_count() == 6);
    CHECK(b.max_u_degree() == 3);
    CHECK(b.validate());
    const Graph g = b.as_graph();
    CHECK(g.vertex_count() == 5);
    CHECK(g.has_edge(0, 2));
    CHECK_FALSE(g.has_edge(0, 1));
    const Vertex keep[] = {1};
    const BipartiteGraph r = b.restrict_u(keep);
    CHECK(r.u_size() == 1);
    CHECK(r.edge_count() == 3);

    const std::pair<Vertex, Vertex> dup[] = {{0, 0}, {0, 0}};
    CHECK_THROWS_AS(BipartiteGraph::from_edges(1, 1, dup), InputError);
}

TEST_CASE("hypergraph invariants") {
    CHECK_THROWS_AS(Hypergraph(3, {{}}), InputError);
    CHECK_THROWS_AS(Hypergraph(3, {{0, 3}}), InputError);
    const Hypergraph h(4, {{2, 0, 1}, {1, 3}, {1, 3}});
    CHECK(h.edge(0) == VertexSet{0, 1, 2});
    CHECK(h.degree(1) == 3);
    CHECK(h.degree(3) == 2);
    CHECK(std::vector<std::size_t>(h.incident(3).begin(), h.incident(3).end()) == std::vector<std::size_t>{1, 2});
}
