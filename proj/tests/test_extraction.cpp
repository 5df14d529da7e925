#include "cliquesat/constructions.hpp"
#include "cliquesat/counters.hpp"
#include "cliquesat/errors.hpp"
#include "cliquesat/extraction.hpp"
#include "cliquesat/named_graph.hpp"
#include "cliquesat/random.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace cliquesat;

namespace {

Hypergraph random_hypergraph(Rng& rng) {
    const std::size_t n = 3 + rng.below(10);
    const std::size_t uniformity = 2 + rng.below(std::min<std::size_t>(3, n - 1));
    const std::size_t edges = 1 + rng.below(3 * n);
    std::set<VertexSet> picked;
    while (picked.size() < edges) {
        std::set<Vertex> e;
        while (e.size() < uniformity) {
            e.insert(static_cast<Vertex>(rng.below(n)));
        }
        picked.insert({e.begin(), e.end()});
        if (picked.size() == binomial(n, uniformity).to_u64()) {
            break;
        }
    }
    return Hypergraph(n, {picked.begin(), picked.end()});
}

} // namespace

TEST_CASE("extraction on hand-traced hypergraphs") {
    const auto single = extract_min_degree(Hypergraph(3, {{0, 1, 2}}), 1);
    CHECK(single.kept_vertices == VertexSet{0, 1, 2});
    CHECK(single.min_degree == 1);
    CHECK(single.guarantee == doctest::Approx(1.0 / 6.0));

    // Star with center 0 and leaves 1..5, plus isolated vertices 6..9.
    const Hypergraph star(10, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
    const auto peeled = extract_min_degree(star, 1);
    CHECK(peeled.kept_vertices == VertexSet{0, 1, 2, 3, 4, 5});
    CHECK(peeled.removal_order == std::vector<Vertex>{6, 7, 8, 9});
    CHECK(peeled.min_degree == 1);
    CHECK(certify_extraction(star, peeled, Rational(1)));

    const Hypergraph k6 = clique_hypergraph(complete_graph(6), 2);
    const auto whole = extract_min_degree(k6, 2);
    CHECK(whole.kept_vertices.size() == 6);
    CHECK(whole.min_degree == 5);
    CHECK(whole.kept_edges == 15);
    CHECK(certify_extraction(k6, whole, Rational(2)));

    CHECK_THROWS_AS(extract_min_degree(Hypergraph(3, {}), 1), InputError);
    CHECK_THROWS_AS(extract_min_degree(k6, 0.5), InputError);
}

TEST_CASE("extraction guarantee on random hypergraphs") {
    Rng rng(2718);
    const Rational bs[] = {Rational(1), Rational(3, 2), Rational(2), Rational(3)};
    for (int trial = 0; trial < 300; ++trial) {
        const Hypergraph h = random_hypergraph(rng);
        for (const Rational& b : bs) {
            const auto result = extract_min_degree(h, static_cast<double>(to_real(b)));
            CHECK_FALSE(result.kept_vertices.empty());
            CHECK(static_cast<long double>(result.min_degree) >= result.guarantee);
            CHECK(certify_extraction(h, result, b));
            // Same input, same output.
            CHECK(extract_min_degree(h, static_cast<double>(to_real(b))).kept_vertices == result.kept_vertices);
        }
    }
}

TEST_CASE("certificate rejects a degree below the guarantee") {
    const Hypergraph k6 = clique_hypergraph(complete_graph(6), 2);
    ExtractionResult fake = extract_min_degree(k6, 1);
    fake.min_degree = 0;
    CHECK_FALSE(certify_extraction(k6, fake, Rational(1)));
}

TEST_CASE("greedy tree count") {
    const auto p2 = greedy_tree_count(complete_graph(9), path_graph(2), 8);
    CHECK(p2.bound == Count{38});
    CHECK(p2.exact == Count{252});
    CHECK(p2.certified);
    CHECK(p2.runs >= p2.run_floor);

    const auto edge = greedy_tree_count(complete_graph(7), path_graph(1), 6);
    CHECK(edge.bound == Count{14});
    CHECK(edge.exact == Count{21});
    CHECK(edge.certified);

    const auto boundary = greedy_tree_count(complete_graph(9), path_graph(2), 6);
    CHECK(boundary.bound == Count{14});
    CHECK(boundary.certified);

    CHECK_THROWS_AS(greedy_tree_count(complete_graph(9), path_graph(2), 5), InputError);
    CHECK_THROWS_AS(greedy_tree_count(complete_graph(9), cycle_graph(3), 8), InputError);
    CHECK_THROWS_AS(greedy_tree_count(cycle_graph(12), path_graph(2), 6), InputError);
}

TEST_CASE("greedy bound never exceeds the exact count") {
    Rng rng(8);
    const char* trees[] = {"P1", "P2", "P3", "S3", "T:0,0,1"};
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = sample_gnp(12 + rng.below(4), 0.85, rng.next());
        for (const char* spec : trees) {
            const Graph t = named_graph(spec).graph;
            const std::size_t delta = g.min_degree();
            if (delta < 2 * t.vertex_count()) {
                continue;
            }
            CHECK(greedy_tree_count(g, t, delta).certified);
        }
    }
}

TEST_CASE("tree pipeline") {
    const auto blocks = prop15_pipeline(disjoint_cliques(4, 6), path_graph(3), 3);
    CHECK(blocks.hyperedges == 80);
    CHECK(blocks.b == Rational(3));
    CHECK(blocks.extraction_certified);
    CHECK(blocks.certified);
    CHECK(blocks.bound <= blocks.exact.to_long_double());

    const auto none = prop15_pipeline(cycle_graph(6), path_graph(3), 3);
    CHECK(none.hyperedges == 0);
    CHECK(none.bound == 0);
    CHECK(none.certified);

    const auto star = prop15_pipeline(complete_graph(10), star_graph(4), 3);
    CHECK(star.exact == Count{10 * 126});
    CHECK(star.certified);
    CHECK(star.bound <= star.exact.to_long_double());

    CHECK_THROWS_AS(prop15_pipeline(complete_graph(5), path_graph(1), 2), InputError);
    CHECK(is_tree(named_graph("T:0,0,1").graph));
    CHECK_FALSE(is_tree(cycle_graph(4)));
    CHECK_FALSE(is_tree(disjoint_cliques(2, 2)));
}
