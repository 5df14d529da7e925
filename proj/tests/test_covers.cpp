#include "cliquesat/constructions.hpp"
#include "cliquesat/counters.hpp"
#include "cliquesat/covers.hpp"
#include "cliquesat/errors.hpp"
#include "cliquesat/named_graph.hpp"
#include "cliquesat/oracle.hpp"
#include "cliquesat/random.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace cliquesat;

namespace {

std::vector<oracle::MaskFamily> as_masks(const std::vector<ValidFamily>& families) {
    std::vector<oracle::MaskFamily> out;
    for (const auto& f : families) {
        out.push_back(f.sets);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool contains_family(const std::vector<ValidFamily>& families, std::vector<SubsetMask> sets) {
    std::sort(sets.begin(), sets.end());
    return std::any_of(families.begin(), families.end(), [&](const ValidFamily& f) { return f.sets == sets; });
}

} // namespace

TEST_CASE("valid families of small patterns") {
    // P_2 is 0-1-2: sets {0,1} = 3, {1,2} = 6, {0,1,2} = 7.
    const auto p2 = enumerate_valid_families(path_graph(2));
    CHECK(p2.size() == 5);
    CHECK(contains_family(p2, {3, 6}));
    CHECK(contains_family(p2, {7}));
    CHECK_FALSE(contains_family(p2, {3}));

    const auto k3 = enumerate_valid_families(complete_graph(3));
    CHECK(contains_family(k3, {7}));
    CHECK(contains_family(k3, edge_family(complete_graph(3)).sets));

    for (const char* spec : {"P2", "K3", "C4", "K2,3", "P3", "S3"}) {
        const Graph f = named_graph(spec).graph;
        const auto families = enumerate_valid_families(f);
        auto brute = oracle::valid_families(f);
        std::sort(brute.begin(), brute.end());
        CHECK(as_masks(families) == brute);
        CHECK(contains_family(families, edge_family(f).sets));
    }
    CHECK_THROWS_AS(enumerate_valid_families(complete_graph(7)), CapabilityError);
    CHECK_THROWS_AS(enumerate_valid_families(complete_bipartite_graph(3, 3)), CapabilityError);
}

TEST_CASE("weight maximizer inside the regime is E(F)") {
    const Graph c4 = cycle_graph(4);
    const auto report = max_weight_family(c4, 50, 10, 100);
    CHECK(report.best == edge_family(c4));
    CHECK(report.maximizers.size() == 1);
    CHECK_FALSE(report.float_tie);
    CHECK(report.log_weight == doctest::Approx(static_cast<double>(4 * std::log(50.0L) + 8 * std::log(0.1L))));

    const Graph p2 = path_graph(2);
    CHECK(max_weight_family(p2, 20, 10, 100).best == edge_family(p2));

    // u m^2 >= n^2 leaves the regime.
    CHECK_THROWS_AS(max_weight_family(complete_graph(3), 200, 10, 100), InputError);
    // K_4 plus a pendant vertex is not 2-balanced.
    const Edge pendant[] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}};
    CHECK_THROWS_AS(max_weight_family(Graph::from_edges(5, pendant), 50, 10, 100), InputError);
}

TEST_CASE("outside the regime a single clique can win") {
    // u (m/n)^{4/3} < 1: one set holding all of C_4 outweighs E(C_4).
    const auto report = max_weight_family_unchecked(cycle_graph(4), 1.5, 10, 100);
    CHECK(report.best.sets == std::vector<SubsetMask>{15});
}

TEST_CASE("Z on hand-checked unions") {
    const Graph c4 = cycle_graph(4);
    const CliqueUnion two(4, 3, {{0, 1, 2}, {0, 1, 3}});
    CHECK(count_subgraph(c4, union_graph(two)) == Count{1});
    const auto z_two = count_Z(c4, two);
    CHECK(z_two.z >= Count{1});
    CHECK(z_two.z == oracle::count_z(c4, two));
    CHECK(z_two.copies == 1);

    const CliqueUnion single(4, 4, {{0, 1, 2, 3}});
    CHECK(count_Z(c4, single).z == Count{3});
    CHECK(oracle::count_z(c4, single) == Count{3});

    CHECK(count_Z(c4, CliqueUnion(4, 3, {})).z == Count{0});
}

TEST_CASE("Z dominates the copy count and matches the oracle") {
    Rng rng(77);
    const char* patterns[] = {"C4", "K2,3", "K3", "P2"};
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 5 + rng.below(6);
        const auto sample = sample_random_clique_graph({n, 3, 1 + 5 * rng.uniform(), rng.next()});
        if (sample.cliques.size() > 12) {
            continue;
        }
        for (const char* spec : patterns) {
            const Graph f = named_graph(spec).graph;
            const Count z = count_Z(f, sample.cliques).z;
            CHECK(count_subgraph(f, union_graph(sample.cliques)) <= z);
            CHECK(z == oracle::count_z(f, sample.cliques));
        }
    }
}

TEST_CASE("adding a clique never lowers Z") {
    Rng rng(5);
    const Graph c4 = cycle_graph(4);
    for (int trial = 0; trial < 40; ++trial) {
        const auto sample = sample_random_clique_graph({8, 3, 4, rng.next()});
        VertexSet extra;
        while (extra.size() < 3) {
            const auto v = static_cast<Vertex>(rng.below(8));
            if (std::find(extra.begin(), extra.end(), v) == extra.end()) {
                extra.push_back(v);
            }
        }
        std::sort(extra.begin(), extra.end());
        const auto& cliques = sample.cliques.cliques();
        if (std::find(cliques.begin(), cliques.end(), extra) != cliques.end()) {
            continue;
        }
        CHECK(count_Z(c4, sample.cliques).z <= count_Z(c4, sample.cliques.with(extra)).z);
    }
}

TEST_CASE("Z guard") {
    std::vector<VertexSet> many;
    for (Vertex i = 0; i < 13; ++i) {
        many.push_back({i, i + 1, i + 2});
    }
    const CliqueUnion big(20, 3, many);
    CHECK_THROWS_AS(count_Z(cycle_graph(4), big), CapabilityError);
    CHECK_NOTHROW(count_Z(cycle_graph(4), big, false));
}
