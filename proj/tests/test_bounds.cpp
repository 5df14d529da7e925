#include "cliquesat/bounds.hpp"
#include "cliquesat/counters.hpp"
#include "cliquesat/errors.hpp"
#include "cliquesat/named_graph.hpp"

#include <doctest.h>

#include <cmath>

using namespace cliquesat;

namespace {

Rational q(std::int64_t a, std::int64_t b = 1) {
    return Rational(a, b);
}

Graph k4_with_pendant() {
    const Edge edges[] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}};
    return Graph::from_edges(5, edges);
}

} // namespace

TEST_CASE("2-balanced patterns") {
    for (std::size_t t = 2; t <= 4; ++t) {
        CHECK(is_2_balanced(complete_bipartite_graph(2, t)));
    }
    CHECK(is_2_balanced(cycle_graph(4)));
    CHECK(is_2_balanced(complete_graph(5)));

    const auto verdict = check_2_balanced(k4_with_pendant());
    CHECK_FALSE(verdict.balanced);
    CHECK(verdict.witness == VertexSet{0, 1, 2, 3});
    CHECK(verdict.witness_density == q(5, 2));
    CHECK(verdict.density == q(2));

    CHECK_THROWS_AS(check_2_balanced(cycle_graph(9)), CapabilityError);
    CHECK(two_density(4, 4) == q(3, 2));
}

TEST_CASE("beta exponent") {
    for (std::int64_t t = 2; t <= 6; ++t) {
        const auto tt = static_cast<std::size_t>(t);
        CHECK(beta_exponent(complete_bipartite_graph(2, tt), 3) == q(t, 3 * t - 1));
    }
    CHECK(beta_exponent(cycle_graph(4), 3) == q(2, 5));
    CHECK(beta_exponent(cycle_graph(5), 2) == q(1));
    CHECK_THROWS_AS(beta_exponent(4, 1, 3), InputError);
    CHECK_THROWS_AS(beta_exponent(4, 4, 4), InputError);
}

TEST_CASE("random-clique bound at r = 3 for K_{2,t}") {
    for (std::int64_t t = 2; t <= 6; ++t) {
        const auto profile = thm12_normalized(complete_bipartite_graph(2, static_cast<std::size_t>(t)), 3, q(3, 2));
        CHECK(profile.lead_exponent == q(2 * t * t, 3 * t - 1));
        CHECK(profile.n_exponent == q(5 * t - 2, 3 * t - 1));
    }
}

TEST_CASE("r = 2 collapses to the G(n,p) count") {
    const Graph c5 = cycle_graph(5);
    const auto clique_bound = thm12_bound(c5, 2);
    const auto gnp = gnp_baseline(5, 5, 2);
    CHECK(clique_bound.lead_exponent == gnp.lead_exponent);
    CHECK(clique_bound.n_exponent == gnp.n_exponent);
    CHECK(gnp.lead_exponent == q(5));
    CHECK(gnp.n_exponent == q(-5));
}

TEST_CASE("comparison predicate agrees with its density form") {
    std::size_t checked = 0;
    for (std::size_t v = 3; v <= 7; ++v) {
        for (std::size_t e = 2; e <= v * (v - 1) / 2; ++e) {
            for (std::size_t r = 3; r < v; ++r) {
                CHECK(beta_beats_gnp(v, e, r) == density_beats_gnp(v, e, r));
                ++checked;
            }
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("K_{2,t} lower bound branches") {
    const auto r3 = thm11_lower(2, 1000, 3, 4);
    CHECK(r3.first.lead_exponent == q(4));
    CHECK(r3.first.n_exponent == q(3, 2));
    CHECK(r3.second.lead_exponent == q(32, 11));
    CHECK(r3.second.n_exponent == q(18, 11));
    CHECK(r3.value == doctest::Approx(std::exp(static_cast<double>(std::min(r3.log_first, r3.log_second)))));

    const auto at_one = thm11_lower(1, 1e6, 4, 3);
    CHECK(at_one.log_first == doctest::Approx(1.5 * std::log(1e6)));
    CHECK(at_one.regime == 1);

    for (std::size_t t = 2; t <= 8; ++t) {
        for (std::size_t r = 3; r < 2 + t; ++r) {
            const auto [a, b] = thm11_crossover_exponents(r, t);
            CHECK(a == b);
            const auto res = thm11_lower(1, 1e8, r, t);
            CHECK(res.crossover_exponent == q(static_cast<std::int64_t>(r) - 2, 2 * static_cast<std::int64_t>(t)));
            // Past the crossover the second branch is the smaller one.
            CHECK(thm11_lower(res.crossover * 4, 1e8, r, t).regime == 2);
        }
    }
    CHECK_THROWS_AS(thm11_lower(1, 100, 5, 3), InputError);
    CHECK_THROWS_AS(thm11_lower(0.5, 100, 3, 3), InputError);
}

TEST_CASE("Kruskal-Katona bound") {
    CHECK(kruskal_katona_bound(Count{20}, 3, 2) == doctest::Approx(15.0));
    CHECK(kruskal_katona_bound(Count{1}, 4, 2) == doctest::Approx(6.0));
    CHECK(kruskal_katona_bound(binomial(10, 4), 4, 3) == doctest::Approx(120.0));
    for (std::size_t m = 4; m <= 20; ++m) {
        for (std::size_t r = 2; r <= 4; ++r) {
            for (std::size_t s = 1; s <= r; ++s) {
                CHECK(kruskal_katona_bound(binomial(m, r), r, s) == binomial(m, s).to_long_double());
            }
        }
        CHECK(kruskal_katona_bound(count_cliques(complete_graph(m), 3), 3, 2) ==
              count_cliques(complete_graph(m), 2).to_long_double());
    }
    // Between integers the bound is monotone.
    CHECK(kruskal_katona_bound(Count{21}, 3, 2) > 15.0L);
    CHECK(kruskal_katona_bound(Count{21}, 3, 2) < 21.0L);
    CHECK(real_binomial(5.5L, 2) == doctest::Approx(5.5 * 4.5 / 2));
}

TEST_CASE("closed-form evaluators") {
    const auto eskst = eskst_bound(2, 3);
    CHECK(eskst.lead_exponent == q(6));
    CHECK(eskst.n_exponent == q(2));

    CHECK(lemma41_gate(3, 3, 3));
    CHECK_FALSE(lemma41_gate(4, 3, 3));
    CHECK_THROWS_AS(require_lemma41_gate(4, 3, 3), InputError);
    const auto l41 = lemma41_bound(10, 6, 24, 3, 3, 3);
    CHECK(l41.profile.lead_exponent == q(3));
    CHECK(l41.profile.n_exponent == q(3));
    // k = u m^3 / n^{3 - 3/3} = 2160 / 576.
    CHECK(l41.k == doctest::Approx(3.75));

    CHECK(thm14_exponent(cycle_graph(4), 3) == q(4, 3));
    CHECK_THROWS_AS(thm14_exponent(k4_with_pendant(), 3), InputError);

    const auto trees = prop15_bound(4, 3);
    CHECK(trees.lead_exponent == q(3, 2));
    CHECK(trees.n_exponent == q(1));
    CHECK_THROWS_AS(prop15_bound(3, 3), InputError);

    const auto k2t = conj_rhs("k2t", 3, 2, 3, 0.1L);
    CHECK(k2t.profile.lead_exponent == q(3));
    CHECK(k2t.profile.n_exponent == q(3, 2));
    CHECK(k2t.epsilon_sign == 1);
    CHECK(k2t.heuristic);
    CHECK(k2t.log_value(1, 100) == doctest::Approx(1.6 * std::log(100.0)));
    const auto kst = conj_rhs("kst", 3, 3, 4);
    CHECK(kst.profile.lead_exponent == q(4));
    CHECK(kst.profile.n_exponent == q(3));
    CHECK_THROWS_AS(conj_rhs("kst", 4, 2, 3), InputError);
    CHECK(kst.epsilon_sign == -1);
    CHECK(conj_rhs("k3t", 3, 3, 3).profile.n_exponent == q(3));
    CHECK_THROWS_AS(conj_rhs("nope", 3, 2, 3), InputError);

    CHECK(eskst.formula() == "k^(6) n^(2)");
}
