#pragma once

#include "cliquesat/count.hpp"
#include "cliquesat/graph.hpp"
#include "cliquesat/rational.hpp"

#include <cmath>
#include <cstddef>
#include <string>

namespace cliquesat {

// Largest pattern accepted by the exhaustive 2-balancedness scan.
inline constexpr std::size_t kMaxBalanceVertices = 8;

// (e - 1) / (v - 2); requires v >= 3.
Rational two_density(std::size_t vertices, std::size_t edges);

struct BalanceVerdict {
    bool balanced = true;
    Rational density;        // two_density of F itself
    VertexSet witness;       // vertex set of the densest violating subgraph, if any
    Rational witness_density;
};

// Scans every vertex subset with at least 3 vertices; the induced subgraph has the
// most edges among subgraphs on that set, so it is the only one that can violate.
// Requires e(F) >= 1 and v(F) >= 3; throws CapabilityError above kMaxBalanceVertices.
BalanceVerdict check_2_balanced(const Graph& f);
bool is_2_balanced(const Graph& f);

// A magnitude lead^a * n^b, with both exponents exact.
struct ExponentProfile {
    std::string lead = "k";
    Rational lead_exponent;
    Rational n_exponent;
    std::string description;

    // log(multiplier * lead^a * n^b).
    [[nodiscard]] long double log_value(long double lead_value, long double n, long double multiplier = 1) const;
    [[nodiscard]] long double value(long double lead_value, long double n, long double multiplier = 1) const;
    [[nodiscard]] std::string formula() const;
};

// (v - 2) / ((r - 2)(e - 1) + v - 2); requires e >= 2 and 2 <= r < v.
Rational beta_exponent(std::size_t vertices, std::size_t edges, std::size_t r);
Rational beta_exponent(const Graph& f, std::size_t r);

// Whether the random-clique bound improves on the G(n,p) count, in both forms.
bool beta_beats_gnp(std::size_t vertices, std::size_t edges, std::size_t r);     // beta > 1/C(r,2)
bool density_beats_gnp(std::size_t vertices, std::size_t edges, std::size_t r);  // (r+1)/2 > (e-1)/(v-2)

struct Thm11Result {
    ExponentProfile first;   // k^{t/(r-2)} n^{3/2}
    ExponentProfile second;  // k^{2t^2/D} n^{((3t-2)(r-2)+2t)/D}, D = (2t-1)(r-2)+t
    long double log_first = 0;
    long double log_second = 0;
    long double value = 0;   // the smaller branch
    int regime = 1;          // which branch attains the minimum
    Rational crossover_exponent;  // k* = n^{(r-2)/(2t)}
    long double crossover = 0;
};

// K_{2,t} lower bound for graphs with k n^{3/2} copies of K_r. Gates t >= 2,
// 2 < r < 2 + t, k >= 1. Asserts the branches agree at k* to 1e-9 relative.
Thm11Result thm11_lower(long double k, long double n, std::size_t r, std::size_t t);

// n-exponents of the two branches at k = n^{(r-2)/(2t)}, exactly.
std::pair<Rational, Rational> thm11_crossover_exponents(std::size_t r, std::size_t t);

// C(x, s) where x >= r solves C(x, r) = N. Integral x is detected exactly.
long double kruskal_katona_bound(Count cliques, std::size_t r, std::size_t s);

// Generalized binomial x(x-1)...(x-k+1)/k! for real x.
long double real_binomial(long double x, std::size_t k);

// N(K_{s,t}, G) for e(G) = k n^{2-1/s}: k^{st} n^s. Gate 1 <= s <= t.
ExponentProfile eskst_bound(std::size_t s, std::size_t t);

// Expected N(F, G(n,p)) with p tuned to N copies of K_r, in terms of N:
// N^{e/C(r,2)} n^{v - r e / C(r,2)}.
ExponentProfile gnp_baseline(std::size_t vertices, std::size_t edges, std::size_t r);

// Random-clique upper bound (N n^{-r})^{e beta} n^v, in terms of N.
ExponentProfile thm12_bound(const Graph& f, std::size_t r);
// The same with N = k n^{alpha}.
ExponentProfile thm12_normalized(const Graph& f, std::size_t r, Rational alpha);

// Gate r <= (2st - s - t)/(s + t - 2) with 2 <= s <= t; throws InputError naming it.
void require_lemma41_gate(std::size_t r, std::size_t s, std::size_t t);
bool lemma41_gate(std::size_t r, std::size_t s, std::size_t t);

struct Lemma41Value {
    ExponentProfile profile;  // k^{st/C(r,2)} n^s
    long double k = 0;        // u m^r / n^{r - C(r,2)/s}
    long double log_value = 0;
};
Lemma41Value lemma41_bound(long double u, long double m, long double n, std::size_t r, std::size_t s,
                           std::size_t t);

// 2 - (v-2)/(e-1) for 2-balanced F with e >= 2 and 2 <= r < v.
Rational thm14_exponent(const Graph& f, std::size_t r);

// k^{(v(T)-1)/(r-1)} n; gate 2 <= r < v(T).
ExponentProfile prop15_bound(std::size_t tree_vertices, std::size_t r);

// Conjectured right-hand sides with the o(1) term replaced by `epsilon`.
// Names: "k2t" (k^t n^{3/2+eps}), "kst" (k^{st/C(r,2)} n^{s-eps}), "k3t" (k^t n^{3-eps}).
struct ConjectureValue {
    ExponentProfile profile;
    long double epsilon = 0;
    int epsilon_sign = 1;   // +1 when the o(1) term raises the n-exponent, -1 when it lowers it
    bool heuristic = true;  // the o(1) term is a free parameter, never a proven value

    [[nodiscard]] long double log_value(long double k, long double n) const {
        return profile.log_value(k, n) + epsilon_sign * epsilon * std::log(n);
    }
};
ConjectureValue conj_rhs(const std::string& name, std::size_t r, std::size_t s, std::size_t t,
                         long double epsilon = 0);

} // namespace cliquesat
