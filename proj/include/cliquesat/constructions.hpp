#pragma once

#include "cliquesat/count.hpp"
#include "cliquesat/graph.hpp"
#include "cliquesat/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace cliquesat {

// Binomial-coefficient size up to which every m-subset gets its own coin flip.
inline constexpr std::uint64_t kExhaustiveSubsetLimit = std::uint64_t{1} << 20;

struct RandomCliqueParams {
    std::size_t n = 0;
    std::size_t m = 2;
    double u = 0;
    std::uint64_t seed = 0;
};

struct RandomCliqueSample {
    CliqueUnion cliques;
    double p = 0;            // per-subset inclusion probability after clamping
    bool saturated = false;  // u >= C(n, m), so p was clamped to 1
    bool exhaustive = false; // every subset got its own coin flip
};

// Union of m-cliques where each of the C(n, m) subsets is present independently with
// probability u / C(n, m). Deterministic given the seed; the clique list is sorted.
RandomCliqueSample sample_random_clique_graph(const RandomCliqueParams& params);

// G(n, p) with independent edges.
Graph sample_gnp(std::size_t n, double p, std::uint64_t seed);

// `count` vertex-disjoint copies of K_size on count * size vertices.
Graph disjoint_cliques(std::size_t count, std::size_t size);

// Graph on V joining two vertices when they share a neighbor in U.
Graph clique_graph(const BipartiteGraph& b);

struct PruneParams {
    std::size_t degree_cap = 1;
};

struct PruneResult {
    BipartiteGraph pruned;       // U restricted to vertices of degree <= cap, re-indexed
    VertexSet kept_u;            // original ids of the surviving U-vertices
    std::size_t edges_before = 0;
    std::size_t edges_after = 0;
    bool kept_majority = false;  // edges_after > edges_before / 2
};

PruneResult prune_high_degree(const BipartiteGraph& b, const PruneParams& params);

struct FFreeReport {
    std::size_t m = 0;
    double u = 0;                   // 2 (n/m)^{2 - (v-2)/(e-1)}
    double sampled_u = 0;           // alpha * u
    std::size_t initial_cliques = 0;  // Y
    Count pairs;                      // Z
    std::size_t final_cliques = 0;
    std::vector<std::size_t> removed;  // indices into the sampled clique list
    bool saturated = false;
};

struct FFreeResult {
    CliqueUnion cliques;
    FFreeReport report;
};

// Samples cliques of size m = r at rate alpha * u and deletes one clique from every
// (copy, covering) pair. Gates: F 2-balanced, e(F) >= 2, 2 <= r < v(F). Throws
// InternalError with the copy if the result still contains F.
FFreeResult build_f_free_clique_graph(std::size_t n, std::size_t r, const Graph& f, double alpha,
                                      std::uint64_t seed);

enum class SearchStrategy {
    random_order,     // one pass over all U-V pairs in random order
    degree_balanced,  // rounds over U, each U-vertex proposes one random new neighbor per round
};

SearchStrategy parse_strategy(const std::string& name);
std::string to_string(SearchStrategy strategy);

struct PathSearchResult {
    BipartiteGraph graph;
    std::size_t edge_target = 0;
    std::size_t proposals = 0;
    bool reached_target = false;
};

// Greedy randomized search for a dense bipartite graph on |U| = m, |V| = n in which
// every V-pair has at most ell paths of length 2 or 4. Adds edges only while that
// stays true, so the output always satisfies it; the target may be missed.
PathSearchResult search_path_bounded_bipartite(std::size_t m, std::size_t n, std::size_t ell,
                                               std::size_t edge_target, std::uint64_t seed,
                                               SearchStrategy strategy = SearchStrategy::random_order);

// ell^{2t} d^{2+t} |U|, the cap on N(K_{2,t}, K(B)) for path-bounded B; exact.
Count k2t_clique_graph_cap(std::size_t ell, std::size_t d, std::size_t t, std::size_t u_size);

struct Lemma37Params {
    std::size_t n = 0;
    Rational epsilon{0};
    std::size_t ell = 2;
    std::size_t t = 3;
    std::size_t r = 3;
    double c = 1;
    double d = 4;
    std::uint64_t seed = 0;
    SearchStrategy strategy = SearchStrategy::random_order;
};

struct Lemma37Report {
    std::size_t u_size = 0;          // ceil(n^{3/2 - 2 eps})
    std::size_t edge_target = 0;     // ceil(2 c n^{3/2 - eps})
    std::size_t edges_found = 0;
    std::size_t degree_cap = 0;      // ceil(D ell n^eps)
    std::size_t pruned_u_size = 0;   // |U'|
    std::size_t edges_after_prune = 0;
    bool kept_majority = false;
    std::size_t max_u_degree = 0;    // d over U'
    std::size_t multiplicity = 0;    // realized path multiplicity of B'
    Count cliques;                   // N(K_r, G)
    Count k2t;                       // N(K_{2,t}, G)
    Count k2t_cap;                   // ell^{2t} d^{2+t} |U'|
};

struct Lemma37Result {
    Graph graph;
    BipartiteGraph bipartite;  // B' after pruning
    Lemma37Report report;
};

// Search, prune, then take the clique graph. Gates t > ell >= 2, r >= 3 and
// 0 <= eps <= (r-2)/(2t).
Lemma37Result lemma37_construction(const Lemma37Params& params);

} // namespace cliquesat
