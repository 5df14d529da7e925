#pragma once

#include "cliquesat/count.hpp"
#include "cliquesat/graph.hpp"
#include "cliquesat/rational.hpp"

#include <cstddef>
#include <vector>

namespace cliquesat {

struct ExtractionResult {
    VertexSet kept_vertices;
    std::size_t min_degree = 0;      // minimum degree of the kept subhypergraph
    long double guarantee = 0;       // 2^{-b} (v'/n)^{1/b} e(H) / v'
    std::size_t kept_edges = 0;
    std::vector<Vertex> removal_order;
};

// Peels vertices whose degree in the current induced subhypergraph falls below
// 2^{-b} (n_cur/n)^{1/b} e(H)/n_cur, smallest id first, re-evaluating after every
// removal. A vertex within a relative 1e-12 of the threshold is peeled too, so every
// kept degree clears it strictly. Requires e(H) >= 1 and b >= 1. Throws InternalError
// if everything is peeled.
ExtractionResult extract_min_degree(const Hypergraph& h, double b);

// Exact check of min_degree >= 2^{-b} (v'/n)^{1/b} e(H)/v' for rational b = p/q,
// via (d v')^{pq} 2^{p^2} n^{q^2} >= v'^{q^2} e(H)^{pq} in big integers.
bool certify_extraction(const Hypergraph& h, const ExtractionResult& result, const Rational& b);

struct GreedyTreeReport {
    Count bound;          // ceil(v(G) (delta - v(T))^{v(T)-1} / v(T)!)
    Count run_floor;      // v(G) (delta - v(T))^{v(T)-1}
    Count runs;           // number of ways the greedy procedure can run
    Count exact;          // N(T, G)
    bool certified = false;  // runs >= run_floor and exact >= bound
};

// Greedy embedding count for a tree T in a graph of minimum degree >= delta.
// Requires T to be a tree, min degree of G >= delta, and delta >= 2 v(T).
GreedyTreeReport greedy_tree_count(const Graph& g, const Graph& tree, std::size_t delta);

struct TreePipelineReport {
    std::size_t hyperedges = 0;        // copies of K_r in G
    Rational b;                        // (v(T)-1)/(v(T)-r)
    ExtractionResult extraction;
    bool extraction_certified = false;
    std::size_t ell = 0;               // realized min K_r-degree in G'
    long double degree_floor = 0;      // ell^{1/(r-1)}
    std::size_t realized_min_degree = 0;  // min degree of G'
    bool headroom = false;             // degree_floor >= 2 v(T)
    long double bound = 0;             // v(G') max(0, floor - v(T))^{v(T)-1} / v(T)!
    Count exact_in_subgraph;           // N(T, G')
    Count exact;                       // N(T, G)
    bool certified = false;            // exact_in_subgraph >= bound
};

// K_r hypergraph of G, peeling with b = (v(T)-1)/(v(T)-r), degree conversion through
// common neighborhoods, and the implied tree count against exact counts.
// Requires 2 <= r < v(T). A graph without K_r yields a zero bound.
TreePipelineReport prop15_pipeline(const Graph& g, const Graph& tree, std::size_t r);

// Hypergraph on V(G) whose hyperedges are the r-cliques of G.
Hypergraph clique_hypergraph(const Graph& g, std::size_t r);

bool is_tree(const Graph& g);

} // namespace cliquesat
