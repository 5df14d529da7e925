#pragma once

// Deliberately naive reference implementations. They share no code with the
// optimized counters beyond the graph types, and are used to cross-check them on
// tiny inputs.

#include "cliquesat/count.hpp"
#include "cliquesat/graph.hpp"

#include <cstddef>
#include <vector>

namespace cliquesat::oracle {

// Number of r-subsets that are pairwise adjacent.
Count count_cliques(const Graph& g, std::size_t r);

// Number of r-cliques that contain every vertex of s.
Count cliques_containing(const Graph& g, const VertexSet& s, std::size_t r);

// Subgraphs of g isomorphic to f: distinct edge sets hit by injective
// adjacency-preserving maps, collected explicitly.
Count count_subgraph(const Graph& f, const Graph& g);

// Distinct copies of f in g, each as a sorted edge list.
std::vector<std::vector<Edge>> subgraph_copies(const Graph& f, const Graph& g);

// Simple paths of exactly `length` edges between two vertices, up to reversal
// when the endpoints are swapped (counted once per vertex sequence from a to b).
std::size_t simple_paths(const Graph& g, Vertex a, Vertex b, std::size_t length);

// Maximum over V-pairs of the number of simple paths of length 2 (and 4 when
// max_len == 4), found by depth-first search on the underlying graph.
std::size_t path_multiplicity(const BipartiteGraph& b, std::size_t max_len);

// Labeled V-U-V-U-V paths on five distinct vertices with both U-vertices of
// degree >= min_udeg, by enumerating all 5-tuples along edges.
Count count_labeled_p4(const BipartiteGraph& b, std::size_t min_udeg);

// Pairs of V-vertices sharing a U-neighbor, as a graph on V.
Graph clique_graph(const BipartiteGraph& b);

// A valid family as a list of vertex bitmasks over V(f), sorted.
using MaskFamily = std::vector<std::uint32_t>;

// All families of vertex subsets of f such that every member spans an edge of f
// and the members jointly cover E(f), by filtering every family of candidate sets.
std::vector<MaskFamily> valid_families(const Graph& f);

// Z(f, cu): pairs (copy of f, family of present cliques) where every clique
// spans an edge of the copy, traces on the copy's vertices are pairwise distinct
// and the cliques cover the copy's edges. Scans all subsets of the clique list.
Count count_z(const Graph& f, const CliqueUnion& cu);

} // namespace cliquesat::oracle
