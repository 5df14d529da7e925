#pragma once

#include "cliquesat/graph.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace cliquesat {

// A canonical small pattern graph plus the structural metadata some counters use.
struct NamedGraph {
    std::string spec;
    Graph graph;
    // Set for "K<s>,<t>": vertices 0..s-1 form one side, s..s+t-1 the other.
    std::optional<std::pair<std::size_t, std::size_t>> bipartition;
    // Set for "K<n>".
    std::optional<std::size_t> clique_order;
};

// Grammar:
//   K<n>            complete graph
//   K<s>,<t>        complete bipartite graph
//   C<n>            cycle (n >= 3)
//   P<n>            path with n edges (n + 1 vertices)
//   S<n>            star K_{1,n}
//   T:<p1>,...,<pk> tree on k+1 vertices; vertex i (1..k) has parent p_i < i
// Throws InputError for anything else.
NamedGraph named_graph(std::string_view spec);

Graph complete_graph(std::size_t n);
Graph complete_bipartite_graph(std::size_t s, std::size_t t);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t edges);
Graph star_graph(std::size_t leaves);
Graph tree_from_parents(std::span<const Vertex> parents);

// Bipartite views used by the path-multiplicity machinery.
BipartiteGraph complete_bipartite(std::size_t u_size, std::size_t v_size);
// Even cycle C_{2k} split as U = {u_0..u_{k-1}}, V = {v_0..v_{k-1}} with
// v_i - u_i - v_{i+1 mod k}.
BipartiteGraph bipartite_cycle(std::size_t half_length);

} // namespace cliquesat
