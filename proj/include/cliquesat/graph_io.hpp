#pragma once

#include "cliquesat/graph.hpp"

#include <filesystem>
#include <iosfwd>

namespace cliquesat {

// Edge-list format: header "n e", then e lines "u v" (u < v), newline-terminated.
// Writers emit edges in lexicographic order. Readers throw ParseError with the
// 1-based line number on malformed headers, out-of-range vertices, self-loops,
// duplicate edges or a wrong number of edge lines.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

// Bipartite format: header "m n e" (|U| |V| e), then e lines "u v" joining U-index u
// to V-index v.
BipartiteGraph read_bipartite(std::istream& in);
void write_bipartite(std::ostream& out, const BipartiteGraph& b);

// Clique-list format: header "n m k", then k lines of m vertex ids each.
CliqueUnion read_clique_union(std::istream& in);
void write_clique_union(std::ostream& out, const CliqueUnion& cu);

Graph load_graph(const std::filesystem::path& path);
void save_graph(const std::filesystem::path& path, const Graph& g);
BipartiteGraph load_bipartite(const std::filesystem::path& path);
void save_bipartite(const std::filesystem::path& path, const BipartiteGraph& b);
CliqueUnion load_clique_union(const std::filesystem::path& path);
void save_clique_union(const std::filesystem::path& path, const CliqueUnion& cu);

} // namespace cliquesat
