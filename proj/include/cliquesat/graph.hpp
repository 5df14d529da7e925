#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace cliquesat {

using Vertex = std::uint32_t;
// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
// Immutable once built; use GraphBuilder to construct.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : adj_(n) {}

    // Builds from an edge list; rejects self-loops, out-of-range ids and duplicate edges.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);

    [[nodiscard]] std::size_t vertex_count() const noexcept { return adj_.size(); }
    [[nodiscard]] std::size_t edge_count() const noexcept { return edge_count_; }

    [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
    [[nodiscard]] std::size_t degree(Vertex v) const { return adj_[v].size(); }
    [[nodiscard]] bool has_edge(Vertex u, Vertex v) const;
    [[nodiscard]] std::size_t min_degree() const;
    [[nodiscard]] std::size_t max_degree() const;

    // All edges (u < v) in lexicographic order.
    [[nodiscard]] std::vector<Edge> edges() const;

    // Subgraph induced on `vertices`; vertex vertices[i] becomes i.
    [[nodiscard]] Graph induced(std::span<const Vertex> vertices) const;

    // Checks symmetry, absence of loops/multi-edges and the cached edge count.
    [[nodiscard]] bool validate() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend class GraphBuilder;

    std::vector<std::vector<Vertex>> adj_;
    std::size_t edge_count_ = 0;
};

// Accumulates edges; duplicates are merged at build time.
class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t n) : adj_(n) {}

    // Throws InputError on self-loops or out-of-range endpoints.
    void add_edge(Vertex u, Vertex v);
    void add_clique(std::span<const Vertex> members);

    [[nodiscard]] std::size_t vertex_count() const noexcept { return adj_.size(); }

    Graph build() &&;

private:
    std::vector<std::vector<Vertex>> adj_;
};

// Bipartite graph with ordered bipartition (U, V). U-vertices are 0..u_size-1 and
// V-vertices 0..v_size-1, each side indexed separately.
class BipartiteGraph {
public:
    BipartiteGraph() = default;
    BipartiteGraph(std::size_t u_size, std::size_t v_size) : adj_u_(u_size), adj_v_(v_size) {}

    // Edges are (u, v) pairs; duplicates and out-of-range ids are rejected.
    static BipartiteGraph from_edges(std::size_t u_size, std::size_t v_size,
                                     std::span<const std::pair<Vertex, Vertex>> edges);

    [[nodiscard]] std::size_t u_size() const noexcept { return adj_u_.size(); }
    [[nodiscard]] std::size_t v_size() const noexcept { return adj_v_.size(); }
    [[nodiscard]] std::size_t edge_count() const noexcept { return edge_count_; }

    [[nodiscard]] std::span<const Vertex> u_neighbors(Vertex u) const { return adj_u_[u]; }
    [[nodiscard]] std::span<const Vertex> v_neighbors(Vertex v) const { return adj_v_[v]; }
    [[nodiscard]] std::size_t u_degree(Vertex u) const { return adj_u_[u].size(); }
    [[nodiscard]] std::size_t v_degree(Vertex v) const { return adj_v_[v].size(); }
    [[nodiscard]] std::size_t max_u_degree() const;
    [[nodiscard]] bool has_edge(Vertex u, Vertex v) const;

    // Lexicographic (u, v) order.
    [[nodiscard]] std::vector<std::pair<Vertex, Vertex>> edges() const;

    // Same graph as an ordinary Graph: U keeps ids 0..m-1, V is shifted to m..m+n-1.
    [[nodiscard]] Graph as_graph() const;

    // Keeps only the listed U-vertices (re-indexed in the given order) and all of V.
    [[nodiscard]] BipartiteGraph restrict_u(std::span<const Vertex> kept) const;

    [[nodiscard]] bool validate() const;

    friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

private:
    std::vector<std::vector<Vertex>> adj_u_;
    std::vector<std::vector<Vertex>> adj_v_;
    std::size_t edge_count_ = 0;
};

// Hypergraph with non-empty hyperedges; repeated hyperedges are allowed.
class Hypergraph {
public:
    Hypergraph() = default;
    // Each hyperedge is sorted and deduplicated internally. Throws InputError on an
    // empty hyperedge or a vertex id >= n.
    Hypergraph(std::size_t n, std::vector<VertexSet> edges);

    [[nodiscard]] std::size_t vertex_count() const noexcept { return incidence_.size(); }
    [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
    [[nodiscard]] const std::vector<VertexSet>& edges() const noexcept { return edges_; }
    [[nodiscard]] const VertexSet& edge(std::size_t i) const { return edges_[i]; }
    [[nodiscard]] std::size_t degree(Vertex v) const { return incidence_[v].size(); }
    // Indices of hyperedges containing v, ascending.
    [[nodiscard]] std::span<const std::size_t> incident(Vertex v) const { return incidence_[v]; }

private:
    std::vector<VertexSet> edges_;
    std::vector<std::vector<std::size_t>> incidence_;
};

// Base vertex count n plus an ordered list of distinct m-subsets (the cliques
// whose pairs are unioned into a graph).
class CliqueUnion {
public:
    CliqueUnion() = default;
    // Throws InputError if a clique has the wrong size, a repeated or out-of-range
    // vertex, or if two cliques coincide. Members are stored sorted.
    CliqueUnion(std::size_t n, std::size_t m, std::vector<VertexSet> cliques);

    [[nodiscard]] std::size_t vertex_count() const noexcept { return n_; }
    [[nodiscard]] std::size_t clique_size() const noexcept { return m_; }
    [[nodiscard]] std::size_t size() const noexcept { return cliques_.size(); }
    [[nodiscard]] bool empty() const noexcept { return cliques_.empty(); }
    [[nodiscard]] const std::vector<VertexSet>& cliques() const noexcept { return cliques_; }
    [[nodiscard]] const VertexSet& clique(std::size_t i) const { return cliques_[i]; }

    // Copy without the cliques at the given indices.
    [[nodiscard]] CliqueUnion without(std::span<const std::size_t> removed) const;
    // Copy with one more clique appended.
    [[nodiscard]] CliqueUnion with(VertexSet clique) const;

    friend bool operator==(const CliqueUnion&, const CliqueUnion&) = default;

private:
    std::size_t n_ = 0;
    std::size_t m_ = 0;
    std::vector<VertexSet> cliques_;
};

// Vertices outside S adjacent to every member of S. S must be non-empty.
VertexSet common_neighborhood(const Graph& g, std::span<const Vertex> s);

// Graph on n vertices whose edge set is the union of all pairs inside each clique.
Graph union_graph(const CliqueUnion& cu);

// Intersection of two sorted ranges.
VertexSet intersect_sorted(std::span<const Vertex> a, std::span<const Vertex> b);
std::size_t intersect_size(std::span<const Vertex> a, std::span<const Vertex> b);

} // namespace cliquesat
