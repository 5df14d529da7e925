#pragma once

#include "cliquesat/count.hpp"
#include "cliquesat/graph.hpp"
#include "cliquesat/named_graph.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace cliquesat {

// Largest pattern accepted by the generic subgraph counter.
inline constexpr std::size_t kMaxPatternVertices = 10;

// Vertices ordered by repeatedly removing a minimum-degree vertex.
std::vector<Vertex> degeneracy_order(const Graph& g);

// Number of r-vertex complete subgraphs (r >= 1). Cliques are enumerated once each
// by orienting edges along the degeneracy order.
Count count_cliques(const Graph& g, std::size_t r);

// Visits every r-clique once, members in ascending id order.
void for_each_clique(const Graph& g, std::size_t r,
                     const std::function<void(std::span<const Vertex>)>& visit);
std::vector<VertexSet> list_cliques(const Graph& g, std::size_t r);

// Number of injective maps V(pattern) -> V(host) sending edges to edges.
Count count_embeddings(const Graph& pattern, const Graph& host);

// Visits every labeled embedding; image[i] is the host vertex assigned to pattern vertex i.
void for_each_embedding(const Graph& pattern, const Graph& host,
                        const std::function<void(std::span<const Vertex>)>& visit);

// Automorphisms by filtering all permutations of V(pattern). Each entry maps
// pattern vertex i to perm[i]. Requires v(pattern) <= kMaxPatternVertices.
std::vector<std::vector<Vertex>> automorphisms(const Graph& pattern);
Count automorphism_count(const Graph& pattern);

// N(F, G): number of (not necessarily induced) subgraphs of `host` isomorphic to
// `pattern`, i.e. labeled embeddings divided by |Aut(pattern)|.
// Throws CapabilityError if v(pattern) > kMaxPatternVertices.
Count count_subgraph(const Graph& pattern, const Graph& host);

// N(K_{s,t}, G) for 1 <= s <= t: sum over s-sets S of C(|N(S)|, t), halved when s == t.
Count count_complete_bipartite(const Graph& g, std::size_t s, std::size_t t);

// Number of K_r containing the edge e (r >= 3); throws InputError if e is not an edge.
Count edge_clique_degree(const Graph& g, Edge e, std::size_t r);

// Incrementally maintained counts of short paths between V-vertices of a bipartite
// graph. Paths are simple; a path of length 2 is v-u-v', of length 4 v-u-w-u'-v'.
class PathCounter {
public:
    explicit PathCounter(const BipartiteGraph& b);
    PathCounter(std::size_t u_size, std::size_t v_size);

    // Number of distinct paths of length 2 (and 4 when max_len == 4) between v1 != v2.
    [[nodiscard]] std::size_t paths(Vertex v1, Vertex v2, std::size_t max_len = 4) const;
    // Maximum of paths() over unordered pairs of distinct V-vertices.
    [[nodiscard]] std::size_t max_multiplicity(std::size_t max_len = 4) const;

    [[nodiscard]] bool has_edge(Vertex u, Vertex v) const;
    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);

    // Adds (u, v) if afterwards every V-pair has at most `limit` paths of length <= 4;
    // otherwise leaves the graph unchanged. Only pairs whose counts can change are
    // re-examined.
    bool try_add_edge(Vertex u, Vertex v, std::size_t limit);

    [[nodiscard]] std::size_t u_size() const noexcept { return u_adj_.size(); }
    [[nodiscard]] std::size_t v_size() const noexcept { return v_adj_.size(); }
    [[nodiscard]] std::size_t edge_count() const noexcept { return edges_; }
    [[nodiscard]] std::size_t u_degree(Vertex u) const { return u_adj_[u].size(); }

    [[nodiscard]] BipartiteGraph graph() const;

private:
    std::size_t codegree(Vertex a, Vertex b) const { return codegree_[a * v_adj_.size() + b]; }

    std::vector<VertexSet> u_adj_;
    std::vector<VertexSet> v_adj_;
    std::vector<std::uint32_t> codegree_;  // |V| x |V| common U-neighbor counts
    std::size_t edges_ = 0;
};

// Maximum over unordered pairs {v, v'} of V of the number of simple paths of length
// 2 (max_len = 2) or of lengths 2 and 4 (max_len = 4) between them.
std::size_t path_multiplicity(const BipartiteGraph& b, std::size_t max_len = 4);

// Labeled copies v0-u1-v1-u2-v2 of P_4 with five distinct vertices, endpoints in V,
// and both U-vertices of degree >= min_udeg.
Count count_labeled_p4(const BipartiteGraph& b, std::size_t min_udeg);

struct CountReport {
    std::string pattern;
    Count count;
    double elapsed_seconds = 0.0;
    std::string method;
};

// Dispatches to the clique / complete-bipartite counters when the pattern allows,
// and to the generic counter otherwise.
CountReport count_pattern(const NamedGraph& pattern, const Graph& host);

} // namespace cliquesat
