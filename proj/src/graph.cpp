#include "cliquesat/graph.hpp"

#include "cliquesat/errors.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace cliquesat {

namespace {

void require_vertex(std::size_t n, Vertex v) {
    if (v >= n) {
        throw InputError("vertex " + std::to_string(v) + " out of range for " + std::to_string(n) +
                         " vertices");
    }
}

bool sorted_contains(std::span<const Vertex> list, Vertex v) {
    return std::binary_search(list.begin(), list.end(), v);
}

} // namespace

VertexSet intersect_sorted(std::span<const Vertex> a, std::span<const Vertex> b) {
    VertexSet out;
    out.reserve(std::min(a.size(), b.size()));
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::size_t intersect_size(std::span<const Vertex> a, std::span<const Vertex> b) {
    std::size_t count = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

// --- Graph ------------------------------------------------------------------

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
    GraphBuilder builder(n);
    for (const Edge& e : edges) {
        builder.add_edge(e.u, e.v);
    }
    Graph g = std::move(builder).build();
    if (g.edge_count() != edges.size()) {
        throw InputError("duplicate edge in edge list");
    }
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u >= adj_.size() || v >= adj_.size()) {
        return false;
    }
    if (adj_[u].size() <= adj_[v].size()) {
        return sorted_contains(adj_[u], v);
    }
    return sorted_contains(adj_[v], u);
}

std::size_t Graph::min_degree() const {
    std::size_t best = adj_.empty() ? 0 : adj_[0].size();
    for (const auto& list : adj_) {
        best = std::min(best, list.size());
    }
    return best;
}

std::size_t Graph::max_degree() const {
    std::size_t best = 0;
    for (const auto& list : adj_) {
        best = std::max(best, list.size());
    }
    return best;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < adj_.size(); ++u) {
        for (Vertex v : adj_[u]) {
            if (u < v) {
                out.push_back({u, v});
            }
        }
    }
    return out;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
    std::vector<std::int64_t> position(adj_.size(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        require_vertex(adj_.size(), vertices[i]);
        if (position[vertices[i]] != -1) {
            throw InputError("repeated vertex in induced subgraph request");
        }
        position[vertices[i]] = static_cast<std::int64_t>(i);
    }
    GraphBuilder builder(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (Vertex w : adj_[vertices[i]]) {
            const auto j = position[w];
            if (j > static_cast<std::int64_t>(i)) {
                builder.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
            }
        }
    }
    return std::move(builder).build();
}

bool Graph::validate() const {
    std::size_t degree_sum = 0;
    for (Vertex u = 0; u < adj_.size(); ++u) {
        const auto& list = adj_[u];
        degree_sum += list.size();
        for (std::size_t i = 0; i < list.size(); ++i) {
            if (list[i] >= adj_.size() || list[i] == u) {
                return false;
            }
            if (i > 0 && list[i - 1] >= list[i]) {
                return false;
            }
            if (!sorted_contains(adj_[list[i]], u)) {
                return false;
            }
        }
    }
    return degree_sum == 2 * edge_count_;
}

// --- GraphBuilder -----------------------------------------------------------

void GraphBuilder::add_edge(Vertex u, Vertex v) {
    require_vertex(adj_.size(), u);
    require_vertex(adj_.size(), v);
    if (u == v) {
        throw InputError("self-loop at vertex " + std::to_string(u));
    }
    adj_[u].push_back(v);
    adj_[v].push_back(u);
}

void GraphBuilder::add_clique(std::span<const Vertex> members) {
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            add_edge(members[i], members[j]);
        }
    }
}

Graph GraphBuilder::build() && {
    Graph g;
    std::size_t degree_sum = 0;
    for (auto& list : adj_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        list.shrink_to_fit();
        degree_sum += list.size();
    }
    g.adj_ = std::move(adj_);
    g.edge_count_ = degree_sum / 2;
    return g;
}

// --- BipartiteGraph ---------------------------------------------------------

BipartiteGraph BipartiteGraph::from_edges(std::size_t u_size, std::size_t v_size,
                                          std::span<const std::pair<Vertex, Vertex>> edges) {
    BipartiteGraph b(u_size, v_size);
    for (const auto& [u, v] : edges) {
        if (u >= u_size) {
            throw InputError("U-vertex " + std::to_string(u) + " out of range");
        }
        if (v >= v_size) {
            throw InputError("V-vertex " + std::to_string(v) + " out of range");
        }
        b.adj_u_[u].push_back(v);
        b.adj_v_[v].push_back(u);
    }
    for (auto& list : b.adj_u_) {
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
            throw InputError("duplicate bipartite edge");
        }
    }
    for (auto& list : b.adj_v_) {
        std::sort(list.begin(), list.end());
    }
    b.edge_count_ = edges.size();
    return b;
}

std::size_t BipartiteGraph::max_u_degree() const {
    std::size_t best = 0;
    for (const auto& list : adj_u_) {
        best = std::max(best, list.size());
    }
    return best;
}

bool BipartiteGraph::has_edge(Vertex u, Vertex v) const {
    return u < adj_u_.size() && sorted_contains(adj_u_[u], v);
}

std::vector<std::pair<Vertex, Vertex>> BipartiteGraph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < adj_u_.size(); ++u) {
        for (Vertex v : adj_u_[u]) {
            out.emplace_back(u, v);
        }
    }
    return out;
}

Graph BipartiteGraph::as_graph() const {
    const auto m = static_cast<Vertex>(adj_u_.size());
    GraphBuilder builder(adj_u_.size() + adj_v_.size());
    for (Vertex u = 0; u < m; ++u) {
        for (Vertex v : adj_u_[u]) {
            builder.add_edge(u, m + v);
        }
    }
    return std::move(builder).build();
}

BipartiteGraph BipartiteGraph::restrict_u(std::span<const Vertex> kept) const {
    std::vector<std::pair<Vertex, Vertex>> kept_edges;
    for (std::size_t i = 0; i < kept.size(); ++i) {
        if (kept[i] >= adj_u_.size()) {
            throw InputError("U-vertex " + std::to_string(kept[i]) + " out of range");
        }
        for (Vertex v : adj_u_[kept[i]]) {
            kept_edges.emplace_back(static_cast<Vertex>(i), v);
        }
    }
    return from_edges(kept.size(), adj_v_.size(), kept_edges);
}

bool BipartiteGraph::validate() const {
    std::size_t total = 0;
    for (Vertex u = 0; u < adj_u_.size(); ++u) {
        const auto& list = adj_u_[u];
        total += list.size();
        if (list.size() > adj_v_.size()) {
            return false;
        }
        for (std::size_t i = 0; i < list.size(); ++i) {
            if (list[i] >= adj_v_.size() || (i > 0 && list[i - 1] >= list[i])) {
                return false;
            }
            if (!sorted_contains(adj_v_[list[i]], u)) {
                return false;
            }
        }
    }
    std::size_t total_v = 0;
    for (const auto& list : adj_v_) {
        total_v += list.size();
    }
    return total == edge_count_ && total_v == edge_count_;
}

// --- Hypergraph -------------------------------------------------------------

Hypergraph::Hypergraph(std::size_t n, std::vector<VertexSet> edges)
    : edges_(std::move(edges)), incidence_(n) {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        auto& e = edges_[i];
        if (e.empty()) {
            throw InputError("hypergraph edge " + std::to_string(i) + " is empty");
        }
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        for (Vertex v : e) {
            require_vertex(n, v);
            incidence_[v].push_back(i);
        }
    }
}

// --- CliqueUnion ------------------------------------------------------------

CliqueUnion::CliqueUnion(std::size_t n, std::size_t m, std::vector<VertexSet> cliques)
    : n_(n), m_(m), cliques_(std::move(cliques)) {
    std::set<VertexSet> seen;
    for (auto& c : cliques_) {
        std::sort(c.begin(), c.end());
        if (std::adjacent_find(c.begin(), c.end()) != c.end()) {
            throw InputError("clique with a repeated vertex");
        }
        if (c.size() != m_) {
            throw InputError("clique of size " + std::to_string(c.size()) + ", expected " +
                             std::to_string(m_));
        }
        for (Vertex v : c) {
            require_vertex(n_, v);
        }
        if (!seen.insert(c).second) {
            throw InputError("repeated clique in clique union");
        }
    }
}

CliqueUnion CliqueUnion::without(std::span<const std::size_t> removed) const {
    std::vector<bool> drop(cliques_.size(), false);
    for (std::size_t i : removed) {
        if (i >= cliques_.size()) {
            throw InputError("clique index " + std::to_string(i) + " out of range");
        }
        drop[i] = true;
    }
    std::vector<VertexSet> kept;
    for (std::size_t i = 0; i < cliques_.size(); ++i) {
        if (!drop[i]) {
            kept.push_back(cliques_[i]);
        }
    }
    return CliqueUnion(n_, m_, std::move(kept));
}

CliqueUnion CliqueUnion::with(VertexSet clique) const {
    auto next = cliques_;
    next.push_back(std::move(clique));
    return CliqueUnion(n_, m_, std::move(next));
}

// --- free functions ---------------------------------------------------------

VertexSet common_neighborhood(const Graph& g, std::span<const Vertex> s) {
    if (s.empty()) {
        throw InputError("common neighborhood of an empty set");
    }
    for (Vertex v : s) {
        require_vertex(g.vertex_count(), v);
    }
    // Start from the smallest neighborhood.
    std::size_t first = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (g.degree(s[i]) < g.degree(s[first])) {
            first = i;
        }
    }
    auto first_nbrs = g.neighbors(s[first]);
    VertexSet common(first_nbrs.begin(), first_nbrs.end());
    for (std::size_t i = 0; i < s.size() && !common.empty(); ++i) {
        if (i != first) {
            common = intersect_sorted(common, g.neighbors(s[i]));
        }
    }
    // Only reachable with a repeated member in S; the result excludes S regardless.
    std::erase_if(common, [&](Vertex w) { return std::find(s.begin(), s.end(), w) != s.end(); });
    return common;
}

Graph union_graph(const CliqueUnion& cu) {
    GraphBuilder builder(cu.vertex_count());
    for (const auto& c : cu.cliques()) {
        builder.add_clique(c);
    }
    return std::move(builder).build();
}

} // namespace cliquesat
