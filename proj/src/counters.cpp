#include "cliquesat/counters.hpp"

#include "cliquesat/errors.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>

namespace cliquesat {

// --- cliques ----------------------------------------------------------------

std::vector<Vertex> degeneracy_order(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> degree(n);
    std::set<std::pair<std::size_t, Vertex>> queue;
    for (Vertex v = 0; v < n; ++v) {
        degree[v] = g.degree(v);
        queue.emplace(degree[v], v);
    }
    std::vector<bool> removed(n, false);
    std::vector<Vertex> order;
    order.reserve(n);
    while (!queue.empty()) {
        const auto [d, v] = *queue.begin();
        queue.erase(queue.begin());
        removed[v] = true;
        order.push_back(v);
        for (Vertex w : g.neighbors(v)) {
            if (!removed[w]) {
                queue.erase({degree[w], w});
                --degree[w];
                queue.emplace(degree[w], w);
            }
        }
    }
    return order;
}

namespace {

// Forward adjacency along the degeneracy order, each list sorted by vertex id.
std::vector<VertexSet> forward_adjacency(const Graph& g) {
    const auto order = degeneracy_order(g);
    std::vector<std::size_t> rank(g.vertex_count());
    for (std::size_t i = 0; i < order.size(); ++i) {
        rank[order[i]] = i;
    }
    std::vector<VertexSet> out(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        for (Vertex w : g.neighbors(v)) {
            if (rank[w] > rank[v]) {
                out[v].push_back(w);
            }
        }
    }
    return out;
}

Count count_in_candidates(const std::vector<VertexSet>& forward, std::span<const Vertex> candidates,
                          std::size_t remaining) {
    if (remaining == 1) {
        return Count{candidates.size()};
    }
    Count total{0};
    for (Vertex w : candidates) {
        const auto next = intersect_sorted(candidates, forward[w]);
        if (next.size() + 1 >= remaining) {
            total += count_in_candidates(forward, next, remaining - 1);
        }
    }
    return total;
}

void visit_in_candidates(const std::vector<VertexSet>& forward, std::span<const Vertex> candidates,
                         std::size_t remaining, std::vector<Vertex>& stack,
                         const std::function<void(std::span<const Vertex>)>& visit) {
    for (Vertex w : candidates) {
        stack.push_back(w);
        if (remaining == 1) {
            VertexSet sorted = stack;
            std::sort(sorted.begin(), sorted.end());
            visit(sorted);
        } else {
            const auto next = intersect_sorted(candidates, forward[w]);
            if (next.size() + 1 >= remaining) {
                visit_in_candidates(forward, next, remaining - 1, stack, visit);
            }
        }
        stack.pop_back();
    }
}

} // namespace

Count count_cliques(const Graph& g, std::size_t r) {
    if (r == 0) {
        throw InputError("clique order must be at least 1");
    }
    if (r == 1) {
        return Count{g.vertex_count()};
    }
    if (r == 2) {
        return Count{g.edge_count()};
    }
    const auto forward = forward_adjacency(g);
    Count total{0};
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (forward[v].size() + 1 >= r) {
            total += count_in_candidates(forward, forward[v], r - 1);
        }
    }
    return total;
}

void for_each_clique(const Graph& g, std::size_t r,
                     const std::function<void(std::span<const Vertex>)>& visit) {
    if (r == 0) {
        throw InputError("clique order must be at least 1");
    }
    std::vector<Vertex> stack;
    if (r == 1) {
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            stack.assign(1, v);
            visit(stack);
        }
        return;
    }
    const auto forward = forward_adjacency(g);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (forward[v].size() + 1 >= r) {
            stack.assign(1, v);
            visit_in_candidates(forward, forward[v], r - 1, stack, visit);
        }
    }
}

std::vector<VertexSet> list_cliques(const Graph& g, std::size_t r) {
    std::vector<VertexSet> out;
    for_each_clique(g, r, [&](std::span<const Vertex> c) { out.emplace_back(c.begin(), c.end()); });
    std::sort(out.begin(), out.end());
    return out;
}

// --- generic embeddings -----------------------------------------------------

namespace {

struct SearchPlan {
    std::vector<Vertex> order;                    // pattern vertex placed at each position
    std::vector<std::vector<std::size_t>> back;   // earlier positions adjacent to position i
};

SearchPlan make_plan(const Graph& pattern) {
    const std::size_t k = pattern.vertex_count();
    SearchPlan plan;
    std::vector<bool> placed(k, false);
    std::vector<std::size_t> placed_neighbors(k, 0);
    for (std::size_t step = 0; step < k; ++step) {
        Vertex best = 0;
        bool found = false;
        for (Vertex v = 0; v < k; ++v) {
            if (placed[v]) {
                continue;
            }
            if (!found || placed_neighbors[v] > placed_neighbors[best] ||
                (placed_neighbors[v] == placed_neighbors[best] && pattern.degree(v) > pattern.degree(best))) {
                best = v;
                found = true;
            }
        }
        placed[best] = true;
        plan.order.push_back(best);
        for (Vertex w : pattern.neighbors(best)) {
            ++placed_neighbors[w];
        }
    }
    std::vector<std::size_t> position(k);
    for (std::size_t i = 0; i < k; ++i) {
        position[plan.order[i]] = i;
    }
    plan.back.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (Vertex w : pattern.neighbors(plan.order[i])) {
            if (position[w] < i) {
                plan.back[i].push_back(position[w]);
            }
        }
    }
    return plan;
}

class EmbeddingSearch {
public:
    EmbeddingSearch(const Graph& pattern, const Graph& host)
        : host_(host), plan_(make_plan(pattern)), image_(pattern.vertex_count()),
          by_pattern_(pattern.vertex_count()), used_(host.vertex_count(), false) {}

    Count count() {
        if (plan_.order.empty()) {
            return Count{1};
        }
        if (plan_.order.size() > host_.vertex_count()) {
            return Count{0};
        }
        return count_from(0);
    }

    void visit_all(const std::function<void(std::span<const Vertex>)>& visit) {
        if (plan_.order.size() > host_.vertex_count()) {
            return;
        }
        if (plan_.order.empty()) {
            visit(by_pattern_);
            return;
        }
        visit_from(0, visit);
    }

private:
    template <typename F>
    void for_candidates(std::size_t pos, F&& f) {
        const auto& back = plan_.back[pos];
        if (back.empty()) {
            for (Vertex c = 0; c < host_.vertex_count(); ++c) {
                if (!used_[c]) {
                    f(c);
                }
            }
            return;
        }
        std::size_t anchor = back[0];
        for (std::size_t b : back) {
            if (host_.degree(image_[b]) < host_.degree(image_[anchor])) {
                anchor = b;
            }
        }
        for (Vertex c : host_.neighbors(image_[anchor])) {
            if (used_[c]) {
                continue;
            }
            bool ok = true;
            for (std::size_t b : back) {
                if (b != anchor && !host_.has_edge(image_[b], c)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                f(c);
            }
        }
    }

    Count count_from(std::size_t pos) {
        if (pos + 1 == plan_.order.size()) {
            std::uint64_t leaves = 0;
            for_candidates(pos, [&](Vertex) { ++leaves; });
            return Count{leaves};
        }
        Count total{0};
        for_candidates(pos, [&](Vertex c) {
            image_[pos] = c;
            used_[c] = true;
            total += count_from(pos + 1);
            used_[c] = false;
        });
        return total;
    }

    void visit_from(std::size_t pos, const std::function<void(std::span<const Vertex>)>& visit) {
        for_candidates(pos, [&](Vertex c) {
            image_[pos] = c;
            by_pattern_[plan_.order[pos]] = c;
            used_[c] = true;
            if (pos + 1 == plan_.order.size()) {
                visit(by_pattern_);
            } else {
                visit_from(pos + 1, visit);
            }
            used_[c] = false;
        });
    }

    const Graph& host_;
    SearchPlan plan_;
    std::vector<Vertex> image_;       // host vertex at each search position
    std::vector<Vertex> by_pattern_;  // host vertex for each pattern vertex
    std::vector<bool> used_;
};

void require_pattern_size(const Graph& pattern) {
    if (pattern.vertex_count() > kMaxPatternVertices) {
        throw CapabilityError("pattern has " + std::to_string(pattern.vertex_count()) +
                              " vertices; the generic counter supports at most " +
                              std::to_string(kMaxPatternVertices));
    }
}

} // namespace

Count count_embeddings(const Graph& pattern, const Graph& host) {
    return EmbeddingSearch(pattern, host).count();
}

void for_each_embedding(const Graph& pattern, const Graph& host,
                        const std::function<void(std::span<const Vertex>)>& visit) {
    EmbeddingSearch(pattern, host).visit_all(visit);
}

std::vector<std::vector<Vertex>> automorphisms(const Graph& pattern) {
    require_pattern_size(pattern);
    const std::size_t k = pattern.vertex_count();
    const auto edges = pattern.edges();
    std::vector<Vertex> perm(k);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::vector<std::vector<Vertex>> out;
    do {
        const bool preserves = std::all_of(edges.begin(), edges.end(), [&](const Edge& e) {
            return pattern.has_edge(perm[e.u], perm[e.v]);
        });
        if (preserves) {
            out.push_back(perm);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

Count automorphism_count(const Graph& pattern) {
    return Count{automorphisms(pattern).size()};
}

Count count_subgraph(const Graph& pattern, const Graph& host) {
    require_pattern_size(pattern);
    const Count labeled = count_embeddings(pattern, host);
    return labeled.divide_exact(automorphism_count(pattern));
}

// --- complete bipartite -----------------------------------------------------

namespace {

Count sum_bipartite(const Graph& g, std::size_t s, std::size_t t, Vertex start,
                    std::span<const Vertex> common) {
    // `common` is the co-neighborhood of the current partial S.
    if (s == 0) {
        return binomial(common.size(), t);
    }
    Count total{0};
    for (Vertex v = start; v < g.vertex_count(); ++v) {
        const auto next = intersect_sorted(common, g.neighbors(v));
        if (next.size() >= t) {
            total += sum_bipartite(g, s - 1, t, v + 1, next);
        }
    }
    return total;
}

} // namespace

Count count_complete_bipartite(const Graph& g, std::size_t s, std::size_t t) {
    if (s < 1 || s > t) {
        throw InputError("complete bipartite count needs 1 <= s <= t");
    }
    Count total{0};
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const auto nbrs = g.neighbors(v);
        if (nbrs.size() >= t) {
            total += sum_bipartite(g, s - 1, t, v + 1, nbrs);
        }
    }
    return s == t ? total.divide_exact(Count{2}) : total;
}

Count edge_clique_degree(const Graph& g, Edge e, std::size_t r) {
    if (r < 3) {
        throw InputError("edge clique degree needs r >= 3");
    }
    if (!g.has_edge(e.u, e.v)) {
        throw InputError("(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ") is not an edge");
    }
    const Vertex ends[] = {e.u, e.v};
    const auto common = common_neighborhood(g, ends);
    return count_cliques(g.induced(common), r - 2);
}

// --- paths in bipartite graphs ----------------------------------------------

PathCounter::PathCounter(std::size_t u_size, std::size_t v_size)
    : u_adj_(u_size), v_adj_(v_size), codegree_(v_size * v_size, 0) {}

PathCounter::PathCounter(const BipartiteGraph& b) : PathCounter(b.u_size(), b.v_size()) {
    for (const auto& [u, v] : b.edges()) {
        add_edge(u, v);
    }
}

bool PathCounter::has_edge(Vertex u, Vertex v) const {
    return std::binary_search(u_adj_[u].begin(), u_adj_[u].end(), v);
}

void PathCounter::add_edge(Vertex u, Vertex v) {
    if (u >= u_adj_.size() || v >= v_adj_.size()) {
        throw InputError("bipartite edge endpoint out of range");
    }
    if (has_edge(u, v)) {
        return;
    }
    const std::size_t n = v_adj_.size();
    for (Vertex w : u_adj_[u]) {
        ++codegree_[v * n + w];
        ++codegree_[w * n + v];
    }
    u_adj_[u].insert(std::lower_bound(u_adj_[u].begin(), u_adj_[u].end(), v), v);
    v_adj_[v].insert(std::lower_bound(v_adj_[v].begin(), v_adj_[v].end(), u), u);
    ++edges_;
}

void PathCounter::remove_edge(Vertex u, Vertex v) {
    if (!has_edge(u, v)) {
        return;
    }
    auto& ul = u_adj_[u];
    ul.erase(std::lower_bound(ul.begin(), ul.end(), v));
    auto& vl = v_adj_[v];
    vl.erase(std::lower_bound(vl.begin(), vl.end(), u));
    const std::size_t n = v_adj_.size();
    for (Vertex w : ul) {
        --codegree_[v * n + w];
        --codegree_[w * n + v];
    }
    --edges_;
}

std::size_t PathCounter::paths(Vertex v1, Vertex v2, std::size_t max_len) const {
    if (max_len != 2 && max_len != 4) {
        throw InputError("path length bound must be 2 or 4");
    }
    if (v1 == v2) {
        throw InputError("path counts need two distinct V-vertices");
    }
    const std::size_t length_two = codegree(v1, v2);
    if (max_len == 2) {
        return length_two;
    }
    // v1-u-w-u'-v2: pairs (u, u') through a middle w, minus the u == u' cases.
    std::size_t through_middle = 0;
    for (Vertex w = 0; w < v_adj_.size(); ++w) {
        if (w != v1 && w != v2) {
            through_middle += static_cast<std::size_t>(codegree(v1, w)) * codegree(w, v2);
        }
    }
    std::size_t degenerate = 0;
    auto a = v_adj_[v1].begin();
    auto b = v_adj_[v2].begin();
    while (a != v_adj_[v1].end() && b != v_adj_[v2].end()) {
        if (*a < *b) {
            ++a;
        } else if (*b < *a) {
            ++b;
        } else {
            degenerate += u_adj_[*a].size() - 2;
            ++a;
            ++b;
        }
    }
    return length_two + through_middle - degenerate;
}

std::size_t PathCounter::max_multiplicity(std::size_t max_len) const {
    std::size_t best = 0;
    for (Vertex a = 0; a < v_adj_.size(); ++a) {
        for (Vertex b = a + 1; b < v_adj_.size(); ++b) {
            best = std::max(best, paths(a, b, max_len));
        }
    }
    return best;
}

bool PathCounter::try_add_edge(Vertex u, Vertex v, std::size_t limit) {
    if (has_edge(u, v)) {
        return true;
    }
    add_edge(u, v);
    // Every new path uses the edge uv, so one of its endpoints is v, or v is its middle
    // vertex with one endpoint in N(u) and the other sharing a U-neighbor with v.
    bool ok = true;
    for (Vertex w = 0; w < v_adj_.size() && ok; ++w) {
        if (w != v && paths(v, w) > limit) {
            ok = false;
        }
    }
    if (ok) {
        VertexSet second;
        for (Vertex x : v_adj_[v]) {
            second.insert(second.end(), u_adj_[x].begin(), u_adj_[x].end());
        }
        std::sort(second.begin(), second.end());
        second.erase(std::unique(second.begin(), second.end()), second.end());
        for (Vertex x : u_adj_[u]) {
            if (x == v) {
                continue;
            }
            for (Vertex y : second) {
                if (y != x && y != v && paths(x, y) > limit) {
                    ok = false;
                    break;
                }
            }
            if (!ok) {
                break;
            }
        }
    }
    if (!ok) {
        remove_edge(u, v);
    }
    return ok;
}

BipartiteGraph PathCounter::graph() const {
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(edges_);
    for (Vertex u = 0; u < u_adj_.size(); ++u) {
        for (Vertex v : u_adj_[u]) {
            edges.emplace_back(u, v);
        }
    }
    return BipartiteGraph::from_edges(u_adj_.size(), v_adj_.size(), edges);
}

std::size_t path_multiplicity(const BipartiteGraph& b, std::size_t max_len) {
    if (max_len != 2 && max_len != 4) {
        throw InputError("path length bound must be 2 or 4");
    }
    return PathCounter(b).max_multiplicity(max_len);
}

Count count_labeled_p4(const BipartiteGraph& b, std::size_t min_udeg) {
    Count total{0};
    for (Vertex middle = 0; middle < b.v_size(); ++middle) {
        VertexSet eligible;
        for (Vertex u : b.v_neighbors(middle)) {
            if (b.u_degree(u) >= min_udeg) {
                eligible.push_back(u);
            }
        }
        for (Vertex u1 : eligible) {
            for (Vertex u2 : eligible) {
                if (u1 == u2) {
                    continue;
                }
                // v0 in N(u1) - middle, v2 in N(u2) - middle, v0 != v2.
                const std::uint64_t left = b.u_degree(u1) - 1;
                const std::uint64_t right = b.u_degree(u2) - 1;
                const std::uint64_t shared = intersect_size(b.u_neighbors(u1), b.u_neighbors(u2)) - 1;
                total += Count{left * right - shared};
            }
        }
    }
    return total;
}

CountReport count_pattern(const NamedGraph& pattern, const Graph& host) {
    const auto start = std::chrono::steady_clock::now();
    CountReport report;
    report.pattern = pattern.spec;
    if (pattern.clique_order) {
        report.method = "clique";
        report.count = *pattern.clique_order == 0 ? Count{1} : count_cliques(host, *pattern.clique_order);
    } else if (pattern.bipartition && pattern.bipartition->first > 0) {
        report.method = "complete-bipartite";
        auto [s, t] = *pattern.bipartition;
        if (s > t) {
            std::swap(s, t);
        }
        report.count = count_complete_bipartite(host, s, t);
    } else {
        report.method = "generic";
        report.count = count_subgraph(pattern.graph, host);
    }
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace cliquesat
