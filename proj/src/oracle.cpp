#include "cliquesat/oracle.hpp"

#include "cliquesat/errors.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>

namespace cliquesat::oracle {

namespace {

// Calls visit with every k-subset of {0..n-1} in lexicographic order.
void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const VertexSet&)>& visit) {
    if (k > n) {
        return;
    }
    VertexSet s(k);
    for (std::size_t i = 0; i < k; ++i) {
        s[i] = static_cast<Vertex>(i);
    }
    while (true) {
        visit(s);
        std::size_t i = k;
        while (i > 0 && s[i - 1] == n - k + i - 1) {
            --i;
        }
        if (i == 0) {
            return;
        }
        ++s[i - 1];
        for (std::size_t j = i; j < k; ++j) {
            s[j] = s[j - 1] + 1;
        }
    }
}

bool is_clique(const Graph& g, const VertexSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (!g.has_edge(s[i], s[j])) {
                return false;
            }
        }
    }
    return true;
}

} // namespace

Count count_cliques(const Graph& g, std::size_t r) {
    Count total{0};
    for_each_subset(g.vertex_count(), r, [&](const VertexSet& s) {
        if (is_clique(g, s)) {
            total += Count{1};
        }
    });
    return total;
}

Count cliques_containing(const Graph& g, const VertexSet& s, std::size_t r) {
    Count total{0};
    for_each_subset(g.vertex_count(), r, [&](const VertexSet& c) {
        if (std::includes(c.begin(), c.end(), s.begin(), s.end()) && is_clique(g, c)) {
            total += Count{1};
        }
    });
    return total;
}

std::vector<std::vector<Edge>> subgraph_copies(const Graph& f, const Graph& g) {
    const std::size_t k = f.vertex_count();
    const auto f_edges = f.edges();
    std::set<std::vector<Edge>> seen;
    std::vector<Vertex> image(k);
    std::vector<bool> used(g.vertex_count(), false);
    std::function<void(std::size_t)> assign = [&](std::size_t i) {
        if (i == k) {
            std::vector<Edge> copy;
            for (const Edge& e : f_edges) {
                const Vertex a = image[e.u];
                const Vertex b = image[e.v];
                if (!g.has_edge(a, b)) {
                    return;
                }
                copy.push_back({std::min(a, b), std::max(a, b)});
            }
            std::sort(copy.begin(), copy.end());
            seen.insert(std::move(copy));
            return;
        }
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            if (!used[v]) {
                used[v] = true;
                image[i] = v;
                assign(i + 1);
                used[v] = false;
            }
        }
    };
    assign(0);
    return {seen.begin(), seen.end()};
}

Count count_subgraph(const Graph& f, const Graph& g) {
    // Isolated pattern vertices make distinct copies share an edge set; the
    // patterns used for cross-checks have none.
    for (Vertex v = 0; v < f.vertex_count(); ++v) {
        if (f.degree(v) == 0) {
            throw InputError("oracle subgraph count needs a pattern without isolated vertices");
        }
    }
    return Count{subgraph_copies(f, g).size()};
}

std::size_t simple_paths(const Graph& g, Vertex a, Vertex b, std::size_t length) {
    std::vector<bool> on_path(g.vertex_count(), false);
    std::function<std::size_t(Vertex, std::size_t)> walk = [&](Vertex x, std::size_t left) -> std::size_t {
        if (left == 0) {
            return x == b ? 1 : 0;
        }
        std::size_t found = 0;
        on_path[x] = true;
        for (Vertex y : g.neighbors(x)) {
            if (!on_path[y]) {
                found += walk(y, left - 1);
            }
        }
        on_path[x] = false;
        return found;
    };
    return walk(a, length);
}

std::size_t path_multiplicity(const BipartiteGraph& b, std::size_t max_len) {
    const Graph g = b.as_graph();
    const auto m = static_cast<Vertex>(b.u_size());
    std::size_t best = 0;
    for (Vertex x = 0; x < b.v_size(); ++x) {
        for (Vertex y = x + 1; y < b.v_size(); ++y) {
            std::size_t paths = simple_paths(g, m + x, m + y, 2);
            if (max_len >= 4) {
                paths += simple_paths(g, m + x, m + y, 4);
            }
            best = std::max(best, paths);
        }
    }
    return best;
}

Count count_labeled_p4(const BipartiteGraph& b, std::size_t min_udeg) {
    Count total{0};
    for (Vertex v0 = 0; v0 < b.v_size(); ++v0) {
        for (Vertex u1 = 0; u1 < b.u_size(); ++u1) {
            if (!b.has_edge(u1, v0) || b.u_degree(u1) < min_udeg) {
                continue;
            }
            for (Vertex v1 = 0; v1 < b.v_size(); ++v1) {
                if (v1 == v0 || !b.has_edge(u1, v1)) {
                    continue;
                }
                for (Vertex u2 = 0; u2 < b.u_size(); ++u2) {
                    if (u2 == u1 || !b.has_edge(u2, v1) || b.u_degree(u2) < min_udeg) {
                        continue;
                    }
                    for (Vertex v2 = 0; v2 < b.v_size(); ++v2) {
                        if (v2 != v0 && v2 != v1 && b.has_edge(u2, v2)) {
                            total += Count{1};
                        }
                    }
                }
            }
        }
    }
    return total;
}

Graph clique_graph(const BipartiteGraph& b) {
    GraphBuilder builder(b.v_size());
    for (Vertex x = 0; x < b.v_size(); ++x) {
        for (Vertex y = x + 1; y < b.v_size(); ++y) {
            for (Vertex u = 0; u < b.u_size(); ++u) {
                if (b.has_edge(u, x) && b.has_edge(u, y)) {
                    builder.add_edge(x, y);
                    break;
                }
            }
        }
    }
    return std::move(builder).build();
}

std::vector<MaskFamily> valid_families(const Graph& f) {
    const std::size_t k = f.vertex_count();
    if (k > 5) {
        throw CapabilityError("oracle valid-family enumeration supports at most 5 vertices");
    }
    const auto edges = f.edges();
    const auto spans = [&](std::uint32_t set, const Edge& e) {
        return ((set >> e.u) & 1U) != 0 && ((set >> e.v) & 1U) != 0;
    };
    std::vector<std::uint32_t> candidates;
    for (std::uint32_t set = 1; set < (1U << k); ++set) {
        if (std::any_of(edges.begin(), edges.end(), [&](const Edge& e) { return spans(set, e); })) {
            candidates.push_back(set);
        }
    }
    if (candidates.size() > 26) {
        throw CapabilityError("oracle valid-family enumeration: too many candidate sets");
    }
    std::vector<MaskFamily> out;
    for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << candidates.size()); ++pick) {
        bool covered = true;
        for (const Edge& e : edges) {
            bool hit = false;
            for (std::size_t i = 0; i < candidates.size() && !hit; ++i) {
                hit = ((pick >> i) & 1U) != 0 && spans(candidates[i], e);
            }
            if (!hit) {
                covered = false;
                break;
            }
        }
        if (covered) {
            MaskFamily family;
            for (std::size_t i = 0; i < candidates.size(); ++i) {
                if (((pick >> i) & 1U) != 0) {
                    family.push_back(candidates[i]);
                }
            }
            out.push_back(std::move(family));
        }
    }
    return out;
}

Count count_z(const Graph& f, const CliqueUnion& cu) {
    if (cu.size() > 16) {
        throw CapabilityError("oracle Z count supports at most 16 cliques");
    }
    const auto copies = subgraph_copies(f, union_graph(cu));
    Count total{0};
    for (const auto& copy : copies) {
        VertexSet support;
        for (const Edge& e : copy) {
            support.push_back(e.u);
            support.push_back(e.v);
        }
        std::sort(support.begin(), support.end());
        support.erase(std::unique(support.begin(), support.end()), support.end());
        const auto contains = [&](std::size_t c, Vertex v) {
            return std::binary_search(cu.clique(c).begin(), cu.clique(c).end(), v);
        };
        for (std::uint32_t pick = 1; pick < (1U << cu.size()); ++pick) {
            bool ok = true;
            std::set<VertexSet> traces;
            std::vector<bool> covered(copy.size(), false);
            for (std::size_t c = 0; c < cu.size() && ok; ++c) {
                if (((pick >> c) & 1U) == 0) {
                    continue;
                }
                bool spans_edge = false;
                for (std::size_t i = 0; i < copy.size(); ++i) {
                    if (contains(c, copy[i].u) && contains(c, copy[i].v)) {
                        spans_edge = true;
                        covered[i] = true;
                    }
                }
                VertexSet trace;
                for (Vertex v : support) {
                    if (contains(c, v)) {
                        trace.push_back(v);
                    }
                }
                ok = spans_edge && traces.insert(trace).second;
            }
            if (ok && std::all_of(covered.begin(), covered.end(), [](bool b) { return b; })) {
                total += Count{1};
            }
        }
    }
    return total;
}

} // namespace cliquesat::oracle
