#include "cliquesat/extraction.hpp"

#include "cliquesat/counters.hpp"
#include "cliquesat/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <functional>

namespace cliquesat {

namespace {

long double threshold(long double b, std::size_t current, std::size_t n, std::size_t edges) {
    const auto cur = static_cast<long double>(current);
    return std::pow(2.0L, -b) * std::pow(cur / static_cast<long double>(n), 1.0L / b) *
           static_cast<long double>(edges) / cur;
}

Count factorial(std::size_t k) {
    Count out{1};
    for (std::size_t i = 2; i <= k; ++i) {
        out *= Count{i};
    }
    return out;
}

Count power(Count base, std::size_t exponent) {
    Count out{1};
    for (std::size_t i = 0; i < exponent; ++i) {
        out *= base;
    }
    return out;
}

} // namespace

ExtractionResult extract_min_degree(const Hypergraph& h, double b) {
    if (h.edge_count() < 1) {
        throw InputError("extraction needs at least one hyperedge");
    }
    if (!(b >= 1)) {
        throw InputError("extraction needs b >= 1");
    }
    const std::size_t n = h.vertex_count();
    std::vector<bool> alive_vertex(n, true);
    std::vector<bool> alive_edge(h.edge_count(), true);
    std::vector<std::size_t> degree(n);
    for (Vertex v = 0; v < n; ++v) {
        degree[v] = h.degree(v);
    }
    std::size_t current = n;
    ExtractionResult result;
    while (current > 0) {
        const long double tau = threshold(b, current, n, h.edge_count()) * (1 + 1e-12L);
        Vertex victim = 0;
        bool found = false;
        for (Vertex v = 0; v < n && !found; ++v) {
            if (alive_vertex[v] && static_cast<long double>(degree[v]) < tau) {
                victim = v;
                found = true;
            }
        }
        if (!found) {
            break;
        }
        alive_vertex[victim] = false;
        --current;
        result.removal_order.push_back(victim);
        for (std::size_t e : h.incident(victim)) {
            if (alive_edge[e]) {
                alive_edge[e] = false;
                for (Vertex w : h.edge(e)) {
                    --degree[w];
                }
            }
        }
    }
    if (current == 0) {
        throw InternalError("peeling removed every vertex; the extraction guarantee failed");
    }
    result.min_degree = SIZE_MAX;
    for (Vertex v = 0; v < n; ++v) {
        if (alive_vertex[v]) {
            result.kept_vertices.push_back(v);
            result.min_degree = std::min(result.min_degree, degree[v]);
        }
    }
    result.kept_edges = static_cast<std::size_t>(std::count(alive_edge.begin(), alive_edge.end(), true));
    result.guarantee = threshold(b, current, n, h.edge_count());
    return result;
}

bool certify_extraction(const Hypergraph& h, const ExtractionResult& result, const Rational& b) {
    using boost::multiprecision::cpp_int;
    using boost::multiprecision::pow;
    if (b < Rational(1)) {
        throw InputError("certification needs b >= 1");
    }
    const auto p = static_cast<unsigned>(b.numerator());
    const auto q = static_cast<unsigned>(b.denominator());
    const cpp_int d = result.min_degree;
    const cpp_int kept = result.kept_vertices.size();
    const cpp_int n = h.vertex_count();
    const cpp_int edges = h.edge_count();
    const cpp_int lhs = pow(cpp_int(d * kept), p * q) * pow(cpp_int(2), p * p) * pow(n, q * q);
    const cpp_int rhs = pow(kept, q * q) * pow(edges, p * q);
    return lhs >= rhs;
}

bool is_tree(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0 || g.edge_count() != n - 1) {
        return false;
    }
    std::vector<bool> seen(n, false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

GreedyTreeReport greedy_tree_count(const Graph& g, const Graph& tree, std::size_t delta) {
    if (!is_tree(tree)) {
        throw InputError("greedy tree count needs a tree");
    }
    const std::size_t k = tree.vertex_count();
    if (delta < 2 * k) {
        throw InputError("greedy tree count needs delta >= 2 v(T)");
    }
    if (g.min_degree() < delta) {
        throw InputError("greedy tree count needs every degree of G to be at least delta");
    }
    GreedyTreeReport report;
    report.run_floor = Count{g.vertex_count()} * power(Count{delta - k}, k - 1);
    const Count fact = factorial(k);
    report.bound = report.run_floor / fact;
    if (report.run_floor % fact != Count{0}) {
        report.bound += Count{1};
    }

    // Order the tree so that every vertex after the first has an earlier neighbor.
    std::vector<Vertex> order{0};
    std::vector<std::size_t> parent_position(k, 0);
    std::vector<bool> placed(k, false);
    placed[0] = true;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (Vertex w : tree.neighbors(order[i])) {
            if (!placed[w]) {
                placed[w] = true;
                parent_position[order.size()] = i;
                order.push_back(w);
            }
        }
    }
    std::vector<Vertex> chosen(k);
    std::vector<bool> used(g.vertex_count(), false);
    std::function<Count(std::size_t)> run = [&](std::size_t i) -> Count {
        if (i == k) {
            return Count{1};
        }
        Count ways{0};
        const auto step = [&](Vertex y) {
            if (used[y]) {
                return;
            }
            used[y] = true;
            chosen[i] = y;
            ways += run(i + 1);
            used[y] = false;
        };
        if (i == 0) {
            for (Vertex y = 0; y < g.vertex_count(); ++y) {
                step(y);
            }
        } else {
            for (Vertex y : g.neighbors(chosen[parent_position[i]])) {
                step(y);
            }
        }
        return ways;
    };
    report.runs = run(0);
    report.exact = count_subgraph(tree, g);
    report.certified = report.runs >= report.run_floor && report.exact >= report.bound;
    return report;
}

Hypergraph clique_hypergraph(const Graph& g, std::size_t r) {
    return Hypergraph(g.vertex_count(), list_cliques(g, r));
}

TreePipelineReport prop15_pipeline(const Graph& g, const Graph& tree, std::size_t r) {
    if (!is_tree(tree)) {
        throw InputError("tree pipeline needs a tree");
    }
    const std::size_t k = tree.vertex_count();
    if (r < 2 || r >= k) {
        throw InputError("tree pipeline needs 2 <= r < v(T)");
    }
    TreePipelineReport report;
    report.b = Rational(static_cast<std::int64_t>(k) - 1, static_cast<std::int64_t>(k - r));
    report.exact = count_subgraph(tree, g);
    const Hypergraph h = clique_hypergraph(g, r);
    report.hyperedges = h.edge_count();
    if (h.edge_count() == 0) {
        report.certified = true;
        return report;
    }
    report.extraction = extract_min_degree(h, static_cast<double>(to_real(report.b)));
    report.extraction_certified = certify_extraction(h, report.extraction, report.b);
    report.ell = report.extraction.min_degree;

    const auto& kept = report.extraction.kept_vertices;
    const Graph sub = g.induced(kept);
    report.realized_min_degree = sub.min_degree();
    report.degree_floor = std::pow(static_cast<long double>(report.ell), 1.0L / static_cast<long double>(r - 1));
    report.headroom = report.degree_floor >= 2.0L * static_cast<long double>(k);
    const long double slack = std::max(0.0L, report.degree_floor - static_cast<long double>(k));
    report.bound = static_cast<long double>(kept.size()) * std::pow(slack, static_cast<long double>(k - 1)) /
                   factorial(k).to_long_double();
    report.exact_in_subgraph = count_subgraph(tree, sub);
    report.certified = report.exact_in_subgraph.to_long_double() >= report.bound;
    return report;
}

} // namespace cliquesat
