#include "cliquesat/named_graph.hpp"

#include "cliquesat/errors.hpp"

#include <charconv>
#include <string>
#include <vector>

namespace cliquesat {

namespace {

std::size_t parse_size(std::string_view text, std::string_view spec) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        throw InputError("unknown graph spec '" + std::string(spec) + "'");
    }
    return value;
}

std::vector<std::size_t> parse_list(std::string_view text, std::string_view spec) {
    std::vector<std::size_t> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto end = comma == std::string_view::npos ? text.size() : comma;
        out.push_back(parse_size(text.substr(start, end - start), spec));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

} // namespace

Graph complete_graph(std::size_t n) {
    GraphBuilder builder(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            builder.add_edge(u, v);
        }
    }
    return std::move(builder).build();
}

Graph complete_bipartite_graph(std::size_t s, std::size_t t) {
    GraphBuilder builder(s + t);
    for (Vertex u = 0; u < s; ++u) {
        for (Vertex v = 0; v < t; ++v) {
            builder.add_edge(u, static_cast<Vertex>(s + v));
        }
    }
    return std::move(builder).build();
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) {
        throw InputError("cycle needs at least 3 vertices");
    }
    GraphBuilder builder(n);
    for (Vertex v = 0; v < n; ++v) {
        builder.add_edge(v, static_cast<Vertex>((v + 1) % n));
    }
    return std::move(builder).build();
}

Graph path_graph(std::size_t edges) {
    GraphBuilder builder(edges + 1);
    for (Vertex v = 0; v < edges; ++v) {
        builder.add_edge(v, v + 1);
    }
    return std::move(builder).build();
}

Graph star_graph(std::size_t leaves) {
    GraphBuilder builder(leaves + 1);
    for (Vertex v = 1; v <= leaves; ++v) {
        builder.add_edge(0, v);
    }
    return std::move(builder).build();
}

Graph tree_from_parents(std::span<const Vertex> parents) {
    GraphBuilder builder(parents.size() + 1);
    for (std::size_t i = 0; i < parents.size(); ++i) {
        const auto child = static_cast<Vertex>(i + 1);
        if (parents[i] >= child) {
            throw InputError("tree parent of vertex " + std::to_string(child) + " must be smaller");
        }
        builder.add_edge(parents[i], child);
    }
    return std::move(builder).build();
}

BipartiteGraph complete_bipartite(std::size_t u_size, std::size_t v_size) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < u_size; ++u) {
        for (Vertex v = 0; v < v_size; ++v) {
            edges.emplace_back(u, v);
        }
    }
    return BipartiteGraph::from_edges(u_size, v_size, edges);
}

BipartiteGraph bipartite_cycle(std::size_t half_length) {
    if (half_length < 2) {
        throw InputError("bipartite cycle needs half-length at least 2");
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex i = 0; i < half_length; ++i) {
        edges.emplace_back(i, i);
        edges.emplace_back(i, static_cast<Vertex>((i + 1) % half_length));
    }
    return BipartiteGraph::from_edges(half_length, half_length, edges);
}

NamedGraph named_graph(std::string_view spec) {
    if (spec.size() < 2) {
        throw InputError("unknown graph spec '" + std::string(spec) + "'");
    }
    NamedGraph out;
    out.spec = std::string(spec);
    const char kind = spec[0];
    const auto rest = spec.substr(1);
    switch (kind) {
    case 'K': {
        const auto parts = parse_list(rest, spec);
        if (parts.size() == 1) {
            out.graph = complete_graph(parts[0]);
            out.clique_order = parts[0];
        } else if (parts.size() == 2) {
            out.graph = complete_bipartite_graph(parts[0], parts[1]);
            out.bipartition = std::make_pair(parts[0], parts[1]);
        } else {
            throw InputError("unknown graph spec '" + std::string(spec) + "'");
        }
        return out;
    }
    case 'C':
        out.graph = cycle_graph(parse_size(rest, spec));
        return out;
    case 'P':
        out.graph = path_graph(parse_size(rest, spec));
        return out;
    case 'S': {
        const auto leaves = parse_size(rest, spec);
        out.graph = star_graph(leaves);
        out.bipartition = std::make_pair(std::size_t{1}, leaves);
        return out;
    }
    case 'T': {
        if (rest.empty() || rest[0] != ':') {
            throw InputError("unknown graph spec '" + std::string(spec) + "'");
        }
        std::vector<Vertex> parents;
        if (rest.size() > 1) {
            for (auto p : parse_list(rest.substr(1), spec)) {
                parents.push_back(static_cast<Vertex>(p));
            }
        }
        out.graph = tree_from_parents(parents);
        return out;
    }
    default:
        throw InputError("unknown graph spec '" + std::string(spec) + "'");
    }
}

} // namespace cliquesat
