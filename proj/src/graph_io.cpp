#include "cliquesat/graph_io.hpp"

#include "cliquesat/errors.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace cliquesat {

namespace {

constexpr std::uint64_t kMaxVertices = 1ULL << 26;

// Splits a line into unsigned integers; throws ParseError on anything else.
std::vector<std::uint64_t> parse_numbers(std::string_view line, std::size_t line_no) {
    std::vector<std::uint64_t> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        std::uint64_t value = 0;
        const char* begin = line.data() + i;
        const char* end = line.data() + line.size();
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc{} || (ptr != end && *ptr != ' ' && *ptr != '\t' && *ptr != '\r')) {
            throw ParseError(line_no, "expected non-negative integers, got '" + std::string(line) + "'");
        }
        out.push_back(value);
        i = static_cast<std::size_t>(ptr - line.data());
    }
    return out;
}

class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    // Next non-blank line; false at end of input.
    bool next(std::string& line) {
        while (std::getline(in_, line)) {
            ++line_no_;
            if (line.find_first_not_of(" \t\r") != std::string::npos) {
                return true;
            }
        }
        return false;
    }

    [[nodiscard]] std::size_t line_no() const { return line_no_; }

private:
    std::istream& in_;
    std::size_t line_no_ = 0;
};

std::vector<std::uint64_t> expect_line(LineReader& reader, std::size_t fields, const char* what) {
    std::string line;
    if (!reader.next(line)) {
        throw ParseError(reader.line_no() + 1, std::string("missing ") + what);
    }
    auto numbers = parse_numbers(line, reader.line_no());
    if (numbers.size() != fields) {
        throw ParseError(reader.line_no(), std::string("expected ") + std::to_string(fields) +
                                               " integers in " + what);
    }
    return numbers;
}

void expect_end(LineReader& reader) {
    std::string line;
    if (reader.next(line)) {
        throw ParseError(reader.line_no(), "unexpected trailing content");
    }
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw InputError("cannot open " + path.string() + " for writing");
    }
    return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open " + path.string());
    }
    return in;
}

} // namespace

Graph read_graph(std::istream& in) {
    LineReader reader(in);
    const auto header = expect_line(reader, 2, "header \"n e\"");
    const auto n = header[0];
    const auto e = header[1];
    if (n > kMaxVertices) {
        throw ParseError(reader.line_no(), "vertex count " + std::to_string(n) + " exceeds supported size");
    }
    GraphBuilder builder(n);
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
    for (std::uint64_t i = 0; i < e; ++i) {
        auto uv = expect_line(reader, 2, "edge line");
        const auto line_no = reader.line_no();
        for (auto x : uv) {
            if (x >= n) {
                throw ParseError(line_no, "vertex " + std::to_string(x) + " out of range");
            }
        }
        if (uv[0] == uv[1]) {
            throw ParseError(line_no, "self-loop at vertex " + std::to_string(uv[0]));
        }
        if (uv[0] > uv[1]) {
            std::swap(uv[0], uv[1]);
        }
        if (!seen.emplace(uv[0], uv[1]).second) {
            throw ParseError(line_no, "duplicate edge " + std::to_string(uv[0]) + " " +
                                          std::to_string(uv[1]));
        }
        builder.add_edge(static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1]));
    }
    expect_end(reader);
    return std::move(builder).build();
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) {
        out << e.u << ' ' << e.v << '\n';
    }
}

BipartiteGraph read_bipartite(std::istream& in) {
    LineReader reader(in);
    const auto header = expect_line(reader, 3, "header \"m n e\"");
    const auto m = header[0];
    const auto n = header[1];
    const auto e = header[2];
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
    for (std::uint64_t i = 0; i < e; ++i) {
        const auto uv = expect_line(reader, 2, "edge line");
        const auto line_no = reader.line_no();
        if (uv[0] >= m) {
            throw ParseError(line_no, "U-vertex " + std::to_string(uv[0]) + " out of range");
        }
        if (uv[1] >= n) {
            throw ParseError(line_no, "V-vertex " + std::to_string(uv[1]) + " out of range");
        }
        if (!seen.emplace(uv[0], uv[1]).second) {
            throw ParseError(line_no, "duplicate edge " + std::to_string(uv[0]) + " " +
                                          std::to_string(uv[1]));
        }
        edges.emplace_back(static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1]));
    }
    expect_end(reader);
    return BipartiteGraph::from_edges(m, n, edges);
}

void write_bipartite(std::ostream& out, const BipartiteGraph& b) {
    out << b.u_size() << ' ' << b.v_size() << ' ' << b.edge_count() << '\n';
    for (const auto& [u, v] : b.edges()) {
        out << u << ' ' << v << '\n';
    }
}

CliqueUnion read_clique_union(std::istream& in) {
    LineReader reader(in);
    const auto header = expect_line(reader, 3, "header \"n m k\"");
    const auto n = header[0];
    const auto m = header[1];
    const auto k = header[2];
    std::vector<VertexSet> cliques;
    for (std::uint64_t i = 0; i < k; ++i) {
        const auto members = expect_line(reader, m, "clique line");
        VertexSet c;
        for (auto x : members) {
            if (x >= n) {
                throw ParseError(reader.line_no(), "vertex " + std::to_string(x) + " out of range");
            }
            c.push_back(static_cast<Vertex>(x));
        }
        cliques.push_back(std::move(c));
    }
    expect_end(reader);
    try {
        return CliqueUnion(n, m, std::move(cliques));
    } catch (const InputError& err) {
        throw ParseError(reader.line_no(), err.what());
    }
}

void write_clique_union(std::ostream& out, const CliqueUnion& cu) {
    out << cu.vertex_count() << ' ' << cu.clique_size() << ' ' << cu.size() << '\n';
    for (const auto& c : cu.cliques()) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            out << (i ? " " : "") << c[i];
        }
        out << '\n';
    }
}

Graph load_graph(const std::filesystem::path& path) {
    auto in = open_in(path);
    return read_graph(in);
}

void save_graph(const std::filesystem::path& path, const Graph& g) {
    auto out = open_out(path);
    write_graph(out, g);
}

BipartiteGraph load_bipartite(const std::filesystem::path& path) {
    auto in = open_in(path);
    return read_bipartite(in);
}

void save_bipartite(const std::filesystem::path& path, const BipartiteGraph& b) {
    auto out = open_out(path);
    write_bipartite(out, b);
}

CliqueUnion load_clique_union(const std::filesystem::path& path) {
    auto in = open_in(path);
    return read_clique_union(in);
}

void save_clique_union(const std::filesystem::path& path, const CliqueUnion& cu) {
    auto out = open_out(path);
    write_clique_union(out, cu);
}

} // namespace cliquesat
