#include "cliquesat/lab/records.hpp"

#include "cliquesat/errors.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

namespace cliquesat::lab {

namespace {

bool needs_escape(unsigned char c) {
    return c <= 0x20 || c == '%' || c == '=' || c >= 0x7f;
}

int hex_digit(char c) {
    if (c >= '0' && c <= '9') {
        return c - '0';
    }
    if (c >= 'A' && c <= 'F') {
        return c - 'A' + 10;
    }
    if (c >= 'a' && c <= 'f') {
        return c - 'a' + 10;
    }
    return -1;
}

template <typename T>
T parse_number(std::string_view text, std::size_t line_no, std::string_view key) {
    T value{};
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size()) {
        throw ParseError(line_no, "bad number for " + std::string(key) + ": '" + std::string(text) + "'");
    }
    return value;
}

double parse_real(std::string_view text, std::size_t line_no, std::string_view key) {
    try {
        std::size_t used = 0;
        const std::string s(text);
        const double v = std::stod(s, &used);
        if (used != s.size()) {
            throw std::invalid_argument("trailing");
        }
        return v;
    } catch (const std::exception&) {
        throw ParseError(line_no, "bad real for " + std::string(key) + ": '" + std::string(text) + "'");
    }
}

} // namespace

std::string to_string(Status status) {
    switch (status) {
    case Status::pass:
        return "pass";
    case Status::fail:
        return "fail";
    case Status::skip:
        return "skip";
    }
    return "?";
}

std::string to_string(Kind kind) {
    return kind == Kind::hard ? "hard" : "stat";
}

Status parse_status(std::string_view text) {
    if (text == "pass") {
        return Status::pass;
    }
    if (text == "fail") {
        return Status::fail;
    }
    if (text == "skip") {
        return Status::skip;
    }
    throw InputError("unknown status '" + std::string(text) + "'");
}

Kind parse_kind(std::string_view text) {
    if (text == "hard") {
        return Kind::hard;
    }
    if (text == "stat") {
        return Kind::stat;
    }
    throw InputError("unknown kind '" + std::string(text) + "'");
}

bool Record::same_measurement(const Record& other) const {
    return experiment == other.experiment && point == other.point && trial == other.trial && seed == other.seed &&
           params == other.params && outputs == other.outputs && status == other.status && kind == other.kind &&
           reason == other.reason;
}

std::string escape_value(std::string_view raw) {
    static constexpr char kHex[] = "0123456789ABCDEF";
    std::string out;
    out.reserve(raw.size());
    for (const char ch : raw) {
        const auto c = static_cast<unsigned char>(ch);
        if (needs_escape(c)) {
            out += '%';
            out += kHex[c >> 4];
            out += kHex[c & 15];
        } else {
            out += ch;
        }
    }
    return out;
}

std::string unescape_value(std::string_view escaped, std::size_t line_no) {
    std::string out;
    out.reserve(escaped.size());
    for (std::size_t i = 0; i < escaped.size(); ++i) {
        if (escaped[i] != '%') {
            out += escaped[i];
            continue;
        }
        if (i + 2 >= escaped.size()) {
            throw ParseError(line_no, "truncated percent escape");
        }
        const int hi = hex_digit(escaped[i + 1]);
        const int lo = hex_digit(escaped[i + 2]);
        if (hi < 0 || lo < 0) {
            throw ParseError(line_no, "bad percent escape");
        }
        out += static_cast<char>(hi * 16 + lo);
        i += 2;
    }
    return out;
}

std::string format_record(const Record& r) {
    std::ostringstream out;
    out << "experiment=" << escape_value(r.experiment) << " point=" << r.point << " trial=" << r.trial
        << " seed=" << r.seed;
    for (const auto& [k, v] : r.params) {
        out << " param." << escape_value(k) << '=' << escape_value(v);
    }
    for (const auto& [k, v] : r.outputs) {
        out << " out." << escape_value(k) << '=' << escape_value(v);
    }
    std::ostringstream ms;
    ms.precision(3);
    ms << std::fixed << r.wall_ms;
    out << " status=" << to_string(r.status) << " kind=" << to_string(r.kind) << " reason=" << escape_value(r.reason)
        << " wall_ms=" << ms.str();
    return out.str();
}

Record parse_record(std::string_view line, std::size_t line_no) {
    Record r;
    std::set<std::string> seen;
    std::size_t pos = 0;
    while (pos < line.size()) {
        std::size_t end = line.find(' ', pos);
        if (end == std::string_view::npos) {
            end = line.size();
        }
        const std::string_view token = line.substr(pos, end - pos);
        pos = end + 1;
        if (token.empty()) {
            continue;
        }
        const std::size_t eq = token.find('=');
        if (eq == std::string_view::npos || eq == 0) {
            throw ParseError(line_no, "token without key=value: '" + std::string(token) + "'");
        }
        const std::string key(token.substr(0, eq));
        const std::string_view raw = token.substr(eq + 1);
        if (!seen.insert(key).second) {
            throw ParseError(line_no, "duplicate key '" + key + "'");
        }
        if (key.rfind("param.", 0) == 0) {
            r.params[unescape_value(key.substr(6), line_no)] = unescape_value(raw, line_no);
        } else if (key.rfind("out.", 0) == 0) {
            r.outputs[unescape_value(key.substr(4), line_no)] = unescape_value(raw, line_no);
        } else if (key == "experiment") {
            r.experiment = unescape_value(raw, line_no);
        } else if (key == "point") {
            r.point = parse_number<std::size_t>(raw, line_no, key);
        } else if (key == "trial") {
            r.trial = parse_number<std::size_t>(raw, line_no, key);
        } else if (key == "seed") {
            r.seed = parse_number<std::uint64_t>(raw, line_no, key);
        } else if (key == "status") {
            try {
                r.status = parse_status(raw);
            } catch (const InputError& e) {
                throw ParseError(line_no, e.what());
            }
        } else if (key == "kind") {
            try {
                r.kind = parse_kind(raw);
            } catch (const InputError& e) {
                throw ParseError(line_no, e.what());
            }
        } else if (key == "reason") {
            r.reason = unescape_value(raw, line_no);
        } else if (key == "wall_ms") {
            r.wall_ms = parse_real(raw, line_no, key);
        } else {
            throw ParseError(line_no, "unknown key '" + key + "'");
        }
    }
    for (const char* required : {"experiment", "point", "trial", "seed", "status", "kind"}) {
        if (seen.count(required) == 0) {
            throw ParseError(line_no, std::string("missing key '") + required + "'");
        }
    }
    return r;
}

std::vector<Record> read_records(std::istream& in) {
    std::vector<Record> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line.front() == '#') {
            continue;
        }
        out.push_back(parse_record(line, line_no));
    }
    return out;
}

std::vector<Record> load_records(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open record file " + path.string());
    }
    return read_records(in);
}

void append_records(const std::filesystem::path& path, const std::vector<Record>& records) {
    std::ofstream out(path, std::ios::app);
    if (!out) {
        throw InputError("cannot open record file " + path.string() + " for appending");
    }
    for (const Record& r : records) {
        out << format_record(r) << '\n';
    }
}

} // namespace cliquesat::lab
