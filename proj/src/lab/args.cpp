#include "cliquesat/lab/args.hpp"

#include "cliquesat/errors.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace cliquesat::lab {

const std::string& ArgReader::raw(const std::string& key) {
    const auto it = params_.find(key);
    if (it == params_.end()) {
        throw InputError(context_ + ": missing parameter '" + key + "'");
    }
    used_.insert(key);
    return it->second;
}

std::string ArgReader::text(const std::string& key) {
    return raw(key);
}

std::string ArgReader::text(const std::string& key, const std::string& fallback) {
    return has(key) ? raw(key) : fallback;
}

std::size_t ArgReader::size(const std::string& key) {
    const std::string& s = raw(key);
    std::size_t value = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || end != s.data() + s.size()) {
        throw InputError(context_ + ": parameter '" + key + "' must be a non-negative integer, got '" + s + "'");
    }
    return value;
}

std::size_t ArgReader::size(const std::string& key, std::size_t fallback) {
    return has(key) ? size(key) : fallback;
}

std::uint64_t ArgReader::u64(const std::string& key, std::uint64_t fallback) {
    return has(key) ? static_cast<std::uint64_t>(size(key)) : fallback;
}

long double ArgReader::real(const std::string& key) {
    const std::string& s = raw(key);
    try {
        std::size_t used = 0;
        const long double v = std::stold(s, &used);
        if (used == s.size() && std::isfinite(v)) {
            return v;
        }
    } catch (const std::exception&) {
    }
    if (s.find('/') != std::string::npos) {
        return to_real(rational(key));
    }
    throw InputError(context_ + ": parameter '" + key + "' must be a finite real, got '" + s + "'");
}

long double ArgReader::real(const std::string& key, long double fallback) {
    return has(key) ? real(key) : fallback;
}

Rational ArgReader::rational(const std::string& key) {
    const std::string& s = raw(key);
    try {
        return parse_rational(s);
    } catch (const InputError& e) {
        throw InputError(context_ + ": parameter '" + key + "': " + e.what());
    }
}

Rational ArgReader::rational(const std::string& key, const Rational& fallback) {
    return has(key) ? rational(key) : fallback;
}

NamedGraph ArgReader::graph(const std::string& key) {
    return named_graph(raw(key));
}

NamedGraph ArgReader::graph(const std::string& key, const std::string& fallback) {
    return named_graph(has(key) ? raw(key) : fallback);
}

void ArgReader::finish() {
    for (const auto& [key, value] : params_) {
        if (used_.count(key) == 0) {
            throw InputError(context_ + ": unknown parameter '" + key + "'");
        }
    }
    finished_ = true;
}

Params parse_assignments(const std::vector<std::string>& tokens) {
    Params out;
    for (const std::string& token : tokens) {
        const auto eq = token.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw InputError("expected key=value, got '" + token + "'");
        }
        out[token.substr(0, eq)] = token.substr(eq + 1);
    }
    return out;
}

Rational parse_rational(const std::string& text) {
    const auto parse_int = [&](std::string_view s) {
        std::int64_t v = 0;
        const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc{} || end != s.data() + s.size()) {
            throw InputError("not a rational: '" + text + "'");
        }
        return v;
    };
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const std::int64_t den = parse_int(std::string_view(text).substr(slash + 1));
        if (den == 0) {
            throw InputError("zero denominator in '" + text + "'");
        }
        return Rational(parse_int(std::string_view(text).substr(0, slash)), den);
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) {
        return Rational(parse_int(text));
    }
    const std::string_view frac = std::string_view(text).substr(dot + 1);
    if (frac.size() > 15) {
        throw InputError("too many decimals in '" + text + "'");
    }
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) {
        scale *= 10;
    }
    const std::string_view whole = std::string_view(text).substr(0, dot);
    const bool negative = !whole.empty() && whole.front() == '-';
    const std::int64_t w = whole.empty() || whole == "-" ? 0 : parse_int(whole);
    const std::int64_t f = frac.empty() ? 0 : parse_int(frac);
    const std::int64_t magnitude = (negative ? -w : w) * scale + f;
    return Rational(negative ? -magnitude : magnitude, scale);
}

std::string format_real(long double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.17g", static_cast<double>(value));
    // Prefer the shortest representation that round-trips.
    for (int precision = 1; precision <= 17; ++precision) {
        char shorter[64];
        std::snprintf(shorter, sizeof shorter, "%.*g", precision, static_cast<double>(value));
        if (std::strtod(shorter, nullptr) == static_cast<double>(value)) {
            return shorter;
        }
    }
    return buffer;
}

} // namespace cliquesat::lab
