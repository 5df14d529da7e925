#pragma once

#include "cliquesat/lab/records.hpp"
#include "cliquesat/named_graph.hpp"
#include "cliquesat/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace cliquesat::lab {

// Typed access to key=value parameters. Missing or malformed values throw InputError
// naming the key; finish() rejects keys nobody asked for.
class ArgReader {
public:
    explicit ArgReader(const Params& params, std::string context) : params_(params), context_(std::move(context)) {}

    [[nodiscard]] bool has(const std::string& key) const { return params_.count(key) != 0; }

    std::string text(const std::string& key);
    std::string text(const std::string& key, const std::string& fallback);
    std::size_t size(const std::string& key);
    std::size_t size(const std::string& key, std::size_t fallback);
    std::uint64_t u64(const std::string& key, std::uint64_t fallback);
    long double real(const std::string& key);
    long double real(const std::string& key, long double fallback);
    // Accepts "p/q", integers and finite decimals such as "0.125".
    Rational rational(const std::string& key);
    Rational rational(const std::string& key, const Rational& fallback);
    NamedGraph graph(const std::string& key);
    NamedGraph graph(const std::string& key, const std::string& fallback);

    // Call once every parameter has been read.
    void finish();
    [[nodiscard]] bool finished() const noexcept { return finished_; }

private:
    const std::string& raw(const std::string& key);

    const Params& params_;
    std::string context_;
    std::set<std::string> used_;
    bool finished_ = false;
};

// "key=value" tokens to Params; throws InputError on a token without '='.
Params parse_assignments(const std::vector<std::string>& tokens);

Rational parse_rational(const std::string& text);

// Shortest round-trip text for a double.
std::string format_real(long double value);

} // namespace cliquesat::lab
