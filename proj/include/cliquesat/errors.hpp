#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cliquesat {

// Bad arguments or a violated precondition.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed file content. Carries the 1-based line number of the offending line.
class ParseError : public InputError {
public:
    ParseError(std::size_t line, const std::string& message)
        : InputError("line " + std::to_string(line) + ": " + message), line_(line) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// The request is well-formed but exceeds an enumeration guard or 128-bit count range.
class CapabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A postcondition that a theorem guarantees did not hold; signals an implementation bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace cliquesat
