#pragma once

#include "cliquesat/errors.hpp"

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace cliquesat {

// Exact non-negative subgraph count. Arithmetic is overflow-checked at 128 bits;
// overflow raises CapabilityError instead of wrapping.
class Count {
public:
    __extension__ typedef unsigned __int128 rep;

    constexpr Count() noexcept = default;
    constexpr Count(std::uint64_t value) noexcept : value_(value) {} // NOLINT: implicit by design of literals

    static constexpr Count from_raw(rep value) noexcept {
        Count c;
        c.value_ = value;
        return c;
    }

    [[nodiscard]] constexpr rep raw() const noexcept { return value_; }

    Count& operator+=(Count other) {
        if (__builtin_add_overflow(value_, other.value_, &value_)) {
            throw CapabilityError("count overflowed 128 bits");
        }
        return *this;
    }

    Count& operator-=(Count other) {
        if (other.value_ > value_) {
            throw InternalError("count subtraction went negative");
        }
        value_ -= other.value_;
        return *this;
    }

    Count& operator*=(Count other) {
        if (__builtin_mul_overflow(value_, other.value_, &value_)) {
            throw CapabilityError("count overflowed 128 bits");
        }
        return *this;
    }

    friend Count operator+(Count a, Count b) { return a += b; }
    friend Count operator-(Count a, Count b) { return a -= b; }
    friend Count operator*(Count a, Count b) { return a *= b; }

    // Division that must be exact (e.g. labeled embeddings by automorphisms).
    [[nodiscard]] Count divide_exact(Count divisor) const;
    [[nodiscard]] Count operator/(Count divisor) const;
    [[nodiscard]] Count operator%(Count divisor) const;

    constexpr auto operator<=>(const Count&) const = default;

    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] long double to_long_double() const noexcept { return static_cast<long double>(value_); }
    [[nodiscard]] double to_double() const noexcept { return static_cast<double>(value_); }
    // Throws CapabilityError when the value does not fit.
    [[nodiscard]] std::uint64_t to_u64() const;

private:
    rep value_ = 0;
};

std::ostream& operator<<(std::ostream& os, Count c);

// C(n, k) with overflow checking; zero when k > n.
Count binomial(std::uint64_t n, std::uint64_t k);

// Parses a non-negative decimal integer into a Count.
Count parse_count(const std::string& text);

} // namespace cliquesat
