#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace cliquesat {

// Exact rational for exponents and density ratios. Values stay small (numerators
// and denominators are polynomials in v(F), e(F), r, t), so 64-bit components suffice.
using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& q) {
    if (q.denominator() == 1) {
        return std::to_string(q.numerator());
    }
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

inline long double to_real(const Rational& q) {
    return static_cast<long double>(q.numerator()) / static_cast<long double>(q.denominator());
}

} // namespace cliquesat
