#include "cliquesat/count.hpp"

#include <algorithm>
#include <ostream>

namespace cliquesat {

Count Count::divide_exact(Count divisor) const {
    if (divisor.value_ == 0) {
        throw InternalError("division of a count by zero");
    }
    if (value_ % divisor.value_ != 0) {
        throw InternalError("count " + to_string() + " is not divisible by " + divisor.to_string());
    }
    return from_raw(value_ / divisor.value_);
}

Count Count::operator/(Count divisor) const {
    if (divisor.value_ == 0) {
        throw InternalError("division of a count by zero");
    }
    return from_raw(value_ / divisor.value_);
}

Count Count::operator%(Count divisor) const {
    if (divisor.value_ == 0) {
        throw InternalError("division of a count by zero");
    }
    return from_raw(value_ % divisor.value_);
}

std::string Count::to_string() const {
    if (value_ == 0) {
        return "0";
    }
    std::string digits;
    rep v = value_;
    while (v != 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

std::uint64_t Count::to_u64() const {
    if (value_ > UINT64_MAX) {
        throw CapabilityError("count " + to_string() + " does not fit in 64 bits");
    }
    return static_cast<std::uint64_t>(value_);
}

std::ostream& operator<<(std::ostream& os, Count c) { return os << c.to_string(); }

Count binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) {
        return Count{0};
    }
    k = std::min(k, n - k);
    // result * (n - i) is always divisible by (i + 1) at this point.
    Count result{1};
    for (std::uint64_t i = 0; i < k; ++i) {
        result *= Count{n - i};
        result = result.divide_exact(Count{i + 1});
    }
    return result;
}

Count parse_count(const std::string& text) {
    if (text.empty()) {
        throw InputError("empty integer");
    }
    Count value{0};
    for (char ch : text) {
        if (ch < '0' || ch > '9') {
            throw InputError("not a non-negative integer: '" + text + "'");
        }
        value *= Count{10};
        value += Count{static_cast<std::uint64_t>(ch - '0')};
    }
    return value;
}

} // namespace cliquesat
