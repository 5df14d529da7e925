#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace cliquesat::lab {

enum class Scale { smoke, desk };

Scale parse_scale(const std::string& name);
std::string to_string(Scale scale);

inline constexpr int kCriterionCount = 11;

// Frozen reference for the clique-count delta at (n=24, m=6, r=3, u=10), 2000 trials,
// master seed kLemma31Seed. Desk runs must land within 20% of it.
inline constexpr double kLemma31DeltaBaseline = 0.1779;
inline constexpr unsigned long long kLemma31Seed = 31;

struct CriterionResult {
    int id = 0;
    std::string name;
    bool hard_ok = true;  // every theorem-exact check held
    bool stat_ok = true;  // every statistical check met its threshold
    std::string detail;
    double seconds = 0;

    [[nodiscard]] bool passed() const noexcept { return hard_ok && stat_ok; }
    // "PASS", "FAIL" (a hard check broke) or "WARN" (only a statistical check missed).
    [[nodiscard]] std::string label() const;
};

CriterionResult run_criterion(int id, Scale scale);

// Runs criteria 1..11 in order; prints each line to `progress` as it completes.
std::vector<CriterionResult> verify_all(Scale scale, std::ostream* progress = nullptr);

std::string format_criterion(const CriterionResult& result);

} // namespace cliquesat::lab
