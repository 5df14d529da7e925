#pragma once

#include "cliquesat/lab/experiments.hpp"
#include "cliquesat/lab/records.hpp"

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace cliquesat::lab {

struct PointSummary {
    std::size_t point = 0;
    Params params;
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t skip = 0;
    std::size_t hard_failures = 0;
    Params aggregates;
    std::vector<std::string> failure_reasons;  // first few, for witness dumps
};

struct RunSummary {
    std::string experiment;
    std::vector<PointSummary> points;
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t skip = 0;
    std::size_t hard_failures = 0;

    [[nodiscard]] double pass_rate() const;  // pass / (pass + fail); 1 when nothing ran
};

struct RunOutput {
    RunSummary summary;
    std::vector<Record> records;  // job order: point-major, then trial
};

// Runs every grid point and trial on a pool of spec.threads workers. Records are
// appended to spec.output (when set) in job order after all trials finish, so the
// file does not depend on scheduling.
RunOutput run_experiment(const ExperimentSpec& spec);

// Summary rebuilt from records alone; run_experiment uses the same routine.
RunSummary summarize_records(std::span<const Record> records);

void print_summary(std::ostream& out, const RunSummary& summary);

struct ReplayResult {
    bool identical = true;
    std::string detail;
};

// Re-runs a record's (experiment, params, seed) and compares every measured value.
ReplayResult replay(const Record& record);

} // namespace cliquesat::lab
