#pragma once

#include "cliquesat/lab/records.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace cliquesat::lab {

struct ExperimentSpec {
    std::string experiment;
    std::map<std::string, std::vector<std::string>> grid;  // parameter -> values
    std::size_t trials = 1;
    std::uint64_t seed = 1;
    std::string output;       // record file; empty keeps records in memory only
    std::size_t threads = 1;  // 0 picks the hardware concurrency
};

// Spec file grammar, one assignment per line:
//   key = value[, value...]
// Blank lines and lines starting with '#' are ignored. Reserved keys take a single
// value: experiment (required), trials, seed, output, threads. Every other key is a
// grid parameter. Throws ParseError with the line number on malformed input and
// InputError for an unknown experiment.
ExperimentSpec parse_spec(std::istream& in);
ExperimentSpec load_spec(const std::filesystem::path& path);

// Replaces spec.seed with LAB_SEED when that variable is set. Returns true if it was.
bool apply_seed_override(ExperimentSpec& spec);

// Cartesian product of the grid in key order, last key varying fastest.
std::vector<Params> grid_points(const ExperimentSpec& spec);

// mix64(mix64(mix64(master) ^ point) ^ trial), with mix64 the SplitMix64 finalizer.
std::uint64_t trial_seed(std::uint64_t master, std::size_t point, std::size_t trial);

const std::vector<std::string>& experiment_names();
bool is_known_experiment(const std::string& name);

struct TrialOutcome {
    Params outputs;
    Status status = Status::pass;
    Kind kind = Kind::hard;
    std::string reason;
};

// Runs one trial. Deterministic in (experiment, params, seed). Grid points that fail
// an operation's preconditions come back as skip with the reason; parameter names the
// experiment does not know throw InputError.
TrialOutcome run_trial(const std::string& experiment, const Params& params, std::uint64_t seed);

// Empirical constants for one grid point, computed from its records alone so that a
// summary rebuilt from a record file matches the live one.
Params aggregate_point(const std::string& experiment, std::span<const Record> records);

// Largest delta on a 1e-4 grid in (0, 1) with freq(ratio > delta) > delta; 0 if none.
double largest_passing_delta(std::span<const double> ratios);

} // namespace cliquesat::lab
