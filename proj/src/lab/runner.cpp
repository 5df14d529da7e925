#include "cliquesat/lab/runner.hpp"

#include "cliquesat/errors.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <iomanip>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>

namespace cliquesat::lab {

namespace {

constexpr std::size_t kKeptReasons = 3;

Record make_record(const std::string& experiment, std::size_t point, std::size_t trial, std::uint64_t seed,
                   const Params& params) {
    const auto start = std::chrono::steady_clock::now();
    const TrialOutcome outcome = run_trial(experiment, params, seed);
    const auto stop = std::chrono::steady_clock::now();
    Record r;
    r.experiment = experiment;
    r.point = point;
    r.trial = trial;
    r.seed = seed;
    r.params = params;
    r.outputs = outcome.outputs;
    r.status = outcome.status;
    r.kind = outcome.kind;
    r.reason = outcome.reason;
    r.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return r;
}

} // namespace

double RunSummary::pass_rate() const {
    const std::size_t ran = pass + fail;
    return ran == 0 ? 1.0 : static_cast<double>(pass) / static_cast<double>(ran);
}

RunOutput run_experiment(const ExperimentSpec& spec) {
    if (!is_known_experiment(spec.experiment)) {
        throw InputError("unknown experiment '" + spec.experiment + "'");
    }
    if (spec.trials < 1) {
        throw InputError("trials must be at least 1");
    }
    const auto points = grid_points(spec);
    const std::size_t jobs = points.size() * spec.trials;
    std::vector<Record> records(jobs);
    std::size_t threads = spec.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : spec.threads;
    threads = std::min(threads, std::max<std::size_t>(jobs, 1));

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    const auto worker = [&] {
        while (true) {
            const std::size_t job = next.fetch_add(1);
            if (job >= jobs) {
                return;
            }
            const std::size_t point = job / spec.trials;
            const std::size_t trial = job % spec.trials;
            try {
                records[job] = make_record(spec.experiment, point, trial, trial_seed(spec.seed, point, trial),
                                           points[point]);
            } catch (...) {
                const std::lock_guard lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
                next.store(jobs);
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t i = 0; i < threads; ++i) {
            pool.emplace_back(worker);
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
    if (!spec.output.empty()) {
        append_records(spec.output, records);
    }
    RunOutput out;
    out.summary = summarize_records(records);
    out.summary.experiment = spec.experiment;
    out.records = std::move(records);
    return out;
}

RunSummary summarize_records(std::span<const Record> records) {
    RunSummary summary;
    std::map<std::size_t, std::vector<Record>> by_point;
    for (const Record& r : records) {
        if (summary.experiment.empty()) {
            summary.experiment = r.experiment;
        } else if (summary.experiment != r.experiment) {
            throw InputError("records mix experiments '" + summary.experiment + "' and '" + r.experiment + "'");
        }
        by_point[r.point].push_back(r);
    }
    for (const auto& [point, group] : by_point) {
        PointSummary ps;
        ps.point = point;
        ps.params = group.front().params;
        for (const Record& r : group) {
            switch (r.status) {
            case Status::pass:
                ++ps.pass;
                break;
            case Status::fail:
                ++ps.fail;
                if (r.kind == Kind::hard) {
                    ++ps.hard_failures;
                }
                if (ps.failure_reasons.size() < kKeptReasons) {
                    ps.failure_reasons.push_back("trial " + std::to_string(r.trial) + " seed " +
                                                 std::to_string(r.seed) + ": " + r.reason);
                }
                break;
            case Status::skip:
                ++ps.skip;
                break;
            }
        }
        ps.aggregates = aggregate_point(summary.experiment, group);
        summary.pass += ps.pass;
        summary.fail += ps.fail;
        summary.skip += ps.skip;
        summary.hard_failures += ps.hard_failures;
        summary.points.push_back(std::move(ps));
    }
    return summary;
}

void print_summary(std::ostream& out, const RunSummary& summary) {
    out << "experiment " << summary.experiment << ": " << summary.pass << " pass, " << summary.fail << " fail ("
        << summary.hard_failures << " hard), " << summary.skip << " skip, pass rate " << std::fixed
        << std::setprecision(4) << summary.pass_rate() << std::defaultfloat << '\n';
    for (const PointSummary& p : summary.points) {
        out << "  point " << p.point << " [";
        bool first = true;
        for (const auto& [k, v] : p.params) {
            out << (first ? "" : " ") << k << '=' << v;
            first = false;
        }
        out << "] pass " << p.pass << " fail " << p.fail << " skip " << p.skip;
        for (const auto& [k, v] : p.aggregates) {
            out << ' ' << k << '=' << v;
        }
        out << '\n';
        for (const std::string& reason : p.failure_reasons) {
            out << "    witness: " << reason << '\n';
        }
    }
}

ReplayResult replay(const Record& record) {
    const TrialOutcome again = run_trial(record.experiment, record.params, record.seed);
    ReplayResult result;
    if (again.outputs != record.outputs) {
        result.identical = false;
        for (const auto& [k, v] : record.outputs) {
            const auto it = again.outputs.find(k);
            const std::string now = it == again.outputs.end() ? "<missing>" : it->second;
            if (now != v) {
                result.detail += k + ": " + v + " -> " + now + "; ";
            }
        }
        for (const auto& [k, v] : again.outputs) {
            if (record.outputs.count(k) == 0) {
                result.detail += k + ": <missing> -> " + v + "; ";
            }
        }
    }
    if (again.status != record.status || again.kind != record.kind || again.reason != record.reason) {
        result.identical = false;
        result.detail += "status " + to_string(record.status) + " -> " + to_string(again.status) + "; ";
    }
    return result;
}

} // namespace cliquesat::lab
