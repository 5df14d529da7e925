#include "cliquesat/errors.hpp"
#include "cliquesat/lab/args.hpp"
#include "cliquesat/lab/experiments.hpp"
#include "cliquesat/lab/formulas.hpp"
#include "cliquesat/lab/plot.hpp"
#include "cliquesat/lab/records.hpp"
#include "cliquesat/lab/runner.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include <unistd.h>

using namespace cliquesat;
using namespace cliquesat::lab;

namespace fs = std::filesystem;

namespace {

// Fresh scratch directory per test case, removed on scope exit.
struct Scratch {
    fs::path dir;
    Scratch() {
        static int counter = 0;
        dir = fs::temp_directory_path() /
              ("cliquesat_test_lab_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::remove_all(dir);
        fs::create_directories(dir);
    }
    ~Scratch() {
        std::error_code ec;
        fs::remove_all(dir, ec);
    }
    fs::path operator/(const std::string& name) const { return dir / name; }
};

ExperimentSpec spec_from(const std::string& text) {
    std::istringstream in(text);
    return parse_spec(in);
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

} // namespace

TEST_CASE("record round trip with escaping") {
    Record r;
    r.experiment = "lemma33_Z_dominance";
    r.point = 3;
    r.trial = 17;
    r.seed = 18446744073709551615ULL;
    r.params = {{"F", "K2,3"}, {"note", "a b=c%d"}};
    r.outputs = {{"copies", "12"}, {"z", "40"}};
    r.status = Status::fail;
    r.kind = Kind::hard;
    r.reason = "N(F,G) = 12 exceeds Z\tline";
    r.wall_ms = 1.25;

    const std::string line = format_record(r);
    CHECK(line.find("param.note=a%20b%3Dc%25d") != std::string::npos);
    CHECK(line.find('\t') == std::string::npos);
    const Record back = parse_record(line, 1);
    CHECK(back.same_measurement(r));
    CHECK(back.wall_ms == doctest::Approx(1.25));

    CHECK(unescape_value(escape_value("\x7f\xc3\xa9 =%"), 1) == "\x7f\xc3\xa9 =%");
}

TEST_CASE("record parse errors carry the line number") {
    const std::string ok = "experiment=x point=0 trial=0 seed=1 status=pass kind=hard reason= wall_ms=0.1";
    CHECK_NOTHROW(parse_record(ok, 1));
    const auto fails = [](const std::string& line) {
        try {
            parse_record(line, 7);
        } catch (const ParseError& e) {
            return e.line() == 7;
        }
        return false;
    };
    CHECK(fails(ok + " bogus=1"));
    CHECK(fails(ok + " point=2"));
    CHECK(fails("experiment=x point=0 trial=0 status=pass kind=hard"));
    CHECK(fails("experiment=x point=zero trial=0 seed=1 status=pass kind=hard"));
    CHECK(fails("experiment=x point=0 trial=0 seed=1 status=maybe kind=hard"));
    CHECK(fails("experiment=x%2 point=0 trial=0 seed=1 status=pass kind=hard"));
    CHECK(fails("experiment=x%zz point=0 trial=0 seed=1 status=pass kind=hard"));
    CHECK(fails("experiment point=0 trial=0 seed=1 status=pass kind=hard"));

    std::istringstream in("# header\n\n" + ok + "\n" + ok + " extra=1\n");
    try {
        read_records(in);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
    }
}

TEST_CASE("spec parsing") {
    const auto spec = spec_from("# comment\n"
                                "experiment = lemma33_Z_dominance\n"
                                "\n"
                                "F = C4, K2,3, K3\n"
                                "n = 8,10\n"
                                "trials = 5\n"
                                "seed = 99\n"
                                "output = out.rec\n");
    CHECK(spec.experiment == "lemma33_Z_dominance");
    CHECK(spec.grid.at("F") == std::vector<std::string>{"C4", "K2,3", "K3"});
    CHECK(spec.grid.at("n") == std::vector<std::string>{"8", "10"});
    CHECK(spec.trials == 5);
    CHECK(spec.seed == 99);
    CHECK(spec.output == "out.rec");

    CHECK_THROWS_AS(spec_from("experiment = nope\n"), InputError);
    CHECK_THROWS_AS(spec_from("n = 3\n"), ParseError);
    CHECK_THROWS_AS(spec_from("experiment = kruskal_katona\nn = 3\nn = 4\n"), ParseError);
    CHECK_THROWS_AS(spec_from("experiment = kruskal_katona\nn 3\n"), ParseError);
    CHECK_THROWS_AS(spec_from("experiment = kruskal_katona\ntrials = 0\n"), ParseError);
    CHECK_THROWS_AS(spec_from("experiment = kruskal_katona\nn = 3,,4\n"), ParseError);
    CHECK_THROWS_AS(spec_from("experiment = kruskal_katona\nseed = 1, 2\n"), ParseError);
}

TEST_CASE("grid points and seeds") {
    const auto spec = spec_from("experiment = kruskal_katona\nn = 6, 8, 10\nr = 3, 4\n");
    const auto points = grid_points(spec);
    REQUIRE(points.size() == 6);
    CHECK(points[0] == Params{{"n", "6"}, {"r", "3"}});
    CHECK(points[1] == Params{{"n", "6"}, {"r", "4"}});
    CHECK(points[5] == Params{{"n", "10"}, {"r", "4"}});

    std::set<std::uint64_t> seeds;
    for (std::size_t p = 0; p < 20; ++p) {
        for (std::size_t t = 0; t < 50; ++t) {
            seeds.insert(trial_seed(7, p, t));
        }
    }
    CHECK(seeds.size() == 1000);
    CHECK(trial_seed(7, 1, 2) == trial_seed(7, 1, 2));
    CHECK(trial_seed(7, 1, 2) != trial_seed(8, 1, 2));
}

TEST_CASE("LAB_SEED overrides the master seed") {
    auto spec = spec_from("experiment = kruskal_katona\nseed = 5\n");
    ::unsetenv("LAB_SEED");
    CHECK_FALSE(apply_seed_override(spec));
    CHECK(spec.seed == 5);
    ::setenv("LAB_SEED", "12345", 1);
    CHECK(apply_seed_override(spec));
    CHECK(spec.seed == 12345);
    ::setenv("LAB_SEED", "twelve", 1);
    CHECK_THROWS_AS(apply_seed_override(spec), InputError);
    ::unsetenv("LAB_SEED");
}

TEST_CASE("trial gating") {
    CHECK_THROWS_AS(run_trial("nope", {}, 1), InputError);
    // Unknown parameter names are spec errors.
    CHECK_THROWS_AS(run_trial("kruskal_katona", {{"bogus", "1"}}, 1), InputError);
    // A malformed value is a spec error too.
    CHECK_THROWS_AS(run_trial("kruskal_katona", {{"n", "ten"}}, 1), InputError);
    // Failed preconditions become skips with a reason.
    const auto gated = run_trial("lemma34_maximizer", {{"F", "C4"}, {"u", "500"}, {"m", "10"}, {"n", "100"}}, 1);
    CHECK(gated.status == Status::skip);
    CHECK_FALSE(gated.reason.empty());
    const auto ok = run_trial("lemma34_maximizer", {{"F", "C4"}, {"u", "50"}, {"m", "10"}, {"n", "100"}}, 1);
    CHECK(ok.status == Status::pass);
}

TEST_CASE("run, persist, recount and replay") {
    Scratch scratch;
    auto spec = spec_from("experiment = lemma33_Z_dominance\n"
                          "F = C4, K3\n"
                          "n = 8, 10\n"
                          "u = 3\n"
                          "trials = 6\n"
                          "seed = 4\n");
    spec.output = (scratch / "run.rec").string();
    spec.threads = 3;
    const RunOutput live = run_experiment(spec);
    CHECK(live.records.size() == 24);
    CHECK(live.summary.hard_failures == 0);
    CHECK(live.summary.pass + live.summary.fail + live.summary.skip == 24);

    const auto loaded = load_records(spec.output);
    REQUIRE(loaded.size() == live.records.size());
    for (std::size_t i = 0; i < loaded.size(); ++i) {
        CHECK(loaded[i].same_measurement(live.records[i]));
        CHECK(loaded[i].seed == trial_seed(4, loaded[i].point, loaded[i].trial));
    }

    const RunSummary recount = summarize_records(loaded);
    CHECK(recount.pass == live.summary.pass);
    CHECK(recount.fail == live.summary.fail);
    CHECK(recount.skip == live.summary.skip);
    CHECK(recount.pass_rate() == live.summary.pass_rate());
    REQUIRE(recount.points.size() == live.summary.points.size());
    for (std::size_t i = 0; i < recount.points.size(); ++i) {
        CHECK(recount.points[i].aggregates == live.summary.points[i].aggregates);
    }

    for (const Record& r : loaded) {
        CHECK(replay(r).identical);
    }
    Record tampered = loaded.front();
    tampered.outputs["z"] = "999999";
    CHECK_FALSE(replay(tampered).identical);

    // Thread count does not change the records.
    spec.output.clear();
    spec.threads = 1;
    const RunOutput serial = run_experiment(spec);
    REQUIRE(serial.records.size() == live.records.size());
    for (std::size_t i = 0; i < serial.records.size(); ++i) {
        CHECK(serial.records[i].same_measurement(live.records[i]));
    }

    // A second run appends.
    spec.output = (scratch / "run.rec").string();
    run_experiment(spec);
    CHECK(load_records(spec.output).size() == 48);
}

TEST_CASE("statistical aggregates") {
    auto spec = spec_from("experiment = lemma31_clique_count\ntrials = 40\nseed = 3\n");
    const RunOutput run = run_experiment(spec);
    REQUIRE(run.summary.points.size() == 1);
    const auto& agg = run.summary.points[0].aggregates;
    REQUIRE(agg.count("delta") == 1);
    const double delta = std::stod(agg.at("delta"));
    CHECK(delta > 0);
    CHECK(std::stod(agg.at("freq_above_delta")) > delta);

    const double ratios[] = {0.5, 0.5, 0.5, 0.5};
    CHECK(largest_passing_delta(ratios) == doctest::Approx(0.4999));
    CHECK(largest_passing_delta({}) == 0);
}

TEST_CASE("plot output") {
    Scratch scratch;
    const auto records = scratch / "b.rec";
    auto spec = spec_from("experiment = bounds_grid\n"
                          "formula = thm11\n"
                          "k = 2, 4, 8\n"
                          "n = 1000\n"
                          "r = 3\n"
                          "t = 2\n");
    spec.output = records.string();
    run_experiment(spec);
    // One record without the y key: it is skipped and counted.
    std::ofstream(records, std::ios::app)
        << "experiment=bounds_grid point=9 trial=0 seed=1 param.k=16 status=skip kind=hard reason=gated wall_ms=0\n";

    const auto res = emit_plot_data(records, "k", {"value", "log_first"}, scratch / "fig");
    CHECK(res.rows == 3);
    CHECK(res.skipped == 1);
    CHECK(fs::exists(res.table));
    CHECK(fs::exists(res.script));
    CHECK(fs::exists(res.notes));

    std::ifstream table(res.table);
    std::string header;
    std::getline(table, header);
    CHECK(header.front() == '#');
    std::size_t lines = 0;
    for (std::string line; std::getline(table, line);) {
        std::istringstream cols(line);
        double x = 0;
        double a = 0;
        double b = 0;
        CHECK(static_cast<bool>(cols >> x >> a >> b));
        ++lines;
    }
    CHECK(lines == 3);

    std::ifstream script(res.script);
    const std::string gp((std::istreambuf_iterator<char>(script)), std::istreambuf_iterator<char>());
    CHECK(gp.find(res.table.filename().string()) != std::string::npos);

    const auto empty = scratch / "empty.rec";
    write_file(empty, "");
    CHECK_THROWS_AS(emit_plot_data(empty, "k", {"value"}, scratch / "e"), InputError);
    try {
        emit_plot_data(records, "k", {"missing_key"}, scratch / "m");
        FAIL("expected an input error");
    } catch (const InputError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("missing_key") != std::string::npos);
        CHECK(msg.find("log_first") != std::string::npos);
    }
}

TEST_CASE("formula evaluation") {
    const auto kk = evaluate_formula("kk", {{"N", "20"}, {"r", "3"}, {"s", "2"}});
    CHECK(std::stod(kk.get("bound")) == doctest::Approx(15.0));

    const auto eskst = evaluate_formula("eskst", {{"s", "2"}, {"t", "3"}});
    CHECK(eskst.get("k_exponent") == "6");
    CHECK(eskst.get("n_exponent") == "2");

    const auto beta = evaluate_formula("beta", {{"F", "K2,3"}, {"r", "3"}});
    CHECK(beta.get("beta") == "3/8");

    CHECK_THROWS_AS(evaluate_formula("nope", {}), InputError);
    CHECK_THROWS_AS(evaluate_formula("kk", {{"N", "20"}, {"r", "3"}}), InputError);
    CHECK_THROWS_AS(evaluate_formula("kk", {{"N", "20"}, {"r", "3"}, {"s", "2"}, {"x", "1"}}), InputError);
    CHECK(formula_names().size() == 11);
}

TEST_CASE("argument helpers") {
    CHECK(parse_rational("3/2") == Rational(3, 2));
    CHECK(parse_rational("0.125") == Rational(1, 8));
    CHECK(parse_rational("-4") == Rational(-4));
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("abc"), InputError);
    CHECK(parse_assignments({"a=1", "b=x=y"}) == Params{{"a", "1"}, {"b", "x=y"}});
    CHECK_THROWS_AS(parse_assignments({"a"}), InputError);
    CHECK(format_real(0.1L) == "0.1");
    CHECK(std::stold(format_real(1.0L / 3)) == doctest::Approx(1.0 / 3));
}
