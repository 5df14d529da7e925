#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace cliquesat::lab {

using Params = std::map<std::string, std::string>;

enum class Status { pass, fail, skip };
// hard: a theorem-exact inequality; stat: a measurement judged in aggregate.
enum class Kind { hard, stat };

std::string to_string(Status status);
std::string to_string(Kind kind);
Status parse_status(std::string_view text);
Kind parse_kind(std::string_view text);

struct Record {
    std::string experiment;
    std::size_t point = 0;
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    Params params;
    Params outputs;
    Status status = Status::pass;
    Kind kind = Kind::hard;
    std::string reason;
    double wall_ms = 0;

    // Everything except the wall time.
    [[nodiscard]] bool same_measurement(const Record& other) const;
};

// One line, no trailing newline:
//   experiment=<s> point=<i> trial=<i> seed=<u64> param.<k>=<v>... out.<k>=<v>...
//   status=pass|fail|skip kind=hard|stat reason=<s> wall_ms=<real>
// Values are percent-escaped so they never contain space, '=', '%' or control bytes.
std::string format_record(const Record& record);

// Inverse of format_record. Throws ParseError (carrying line_no) on malformed input.
Record parse_record(std::string_view line, std::size_t line_no = 1);

// Skips blank lines and lines starting with '#'.
std::vector<Record> read_records(std::istream& in);
std::vector<Record> load_records(const std::filesystem::path& path);
void append_records(const std::filesystem::path& path, const std::vector<Record>& records);

std::string escape_value(std::string_view raw);
std::string unescape_value(std::string_view escaped, std::size_t line_no = 1);

} // namespace cliquesat::lab
