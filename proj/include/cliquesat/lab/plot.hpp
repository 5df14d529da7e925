#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

namespace cliquesat::lab {

struct PlotResult {
    std::filesystem::path table;   // <prefix>.dat
    std::filesystem::path script;  // <prefix>.gp
    std::filesystem::path notes;   // <prefix>.txt
    std::size_t rows = 0;
    std::size_t skipped = 0;       // records missing a key or holding a non-numeric value
};

// Writes a whitespace-delimited table (x then one column per y key, '#' header), a
// gnuplot script plotting each y column against x, and a plain-text sidecar that
// describes the columns for any other plotting tool. A key matches a parameter or an
// output of that name; "param.<k>" / "out.<k>" pick one explicitly, and seed, trial,
// point and wall_ms are also available. Throws InputError on an empty record file or
// when a key appears in no record (the message lists the available keys).
PlotResult emit_plot_data(const std::filesystem::path& records, const std::string& x_key,
                          const std::vector<std::string>& y_keys, const std::filesystem::path& prefix);

} // namespace cliquesat::lab
