#include "cliquesat/lab/plot.hpp"

#include "cliquesat/errors.hpp"
#include "cliquesat/lab/records.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <set>

namespace cliquesat::lab {

namespace {

std::optional<std::string> lookup(const Record& r, const std::string& key) {
    const auto find_in = [](const Params& map, const std::string& k) -> std::optional<std::string> {
        const auto it = map.find(k);
        return it == map.end() ? std::nullopt : std::optional<std::string>(it->second);
    };
    if (key.rfind("param.", 0) == 0) {
        return find_in(r.params, key.substr(6));
    }
    if (key.rfind("out.", 0) == 0) {
        return find_in(r.outputs, key.substr(4));
    }
    if (key == "seed") {
        return std::to_string(r.seed);
    }
    if (key == "trial") {
        return std::to_string(r.trial);
    }
    if (key == "point") {
        return std::to_string(r.point);
    }
    if (key == "wall_ms") {
        return std::to_string(r.wall_ms);
    }
    if (auto v = find_in(r.outputs, key)) {
        return v;
    }
    return find_in(r.params, key);
}

bool numeric(const std::string& s) {
    if (s.empty()) {
        return false;
    }
    char* end = nullptr;
    (void)std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size();
}

} // namespace

PlotResult emit_plot_data(const std::filesystem::path& records_path, const std::string& x_key,
                          const std::vector<std::string>& y_keys, const std::filesystem::path& prefix) {
    const auto records = load_records(records_path);
    if (records.empty()) {
        throw InputError("record file " + records_path.string() + " is empty");
    }
    if (y_keys.empty()) {
        throw InputError("plot needs at least one y key");
    }
    std::vector<std::string> keys{x_key};
    keys.insert(keys.end(), y_keys.begin(), y_keys.end());
    std::set<std::string> available{"seed", "trial", "point", "wall_ms"};
    for (const Record& r : records) {
        for (const auto& [k, v] : r.params) {
            available.insert("param." + k);
        }
        for (const auto& [k, v] : r.outputs) {
            available.insert("out." + k);
        }
    }
    for (const std::string& key : keys) {
        const bool present =
            std::any_of(records.begin(), records.end(), [&](const Record& r) { return lookup(r, key).has_value(); });
        if (!present) {
            std::string list;
            for (const auto& a : available) {
                list += (list.empty() ? "" : ", ") + a;
            }
            throw InputError("key '" + key + "' appears in no record; available: " + list);
        }
    }

    PlotResult result;
    result.table = prefix.string() + ".dat";
    result.script = prefix.string() + ".gp";
    result.notes = prefix.string() + ".txt";
    std::ofstream table(result.table);
    if (!table) {
        throw InputError("cannot write " + result.table.string());
    }
    table << '#';
    for (const std::string& key : keys) {
        table << ' ' << key;
    }
    table << '\n';
    for (const Record& r : records) {
        std::vector<std::string> row;
        bool ok = true;
        for (const std::string& key : keys) {
            const auto v = lookup(r, key);
            if (!v || !numeric(*v)) {
                ok = false;
                break;
            }
            row.push_back(*v);
        }
        if (!ok) {
            ++result.skipped;
            continue;
        }
        for (std::size_t i = 0; i < row.size(); ++i) {
            table << (i == 0 ? "" : " ") << row[i];
        }
        table << '\n';
        ++result.rows;
    }

    std::ofstream script(result.script);
    script << "set xlabel '" << x_key << "'\n"
           << "set key left top\n"
           << "plot ";
    for (std::size_t i = 0; i < y_keys.size(); ++i) {
        script << (i == 0 ? "" : ", \\\n     ") << "'" << result.table.filename().string() << "' using 1:" << i + 2
               << " with points title '" << y_keys[i] << "'";
    }
    script << '\n';

    std::ofstream notes(result.notes);
    notes << "table: " << result.table.filename().string() << '\n'
          << "source: " << records_path.string() << '\n'
          << "rows: " << result.rows << ", skipped records: " << result.skipped << '\n'
          << "column 1: " << x_key << '\n';
    for (std::size_t i = 0; i < y_keys.size(); ++i) {
        notes << "column " << i + 2 << ": " << y_keys[i] << '\n';
    }
    notes << "Columns are separated by single spaces; lines starting with '#' are headers.\n"
          << "gnuplot: gnuplot -p " << result.script.filename().string() << '\n'
          << "Any other tool: read the table as whitespace-delimited numbers and plot column 1\n"
          << "against each later column.\n";
    return result;
}

} // namespace cliquesat::lab
