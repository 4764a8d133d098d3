#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace radr::csv {

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::optional<std::size_t> column(const std::string& name) const;
};

// Reads a whole CSV file with a mandatory header row. Handles quoted fields
// (embedded commas, doubled quotes); embedded newlines are not supported.
Table read_file(const std::string& path);

std::vector<std::string> split_line(const std::string& line);

// Shortest representation that round-trips exactly through a double parse.
std::string format_double(double v);

std::optional<double> parse_double(const std::string& s);
std::optional<std::int64_t> parse_int(const std::string& s);

}  // namespace radr::csv
