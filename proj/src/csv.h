#pragma once

// Minimal reader for the unquoted, comma-separated tables used here.

#include <string>
#include <vector>

namespace subseaflush::csv {

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    // 1-based source line of each row, for diagnostics.
    std::vector<int> line_numbers;

    int column(const std::string& name) const;
};

std::vector<std::string> split_line(const std::string& line);

// Skips blank lines and lines starting with '#'. Throws IoError.
Table read_file(const std::string& path);
Table parse(const std::string& text, const std::string& source);

double to_double(const std::string& cell, const std::string& context);

} // namespace subseaflush::csv
