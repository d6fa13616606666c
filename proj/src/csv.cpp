#include "csv.h"

#include "subseaflush/errors.h"

#include <charconv>
#include <fmt/format.h>
#include <fstream>
#include <sstream>

namespace subseaflush::csv {

namespace {

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

} // namespace

int Table::column(const std::string& name) const
{
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) {
            return static_cast<int>(i);
        }
    }
    return -1;
}

std::vector<std::string> split_line(const std::string& line)
{
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) {
        cells.push_back(trim(cell));
    }
    if (!line.empty() && line.back() == ',') {
        cells.emplace_back();
    }
    return cells;
}

Table parse(const std::string& text, const std::string& source)
{
    Table table;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#') {
            continue;
        }
        auto cells = split_line(t);
        if (!have_header) {
            table.header = std::move(cells);
            have_header = true;
            continue;
        }
        if (cells.size() > table.header.size()) {
            throw IoError(fmt::format("{}:{}: expected at most {} columns, found {}", source,
                                      line_no, table.header.size(), cells.size()));
        }
        cells.resize(table.header.size());
        table.rows.push_back(std::move(cells));
        table.line_numbers.push_back(line_no);
    }
    if (!have_header) {
        throw IoError(fmt::format("{}: missing header line", source));
    }
    return table;
}

Table read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw IoError(fmt::format("cannot open '{}' for reading", path));
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path);
}

double to_double(const std::string& cell, const std::string& context)
{
    double value = 0.0;
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw ValidationError(fmt::format("{}: '{}' is not a number", context, cell));
    }
    return value;
}

} // namespace subseaflush::csv
