#pragma once

#include <string>
#include <vector>

namespace houseod::csv {

/// Round-trip formatting for doubles (17 significant digits).
std::string fmt(double v);

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::size_t col(const std::string& name) const;
    double num(std::size_t row, const std::string& name) const;
    const std::string& cell(std::size_t row, const std::string& name) const;
};

void write_table(const std::string& path, const Table& table);
Table read_table(const std::string& path);

}  // namespace houseod::csv
