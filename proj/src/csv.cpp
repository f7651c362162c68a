#include "polarmem/csv.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "polarmem/errors.hpp"

namespace polarmem {

std::string format_number(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) return "0";  // avoids "-0"
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::size_t CsvTable::column(const std::string& name) const {
    for (std::size_t k = 0; k < header.size(); ++k)
        if (header[k] == name) return k;
    throw ValidationError("CSV has no column '" + name + "'");
}

namespace {

void write_line(std::ostream& out, const std::vector<std::string>& cells) {
    for (std::size_t k = 0; k < cells.size(); ++k) {
        if (cells[k].find_first_of(",\n") != std::string::npos) throw ValidationError("CSV cell contains a separator");
        if (k) out << ',';
        out << cells[k];
    }
    out << '\n';
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

}  // namespace

void write_csv(std::ostream& out, const CsvTable& table) {
    write_line(out, table.header);
    for (const auto& row : table.rows) {
        if (row.size() != table.header.size()) throw ValidationError("CSV row width differs from header");
        write_line(out, row);
    }
}

CsvTable read_csv(std::istream& in) {
    CsvTable table;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto cells = split(line);
        if (first) {
            table.header = std::move(cells);
            first = false;
        } else {
            if (cells.size() != table.header.size()) throw ValidationError("CSV row width differs from header");
            table.rows.push_back(std::move(cells));
        }
    }
    if (first) throw ValidationError("CSV input is empty");
    return table;
}

}  // namespace polarmem
