// Minimal CSV writing and reading for the numeric tables emitted by the CLI.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polarmem {

/// "%.12g" formatting used for every number in machine-readable output.
std::string format_number(double v);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    /// Column index by name; throws ValidationError if absent.
    std::size_t column(const std::string& name) const;
};

void write_csv(std::ostream& out, const CsvTable& table);

/// Parses comma-separated lines without quoting. Throws ValidationError on ragged rows.
CsvTable read_csv(std::istream& in);

}  // namespace polarmem
