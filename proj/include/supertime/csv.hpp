#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "supertime/tabulated.hpp"

namespace supertime::csv {

/// RFC-4180 field quoting: fields containing a comma, quote, CR or LF are
/// wrapped in quotes with inner quotes doubled.
std::string quote(const std::string& field);

void write_row(std::ostream& out, const std::vector<std::string>& fields);

/// Shortest round-tripping decimal form of a double.
std::string format(double value);

/// Two numeric columns after a mandatory header row. Blank lines are skipped;
/// anything else that does not parse is reported with its line number.
std::vector<Sample> read_two_column(std::istream& in, const std::string& source = "<stream>");
std::vector<Sample> read_two_column(const std::filesystem::path& path);

}  // namespace supertime::csv
