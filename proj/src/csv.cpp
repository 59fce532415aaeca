#include "supertime/csv.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include "supertime/errors.hpp"

namespace supertime::csv {
namespace {

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\"");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\"");
  return s.substr(first, last - first + 1);
}

bool parse_double(const std::string& text, double& out) {
  const std::string t = trim(text);
  if (t.empty()) return false;
  const auto* end = t.data() + t.size();
  const auto [ptr, ec] = std::from_chars(t.data(), end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

std::string quote(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    out << quote(fields[i]);
  }
  out << "\r\n";
}

std::string format(double value) {
  if (value == 0.0) value = 0.0;
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general);
  if (ec != std::errc()) throw NumericalError("cannot format number");
  return std::string(buf, ptr);
}

std::vector<Sample> read_two_column(std::istream& in, const std::string& source) {
  std::vector<Sample> samples;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    if (!header_seen) {
      header_seen = true;
      double probe = 0.0;
      const auto comma = line.find(',');
      if (comma != std::string::npos && parse_double(line.substr(0, comma), probe)) {
        throw InvalidInput(source + ":" + std::to_string(line_no) +
                           ": header row required before data");
      }
      continue;
    }
    const auto comma = line.find(',');
    Sample s{};
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos ||
        !parse_double(line.substr(0, comma), s.t) || !parse_double(line.substr(comma + 1), s.y)) {
      throw InvalidInput(source + ":" + std::to_string(line_no) +
                         ": expected two numeric columns, got '" + line + "'");
    }
    samples.push_back(s);
  }
  if (!header_seen) throw InvalidInput(source + ": empty file, header row required");
  return samples;
}

std::vector<Sample> read_two_column(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  return read_two_column(in, path.string());
}

}  // namespace supertime::csv
