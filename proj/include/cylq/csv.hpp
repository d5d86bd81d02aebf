#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cylq/errors.hpp"

namespace cylq {

/// Full-precision decimal formatting: 17 significant digits round-trip
/// any double exactly.
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// Writes a CSV table: '#'-prefixed comment lines, a '#'-prefixed header
/// naming the columns in order, then comma-separated full-precision rows.
inline std::string csv_to_string(const std::vector<std::string>& comments,
                                 const std::vector<std::string>& columns,
                                 const std::vector<std::vector<double>>& rows) {
  std::ostringstream out;
  for (const auto& c : comments) out << "# " << c << "\n";
  out << "#";
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : " ") << columns[i];
  out << "\n";
  for (const auto& row : rows) {
    if (row.size() != columns.size()) throw validation_error("csv row width mismatch");
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ",";
      out << format_double(row[i]);
    }
    out << "\n";
  }
  return out.str();
}

inline void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw validation_error("cannot write file: " + path);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw validation_error("write failed: " + path);
}

inline void write_csv(const std::string& path, const std::vector<std::string>& comments,
                      const std::vector<std::string>& columns,
                      const std::vector<std::vector<double>>& rows) {
  write_file(path, csv_to_string(comments, columns, rows));
}

/// Parses the numeric rows back (comments skipped). Used by tests to
/// confirm the round trip recovers the arrays exactly.
inline std::vector<std::vector<double>> csv_parse(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<double> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw validation_error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// FNV-1a 64-bit checksum, used in run manifests.
inline std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace cylq
