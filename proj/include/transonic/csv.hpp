#pragma once

#include <string>
#include <vector>

namespace transonic {

// Deterministic CSV emission: header line first, 17-significant-digit
// round-trip-exact numbers, '.' decimal separator, '\n' line endings.
// Identical data always produces byte-identical files.

std::string format_double(double value);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

std::string to_csv(const CsvTable& table);

/// Write the table to path (parent directories are created). Throws
/// std::runtime_error when the file cannot be written.
void write_csv(const std::string& path, const CsvTable& table);

}  // namespace transonic
