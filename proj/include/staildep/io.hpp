#pragma once

#include <string>
#include <vector>

#include "staildep/common.hpp"

namespace staildep {

// Minimal CSV reader: comma-separated, no quoting. Empty fields preserved.
// Skips fully empty lines; strips trailing '\r'.
std::vector<std::vector<std::string>> read_csv_rows(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// Round-trip formatting for doubles ("%.17g").
std::string fmt_double(double v);

// Matrix as CSV without header.
void write_matrix_csv(const std::string& path, const Matrix& m);
Matrix read_matrix_csv(const std::string& path);

}  // namespace staildep
