#pragma once

#include <string>
#include <vector>

namespace garchmimic {

// 12 significant digits, '.' decimal separator; used for all CSV output.
std::string format_number(double x);

// Writes content to path, or to stdout when path is "-".
void write_text_file(const std::string& path, const std::string& content);

// Reads one numeric column from a CSV file, skipping '#' metadata lines and
// an optional header row.
std::vector<double> read_numeric_column(const std::string& path, std::size_t column = 0);

}  // namespace garchmimic
