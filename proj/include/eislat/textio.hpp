// Text format for vectors and matrices: one row per line, entries "a,b" for a+b*w.
// Blank lines and lines starting with '#' are skipped.
#pragma once

#include "eislat/matrix.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace eislat {

EVec parse_row(const std::string& line);
std::vector<EVec> read_rows(std::istream& in);
std::vector<EVec> read_rows_file(const std::string& path);  // throws std::runtime_error on IO failure
std::string format_row(const EVec& v);
void write_rows(std::ostream& out, const std::vector<EVec>& rows);

// Data directory: $EISLAT_DATA if set, else the compiled-in default.
std::string data_dir();
std::string data_path(const std::string& name);

}  // namespace eislat
