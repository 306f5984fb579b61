#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shbeat {

/// Shortest decimal form that round-trips to the same double.
std::string format_double_full(double value);

/// %g with the given number of significant digits.
std::string format_double(double value, int significant_digits);

/// Join cells with commas and terminate the line.
void write_csv_row(std::ostream& out, const std::vector<std::string>& cells);

/// Split on commas; no quoting, fields are plain numbers or labels here.
std::vector<std::string> split_csv_line(const std::string& line);

} // namespace shbeat
