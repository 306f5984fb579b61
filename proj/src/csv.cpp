#include "shbeat/csv.hpp"

#include <charconv>
#include <cstdio>
#include <ostream>
#include <system_error>

#include "shbeat/errors.hpp"

namespace shbeat {

std::string format_double_full(double value) {
    char buffer[64];
    const std::to_chars_result result =
        std::to_chars(buffer, buffer + sizeof(buffer), value);
    if (result.ec != std::errc{}) {
        throw NumericalFailure("failed to format a double");
    }
    return std::string(buffer, result.ptr);
}

std::string format_double(double value, int significant_digits) {
    if (significant_digits < 1 || significant_digits > 17) {
        throw UsageError("significant digits must lie in [1, 17]");
    }
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.*g", significant_digits, value);
    return buffer;
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i != 0) {
            out << ',';
        }
        out << cells[i];
    }
    out << '\n';
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            cells.push_back(line.substr(start));
            return cells;
        }
        cells.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

} // namespace shbeat
