#pragma once

#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mgpe::cli {

/// 17 significant digits, '.' decimal separator, independent of the global locale.
std::string format_number(double value);

/// Shortest string that round-trips to the same double; used in headers and column names.
std::string format_shortest(double value);

/// Comma-separated rows with '\n' line endings. Comment lines start with '#'.
class CsvWriter {
public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}

    void comment(std::string_view text);
    void header(std::span<const std::string> columns);
    void row(std::span<const double> values);

private:
    std::ostream& out_;
};

} // namespace mgpe::cli
