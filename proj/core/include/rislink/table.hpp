#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace rislink {

using Cell = std::variant<double, std::int64_t, std::string>;

/// Column-ordered result table shared by every experiment and CLI report.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    std::size_t column_index(std::string_view name) const;  // throws InvalidArgument
    double number(std::size_t row, std::string_view column) const;
    const Cell& at(std::size_t row, std::string_view column) const;
};

enum class TableFormat { csv, json };

TableFormat parse_table_format(std::string_view name);

/// Shortest round-trip decimal, independent of the C locale.
std::string format_number(double value);

/// RFC 4180: header line, CRLF-free (LF) records, fields quoted only when needed.
void write_csv(std::ostream& out, const Table& table);
/// Array of row objects with keys in column order.
void write_json(std::ostream& out, const Table& table);
void write_table(std::ostream& out, const Table& table, TableFormat format);

}  // namespace rislink
