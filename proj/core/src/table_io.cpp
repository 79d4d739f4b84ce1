#include "rislink/table.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <type_traits>

#include "json.hpp"

#include "rislink/errors.hpp"

namespace rislink {
namespace {

std::string cell_text(const Cell& cell) {
    if (const auto* d = std::get_if<double>(&cell)) {
        return format_number(*d);
    }
    if (const auto* i = std::get_if<std::int64_t>(&cell)) {
        return std::to_string(*i);
    }
    return std::get<std::string>(cell);
}

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\r\n") == std::string::npos) {
        return text;
    }
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') {
            quoted += '"';
        }
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

}  // namespace

std::size_t Table::column_index(std::string_view name) const {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (columns[i] == name) {
            return i;
        }
    }
    throw InvalidArgument("no column named '" + std::string(name) + "'");
}

const Cell& Table::at(std::size_t row, std::string_view column) const {
    return rows.at(row).at(column_index(column));
}

double Table::number(std::size_t row, std::string_view column) const {
    const Cell& c = at(row, column);
    if (const auto* d = std::get_if<double>(&c)) {
        return *d;
    }
    if (const auto* i = std::get_if<std::int64_t>(&c)) {
        return static_cast<double>(*i);
    }
    throw InvalidArgument("column '" + std::string(column) + "' is not numeric");
}

TableFormat parse_table_format(std::string_view name) {
    if (name == "csv") return TableFormat::csv;
    if (name == "json") return TableFormat::json;
    throw InvalidArgument("unknown output format '" + std::string(name) + "' (expected csv|json)");
}

std::string format_number(double value) {
    if (!std::isfinite(value)) {
        throw InvalidArgument("refusing to emit a non-finite value");
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

void write_csv(std::ostream& out, const Table& table) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        out << (i ? "," : "") << csv_field(table.columns[i]);
    }
    out << '\n';
    for (const auto& row : table.rows) {
        if (row.size() != table.columns.size()) {
            throw InvalidArgument("row width does not match the header");
        }
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << csv_field(cell_text(row[i]));
        }
        out << '\n';
    }
}

void write_json(std::ostream& out, const Table& table) {
    auto doc = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        if (row.size() != table.columns.size()) {
            throw InvalidArgument("row width does not match the header");
        }
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::visit(
                [&](const auto& v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, double>) {
                        if (!std::isfinite(v)) {
                            throw InvalidArgument("refusing to emit a non-finite value");
                        }
                    }
                    obj[table.columns[i]] = v;
                },
                row[i]);
        }
        doc.push_back(std::move(obj));
    }
    out << doc.dump(2) << '\n';
}

void write_table(std::ostream& out, const Table& table, TableFormat format) {
    if (format == TableFormat::json) {
        write_json(out, table);
    } else {
        write_csv(out, table);
    }
}

}  // namespace rislink
