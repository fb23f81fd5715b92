#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace omit {

using Cell = std::variant<double, std::int64_t, std::string>;

// Plot-ready long-form dataset. Every CSV/JSON output of the engine goes
// through this type so that both mirrors share field names and formatting.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
    std::size_t column_index(const std::string& name) const;
    double number(std::size_t row, const std::string& column) const;
};

// Shortest round-trip decimal form, '.' separator, independent of locale.
// Non-finite values print as nan/inf/-inf.
std::string format_number(double value);

// RFC-4180: fields with comma, quote or newline are quoted, quotes doubled.
void write_csv(std::ostream& out, const Table& table);
std::string to_csv(const Table& table);

// Array of objects keyed by column name.
std::string to_json(const Table& table);

void write_file(const std::string& path, const std::string& contents);

} // namespace omit
