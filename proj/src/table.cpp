#include "omit/table.hpp"

#include "json.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace omit {

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) {
        throw std::logic_error("row width does not match column count");
    }
    rows.push_back(std::move(row));
}

std::size_t Table::column_index(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (columns[i] == name) {
            return i;
        }
    }
    throw std::out_of_range("no column named " + name);
}

double Table::number(std::size_t row, const std::string& column) const {
    const Cell& cell = rows.at(row).at(column_index(column));
    if (const auto* d = std::get_if<double>(&cell)) {
        return *d;
    }
    if (const auto* i = std::get_if<std::int64_t>(&cell)) {
        return static_cast<double>(*i);
    }
    throw std::invalid_argument("column " + column + " is not numeric");
}

std::string format_number(double value) {
    if (std::isnan(value)) {
        return "nan";
    }
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc{}) {
        throw std::runtime_error("number formatting failed");
    }
    return std::string(buf.data(), ptr);
}

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

std::string quote(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) {
        return field;
    }
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

void write_csv(std::ostream& out, const Table& table) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        out << (i ? "," : "") << quote(table.columns[i]);
    }
    out << "\r\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << quote(cell_text(row[i]));
        }
        out << "\r\n";
    }
}

std::string to_csv(const Table& table) {
    std::ostringstream out;
    write_csv(out, table);
    return out.str();
}

std::string to_json(const Table& table) {
    auto records = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json record = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            const auto& name = table.columns[i];
            std::visit(
                [&](const auto& v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, double>) {
                        // JSON has no nan/inf; emit null so the mirror stays valid.
                        record[name] = std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json();
                    } else {
                        record[name] = v;
                    }
                },
                row[i]);
        }
        records.push_back(std::move(record));
    }
    return records.dump(1) + "\n";
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open " + path + " for writing");
    }
    out << contents;
    if (!out) {
        throw std::runtime_error("write to " + path + " failed");
    }
}

} // namespace omit
