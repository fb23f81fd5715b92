#include "omit/range.hpp"

#include "omit/table.hpp"

#include <charconv>
#include <stdexcept>

namespace omit {

namespace {

double parse_double(std::string_view text, std::string_view whole) {
    double value = 0.0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty()) {
        throw std::invalid_argument("bad number '" + std::string(text) + "' in range '" + std::string(whole) + "'");
    }
    return value;
}

} // namespace

std::vector<double> linspace(double start, double stop, int count) {
    std::vector<double> out;
    if (count <= 0) {
        return out;
    }
    out.reserve(static_cast<std::size_t>(count));
    if (count == 1) {
        out.push_back(start);
        return out;
    }
    const double step = (stop - start) / static_cast<double>(count - 1);
    for (int i = 0; i < count; ++i) {
        out.push_back(i == count - 1 ? stop : start + step * i);
    }
    return out;
}

std::vector<double> Range::values() const { return linspace(start, stop, count); }

std::string Range::to_string() const {
    return format_number(start) + ":" + format_number(stop) + ":" + std::to_string(count);
}

Range Range::parse(std::string_view text) {
    const auto first = text.find(':');
    const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
    if (second == std::string_view::npos || text.find(':', second + 1) != std::string_view::npos) {
        throw std::invalid_argument("range must be start:stop:count, got '" + std::string(text) + "'");
    }
    Range r;
    r.start = parse_double(text.substr(0, first), text);
    r.stop = parse_double(text.substr(first + 1, second - first - 1), text);
    const auto count_text = text.substr(second + 1);
    const auto* end = count_text.data() + count_text.size();
    auto [ptr, ec] = std::from_chars(count_text.data(), end, r.count);
    if (ec != std::errc{} || ptr != end || count_text.empty() || r.count < 1) {
        throw std::invalid_argument("range count must be a positive integer, got '" + std::string(text) + "'");
    }
    return r;
}

} // namespace omit
