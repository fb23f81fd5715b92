#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace omit {

// Inclusive linear grid written as `start:stop:count`.
struct Range {
    double start = 0.0;
    double stop = 0.0;
    int count = 2;

    std::vector<double> values() const;
    std::string to_string() const;

    // Throws std::invalid_argument on malformed text or count < 1.
    static Range parse(std::string_view text);

    friend bool operator==(const Range&, const Range&) = default;
};

std::vector<double> linspace(double start, double stop, int count);

} // namespace omit
