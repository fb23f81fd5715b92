#pragma once

#include <stdexcept>
#include <string>

namespace omit {

// Raised by config loading and parameter validation. `field()` names the
// offending key so the CLI can report it verbatim.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, const std::string& what)
        : std::runtime_error(field + ": " + what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

// Drive frequencies that make the field amplitudes meaningless
// (nonpositive pump or probe angular frequency).
class InvalidDrive : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Solver failures: singular linear systems, root finder non-convergence,
// missing real steady-state roots.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace omit
