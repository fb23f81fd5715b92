#include "omit/types.hpp"

#include "omit/errors.hpp"
#include "omit/table.hpp"

#include <cmath>
#include <string>

namespace omit {

namespace {

void require_positive(double value, const char* field) {
    if (!std::isfinite(value) || !(value > 0.0)) {
        throw ConfigError(field, "must be finite and > 0 (got " + format_number(value) + ")");
    }
}

void require_finite(double value, const char* field) {
    if (!std::isfinite(value)) {
        throw ConfigError(field, "must be finite");
    }
}

} // namespace

void PhysicalParams::validate() const {
    require_finite(omega_a, "omega_a_hz");
    require_positive(gamma_a, "gamma_a_hz");
    require_positive(gamma_ex, "gamma_ex_hz");
    require_positive(omega_m, "omega_m_hz");
    require_positive(gamma_m, "gamma_m_hz");
    require_positive(m_eff, "m_eff_kg");
    require_positive(radius, "radius_m");
    require_positive(hbar, "hbar");
    if (azimuthal_m < 1) {
        throw ConfigError("azimuthal_m", "must be an integer >= 1");
    }
    for (auto [eps, name] : {std::pair{eps1, "eps1_over_gamma_a"}, std::pair{eps2, "eps2_over_gamma_a"}}) {
        if (!std::isfinite(eps.real()) || !std::isfinite(eps.imag())) {
            throw ConfigError(name, "must be finite");
        }
        if (eps.imag() > 0.0) {
            throw ConfigError(name, "imaginary part must be <= 0 (scatterers add loss, not gain)");
        }
    }
    if (g_override) {
        if (!std::isfinite(*g_override) || *g_override < 0.0) {
            throw ConfigError("g_override", "must be finite and >= 0");
        }
    } else {
        require_positive(omega_a / radius, "omega_a_hz");
    }
}

void DriveParams::validate() const {
    if (!std::isfinite(p_pump) || p_pump < 0.0) {
        throw ConfigError("p_pump_w", "must be finite and >= 0");
    }
    if (!std::isfinite(p_probe) || p_probe < 0.0) {
        throw ConfigError("p_probe_w", "must be finite and >= 0");
    }
    require_finite(delta_a, "delta_a_over_omega_m");
    require_finite(xi, "xi");
}

Amplitudes amplitudes_from_power(const PhysicalParams& params, const DriveParams& drive) {
    const double omega_l = params.omega_a - drive.delta_a;
    const double omega_p = omega_l + drive.xi;
    if (!(omega_l > 0.0)) {
        throw InvalidDrive("pump angular frequency omega_a - delta_a must be > 0");
    }
    if (!(omega_p > 0.0)) {
        throw InvalidDrive("probe angular frequency omega_l + xi must be > 0");
    }
    if (drive.p_pump < 0.0 || drive.p_probe < 0.0) {
        throw InvalidDrive("drive powers must be >= 0");
    }
    return Amplitudes{std::sqrt(drive.p_pump / (params.hbar * omega_l)),
                      std::sqrt(drive.p_probe / (params.hbar * omega_p))};
}

} // namespace omit
