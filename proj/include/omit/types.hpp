#pragma once

#include <complex>
#include <optional>

namespace omit {

using cplx = std::complex<double>;

inline constexpr double kHbar = 1.054571817e-34; // J*s, CODATA 2018

// Fixed resonator, mechanics and scatterer constants. SI throughout:
// angular frequencies and rates in rad/s, mass in kg, lengths in m.
struct PhysicalParams {
    double omega_a = 0.0;  // optical resonance
    double gamma_a = 0.0;  // intrinsic optical damping
    double gamma_ex = 0.0; // fiber-coupling loss
    double omega_m = 0.0;  // mechanical frequency
    double gamma_m = 0.0;  // mechanical damping
    double m_eff = 0.0;
    double radius = 0.0;
    int azimuthal_m = 1;
    cplx eps1{};           // half-splitting of scatterer 1
    cplx eps2{};           // half-splitting of scatterer 2
    double hbar = kHbar;

    // Replaces omega_a / radius when set. Only used for limiting-case
    // studies (g = 0); never read from a config document.
    std::optional<double> g_override;

    // Optomechanical coupling g = omega_a / R [rad/(s*m)].
    double g() const { return g_override ? *g_override : omega_a / radius; }

    // Throws ConfigError naming the first violated invariant.
    void validate() const;
};

// Pump/probe drive. `xi` is the probe-pump offset used internally; the
// plotted probe detuning from the cavity is delta_p() = xi - delta_a.
struct DriveParams {
    double p_pump = 0.0;  // W
    double p_probe = 0.0; // W
    double delta_a = 0.0; // omega_a - omega_l
    double xi = 0.0;      // omega_p - omega_l

    double delta_p() const { return xi - delta_a; }
    void set_delta_p(double delta_p) { xi = delta_p + delta_a; }

    void validate() const;
};

// Field amplitudes in sqrt(photons/s).
struct Amplitudes {
    double e_pump = 0.0;
    double e_probe = 0.0;
};

// E = sqrt(P / (hbar * omega)) with omega_l = omega_a - delta_a and
// omega_p = omega_l + xi. Throws InvalidDrive for nonpositive omega_l or
// omega_p, or negative powers.
Amplitudes amplitudes_from_power(const PhysicalParams& params, const DriveParams& drive);

} // namespace omit
