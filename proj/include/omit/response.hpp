#pragma once

#include "omit/mode_coupling.hpp"
#include "omit/steady_state.hpp"
#include "omit/types.hpp"

#include <array>
#include <span>
#include <vector>

namespace omit {

// Linearized coefficients at probe offset xi.
struct Susceptibilities {
    cplx chi_inv{}; // m_eff (omega_m^2 - xi^2 - i xi gamma_m)
    cplx f1{};      // gamma + i(Delta - g x) - i xi
    cplx f2{};      // gamma - i(Delta - g x) - i xi
    cplx h1{}, h2{}, h3{}, h4{}, h5{}, h6{}, h{};
};

Susceptibilities susceptibilities(const PhysicalParams& params, const CouplingState& coupling,
                                  const SteadyState& steady, double xi);

struct SidebandSolution {
    double xi = 0.0;
    cplx d_x{};             // m
    cplx d_cw_minus{};
    cplx d_cw_plus_conj{};
    cplx d_ccw_minus{};
    cplx d_ccw_plus_conj{};
    double residual = 0.0;  // ||A s - b|| / ||b|| of the assembled system
};

// The five linearized equations (mechanics + four sideband amplitudes),
// with delta x measured in units of sqrt(hbar / (m_eff omega_m)) and the
// mechanical row divided by m_eff omega_m x_ref, so every coefficient is a rate.
struct SidebandSystem {
    std::array<std::array<cplx, 5>, 5> matrix{};
    std::array<cplx, 5> rhs{};
    double x_ref = 0.0;
};

SidebandSystem assemble_sidebands(const PhysicalParams& params, const CouplingState& coupling,
                                  const SteadyState& steady, double xi, double e_probe);

// Direct LU solve of the assembled system. Throws NumericalError if the
// system is singular.
SidebandSolution solve_sidebands_direct(const PhysicalParams& params, const DriveParams& drive,
                                        const CouplingState& coupling, const SteadyState& steady, double xi);

enum class ClosedFormVariant {
    // delta a = s/h4 [1 + hbar g^2 chi h1 h3 / (f1 h3 h4 - hbar g^2 chi h)],
    // obtained by eliminating the ccw and delta x unknowns.
    kConsistent,
    // Same expression with hbar g^2 replaced by xi^2 and the f1 factor
    // dropped from the denominator. Kept to quantify that discrepancy.
    kXiSquaredPrefactor,
};

const char* to_string(ClosedFormVariant variant);

struct ClosedFormResult {
    cplx d_cw_minus{};
    bool pole = false; // h4 or the bracket denominator vanished
};

ClosedFormResult solve_sidebands_closed_form(const PhysicalParams& params, const DriveParams& drive,
                                             const CouplingState& coupling, const SteadyState& steady, double xi,
                                             ClosedFormVariant variant = ClosedFormVariant::kConsistent);

// t_p = 1 - sqrt(gamma_ex) delta a^-_cw / E_p at Delta_p (xi = Delta_p + Delta_a).
// Linear in the probe, so computed for a unit probe amplitude.
cplx probe_amplitude(const PhysicalParams& params, const DriveParams& drive, const CouplingState& coupling,
                     const SteadyState& steady, double delta_p);

struct GroupDelay {
    double value = 0.0;              // s
    double step = 0.0;               // final finite-difference step [rad/s]
    double achieved_tolerance = 0.0; // relative change between the two finest estimates
    bool converged = false;
    double min_abs_tp = 0.0;         // smallest |t_p| on the final stencil
};

// d arg(t_p) / d Delta_p by central differences of the wrapped phase,
// h = 1e-6 omega_m halved until two estimates agree to 1e-4 or h < 1e-10 omega_m.
GroupDelay group_delay(const PhysicalParams& params, const DriveParams& drive, const CouplingState& coupling,
                       const SteadyState& steady, double delta_p);

struct ResponsePoint {
    double delta_p = 0.0;
    cplx t_p{};
    double transmission = 0.0;
    double group_delay = 0.0;
    bool group_delay_converged = false;
};

ResponsePoint response_at(const PhysicalParams& params, const DriveParams& drive, const CouplingState& coupling,
                          const SteadyState& steady, double delta_p);

std::vector<ResponsePoint> transmission_spectrum(const PhysicalParams& params, const DriveParams& drive,
                                                 const CouplingState& coupling, const SteadyState& steady,
                                                 std::span<const double> delta_p_grid);

} // namespace omit
