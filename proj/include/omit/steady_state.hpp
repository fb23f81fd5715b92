#pragma once

#include "omit/mode_coupling.hpp"
#include "omit/types.hpp"

#include <span>
#include <vector>

namespace omit {

struct SteadyState {
    double x_bar = 0.0;  // m
    cplx a_cw{};         // |a|^2 = photon number
    cplx a_ccw{};
    double eta = 0.0;    // |a_ccw|^2 / |a_cw|^2
    double n_bar = 0.0;  // |a_cw|^2 + |a_ccw|^2
    int branch_count = 0;
    std::vector<double> branches; // every real x_bar solution, ascending

    // Pump-shifted detuning Delta - g x_bar.
    double shifted_detuning(const PhysicalParams& params, const CouplingState& coupling) const {
        return coupling.delta_eff - params.g() * x_bar;
    }
};

// Mean fields for a given displacement, from the linear optical equations:
// a_cw = sqrt(gex) E K / (K^2 + J1 J2), a_ccw = -i sqrt(gex) E J2 / (K^2 + J1 J2),
// K = gamma + i(Delta - g x).
void fields_at(const PhysicalParams& params, const CouplingState& coupling, double e_pump, double x_bar,
               cplx& a_cw, cplx& a_ccw);

// Radiation-pressure balance x = hbar g n(x) / (m_eff omega_m^2).
double displacement_map(const PhysicalParams& params, const CouplingState& coupling, double e_pump, double x_bar);

// Solves the force balance as a monic quintic in t = g x / gamma. All real
// roots are kept in `branches`; the returned solution is the branch
// connected to the undriven state (smallest |x_bar|).
SteadyState solve_steady(const PhysicalParams& params, const DriveParams& drive, const CouplingState& coupling);

struct EtaPoint {
    double beta = 0.0;
    double eta = 0.0;
    double x_bar = 0.0;
    double n_bar = 0.0;
    int branch_count = 0;
};

std::vector<EtaPoint> eta_curve(const PhysicalParams& params, const DriveParams& drive,
                                std::span<const double> beta_grid);

} // namespace omit
