#pragma once

// Independent computation routes used to cross-check the engine. None of
// these share code with the production path they check.

#include "omit/mode_coupling.hpp"
#include "omit/steady_state.hpp"
#include "omit/types.hpp"

#include <utility>

namespace omit::oracle {

// Eigenvalues of [[w, J1], [J2, w]], w = omega_a - i gamma_a + eps1 + eps2,
// from a generic dense complex eigensolver. Sorted by real part, descending.
std::pair<cplx, cplx> dense_eigenfrequencies(const PhysicalParams& params, double beta);

// Same matrix with omega_a dropped (it only shifts both eigenvalues).
std::pair<cplx, cplx> dense_splitting_eigenvalues(const PhysicalParams& params, double beta);

// argmin over `samples` uniform beta in [lo, hi) of |delta_omega|, from
// the scattering rates written out directly.
double dense_scan_minimum(const PhysicalParams& params, double lo, double hi, long samples);

struct FixedPointResult {
    double x_bar = 0.0;
    int iterations = 0;
    bool converged = false;
};

// Damped iteration x <- (1 - w) x + w F(x) of the displacement balance from
// x = 0, stopping when the relative change drops below `tol`.
FixedPointResult fixed_point_steady(const PhysicalParams& params, const DriveParams& drive,
                                    const CouplingState& coupling, double tol = 1e-12, double damping = 0.5);

// Largest relative mismatch between (x, a_cw, a_ccw) and the right-hand
// sides of the mean-field equations evaluated at them.
double steady_residual(const PhysicalParams& params, const DriveParams& drive, const CouplingState& coupling,
                       const SteadyState& steady);

// |1 - gamma_ex / (gamma + i(Delta - xi))|^2 for a bare cavity.
double empty_cavity_transmission(double gamma, double gamma_ex, double delta, double xi);

struct Coalescence {
    double sigma_min = 0.0;   // second singular value of (M - lambda I) / ||M||
    double sigma_max = 0.0;   // first singular value of (M - lambda I) / ||M||
    double alignment = 0.0;   // |<v1, v2>| of the normalized eigenvectors
};

// Rank structure of the 2x2 coupling matrix M at beta, lambda its first
// eigenvalue. A coalescence has sigma_min ~ 0 with sigma_max > 0 (rank
// exactly one, one eigenvector) and alignment ~ 1.
Coalescence coalescence_measure(const PhysicalParams& params, double beta);

} // namespace omit::oracle
