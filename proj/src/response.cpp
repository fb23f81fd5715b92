#include "omit/response.hpp"

#include "omit/errors.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>

namespace omit {

namespace {

constexpr cplx kI{0.0, 1.0};

using Matrix5 = Eigen::Matrix<cplx, 5, 5>;
using Vector5 = Eigen::Matrix<cplx, 5, 1>;


// LU with one step of iterative refinement; reports ||A x - b|| / ||b||.
Vector5 solve_system(const SidebandSystem& sys, double& residual) {
    Matrix5 a;
    Vector5 rhs;
    for (int r = 0; r < 5; ++r) {
        for (int c = 0; c < 5; ++c) {
            a(r, c) = sys.matrix[r][c];
        }
        rhs(r) = sys.rhs[r];
    }
    Eigen::PartialPivLU<Matrix5> lu(a);
    if (!(lu.rcond() > 1e-300)) {
        throw NumericalError("sideband system is singular");
    }
    Vector5 x = lu.solve(rhs);
    x += lu.solve(rhs - a * x);
    if (!x.allFinite()) {
        throw NumericalError("sideband solve produced non-finite values");
    }
    const double rhs_norm = rhs.norm();
    const double res = (a * x - rhs).norm();
    residual = rhs_norm > 0.0 ? res / rhs_norm : res;
    return x;
}

} // namespace

Susceptibilities susceptibilities(const PhysicalParams& params, const CouplingState& coupling,
                                  const SteadyState& steady, double xi) {
    Susceptibilities s;
    const double u = steady.shifted_detuning(params, coupling);
    const double gamma = coupling.gamma_tot;
    const cplx j1 = coupling.j1;
    const cplx j2 = coupling.j2;
    const cplx a = steady.a_cw;
    const cplx b = steady.a_ccw;
    const double n = steady.n_bar;

    s.chi_inv = params.m_eff * cplx(params.omega_m * params.omega_m - xi * xi, -xi * params.gamma_m);
    s.f1 = cplx(gamma, u - xi);
    s.f2 = cplx(gamma, -u - xi);
    const cplx f1 = s.f1;
    const cplx f2 = s.f2;

    const cplx source = std::conj(a) * f1 - kI * std::conj(b) * j2;
    s.h1 = (kI * a + j1 * b / f1) * source;
    s.h2 = (kI * b * f1 + j2 * a) * source;
    s.h3 = f2 * f2 + std::conj(j1) * std::conj(j2);
    s.h4 = f1 + j1 * j2 / f1;
    s.h5 = std::conj(j1) * std::conj(b) * a + std::conj(j2) * std::conj(a) * b - kI * n * f2;
    s.h6 = j2 * std::conj(b) * a + j1 * std::conj(a) * b + kI * n * f1;
    s.h = s.h3 * s.h6 + f1 * s.h4 * s.h5;
    return s;
}

SidebandSystem assemble_sidebands(const PhysicalParams& params, const CouplingState& coupling,
                                  const SteadyState& steady, double xi, double e_probe) {
    SidebandSystem sys;
    sys.x_ref = std::sqrt(params.hbar / (params.m_eff * params.omega_m));
    const double gx = params.g() * sys.x_ref;
    const double u = steady.shifted_detuning(params, coupling);
    const double gamma = coupling.gamma_tot;
    const cplx f1(gamma, u - xi);
    const cplx f2(gamma, -u - xi);
    const cplx a = steady.a_cw;
    const cplx b = steady.a_ccw;
    const cplx j1 = coupling.j1;
    const cplx j2 = coupling.j2;
    const double wm = params.omega_m;

    // Unknowns: (dx / x_ref, da-_cw, da+*_cw, da-_ccw, da+*_ccw).
    auto& m = sys.matrix;
    m[0] = {cplx(wm * wm - xi * xi, -xi * params.gamma_m) / wm, -gx * std::conj(a), -gx * a, -gx * std::conj(b), -gx * b};
    m[1] = {-kI * gx * a, f1, 0.0, kI * j1, 0.0};
    m[2] = {kI * gx * std::conj(a), 0.0, f2, 0.0, -kI * std::conj(j1)};
    m[3] = {-kI * gx * b, kI * j2, 0.0, f1, 0.0};
    m[4] = {kI * gx * std::conj(b), 0.0, -kI * std::conj(j2), 0.0, f2};
    sys.rhs = {0.0, std::sqrt(params.gamma_ex) * e_probe, 0.0, 0.0, 0.0};
    return sys;
}

SidebandSolution solve_sidebands_direct(const PhysicalParams& params, const DriveParams& drive,
                                        const CouplingState& coupling, const SteadyState& steady, double xi) {
    DriveParams at_xi = drive;
    at_xi.xi = xi;
    const double e_probe = amplitudes_from_power(params, at_xi).e_probe;
    const SidebandSystem sys = assemble_sidebands(params, coupling, steady, xi, e_probe);

    SidebandSolution sol;
    const Vector5 x = solve_system(sys, sol.residual);
    sol.xi = xi;
    sol.d_x = x(0) * sys.x_ref;
    sol.d_cw_minus = x(1);
    sol.d_cw_plus_conj = x(2);
    sol.d_ccw_minus = x(3);
    sol.d_ccw_plus_conj = x(4);
    return sol;
}

const char* to_string(ClosedFormVariant variant) {
    return variant == ClosedFormVariant::kConsistent ? "consistent" : "xi_squared_prefactor";
}

ClosedFormResult solve_sidebands_closed_form(const PhysicalParams& params, const DriveParams& drive,
                                             const CouplingState& coupling, const SteadyState& steady, double xi,
                                             ClosedFormVariant variant) {
    DriveParams at_xi = drive;
    at_xi.xi = xi;
    const double drive_term = std::sqrt(params.gamma_ex) * amplitudes_from_power(params, at_xi).e_probe;
    const Susceptibilities s = susceptibilities(params, coupling, steady, xi);
    const cplx chi = 1.0 / s.chi_inv;

    cplx coupling_chi;
    cplx denom;
    if (variant == ClosedFormVariant::kConsistent) {
        const double g = params.g();
        coupling_chi = params.hbar * g * g * chi;
        denom = s.f1 * s.h3 * s.h4 - coupling_chi * s.h;
    } else {
        coupling_chi = xi * xi * chi;
        denom = s.h3 * s.h4 - coupling_chi * s.h;
    }

    ClosedFormResult out;
    if (std::abs(s.h4) == 0.0 || std::abs(denom) == 0.0 || !std::isfinite(std::abs(denom))) {
        out.pole = true;
        out.d_cw_minus = cplx(std::nan(""), std::nan(""));
        return out;
    }
    out.d_cw_minus = drive_term / s.h4 * (1.0 + coupling_chi * s.h1 * s.h3 / denom);
    return out;
}

cplx probe_amplitude(const PhysicalParams& params, const DriveParams& drive, const CouplingState& coupling,
                     const SteadyState& steady, double delta_p) {
    DriveParams at = drive;
    at.set_delta_p(delta_p);
    // Checks the probe frequency; the amplitude itself cancels in t_p, so the
    // system is solved for a unit drive and the result does not depend on P_p.
    amplitudes_from_power(params, at);
    const SidebandSystem sys = assemble_sidebands(params, coupling, steady, at.xi, 1.0);
    double residual = 0.0;
    const Vector5 x = solve_system(sys, residual);
    return 1.0 - std::sqrt(params.gamma_ex) * x(1);
}

GroupDelay group_delay(const PhysicalParams& params, const DriveParams& drive, const CouplingState& coupling,
                       const SteadyState& steady, double delta_p) {
    auto estimate = [&](double h, double& min_abs) {
        const cplx plus = probe_amplitude(params, drive, coupling, steady, delta_p + h);
        const cplx minus = probe_amplitude(params, drive, coupling, steady, delta_p - h);
        min_abs = std::min(std::abs(plus), std::abs(minus));
        // arg of the ratio is the phase difference wrapped into (-pi, pi].
        return std::arg(plus * std::conj(minus)) / (2.0 * h);
    };

    GroupDelay out;
    double h = 1e-6 * params.omega_m;
    const double h_min = 1e-10 * params.omega_m;
    double min_abs = 0.0;
    double previous = estimate(h, min_abs);
    out.value = previous;
    out.step = h;
    out.achieved_tolerance = std::numeric_limits<double>::infinity();
    while (h > h_min) {
        h *= 0.5;
        const double current = estimate(h, min_abs);
        const double change = std::abs(current - previous);
        const double rel = current != 0.0 ? change / std::abs(current) : change;
        out.value = current;
        out.step = h;
        out.min_abs_tp = min_abs;
        out.achieved_tolerance = rel;
        if (change <= 1e-4 * std::abs(current) || change < 1e-18) {
            out.converged = true;
            return out;
        }
        previous = current;
    }
    return out;
}

ResponsePoint response_at(const PhysicalParams& params, const DriveParams& drive, const CouplingState& coupling,
                          const SteadyState& steady, double delta_p) {
    ResponsePoint p;
    p.delta_p = delta_p;
    p.t_p = probe_amplitude(params, drive, coupling, steady, delta_p);
    p.transmission = std::norm(p.t_p);
    const GroupDelay tau = group_delay(params, drive, coupling, steady, delta_p);
    p.group_delay = tau.value;
    p.group_delay_converged = tau.converged;
    return p;
}

std::vector<ResponsePoint> transmission_spectrum(const PhysicalParams& params, const DriveParams& drive,
                                                 const CouplingState& coupling, const SteadyState& steady,
                                                 std::span<const double> delta_p_grid) {
    std::vector<ResponsePoint> out;
    out.reserve(delta_p_grid.size());
    for (double dp : delta_p_grid) {
        out.push_back(response_at(params, drive, coupling, steady, dp));
    }
    return out;
}

} // namespace omit
