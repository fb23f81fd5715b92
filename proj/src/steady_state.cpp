#include "omit/steady_state.hpp"

#include "omit/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace omit {

namespace {

// Ascending-order real polynomial.
using Poly = std::vector<double>;

Poly mul(const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

Poly add(Poly a, const Poly& b, double scale = 1.0) {
    if (a.size() < b.size()) {
        a.resize(b.size(), 0.0);
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        a[i] += scale * b[i];
    }
    return a;
}

void eval(const Poly& p, double t, double& value, double& slope) {
    value = 0.0;
    slope = 0.0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        slope = slope * t + value;
        value = value * t + *it;
    }
}

std::vector<cplx> companion_roots(const Poly& monic) {
    const int n = static_cast<int>(monic.size()) - 1;
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) {
        companion(i, i - 1) = 1.0;
    }
    for (int i = 0; i < n; ++i) {
        companion(i, n - 1) = -monic[static_cast<std::size_t>(i)];
    }
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("companion-matrix eigenvalue iteration did not converge");
    }
    std::vector<cplx> roots;
    for (int i = 0; i < n; ++i) {
        roots.push_back(solver.eigenvalues()[i]);
    }
    return roots;
}

bool newton_polish(const Poly& p, double& t) {
    for (int iter = 0; iter < 100; ++iter) {
        double value = 0.0;
        double slope = 0.0;
        eval(p, t, value, slope);
        if (value == 0.0) {
            return true;
        }
        if (slope == 0.0 || !std::isfinite(slope)) {
            return false;
        }
        const double step = value / slope;
        t -= step;
        if (std::abs(step) <= 4e-16 * std::abs(t) || std::abs(step) < 1e-300) {
            return true;
        }
    }
    return false;
}

} // namespace

void fields_at(const PhysicalParams& params, const CouplingState& coupling, double e_pump, double x_bar,
               cplx& a_cw, cplx& a_ccw) {
    const cplx k(coupling.gamma_tot, coupling.delta_eff - params.g() * x_bar);
    const cplx denom = k * k + coupling.j1 * coupling.j2;
    const double drive = std::sqrt(params.gamma_ex) * e_pump;
    a_cw = drive * k / denom;
    a_ccw = cplx(0.0, -1.0) * drive * coupling.j2 / denom;
}

double displacement_map(const PhysicalParams& params, const CouplingState& coupling, double e_pump, double x_bar) {
    cplx a_cw;
    cplx a_ccw;
    fields_at(params, coupling, e_pump, x_bar, a_cw, a_ccw);
    const double n = std::norm(a_cw) + std::norm(a_ccw);
    return params.hbar * params.g() * n / (params.m_eff * params.omega_m * params.omega_m);
}

SteadyState solve_steady(const PhysicalParams& params, const DriveParams& drive, const CouplingState& coupling) {
    const Amplitudes amp = amplitudes_from_power(params, drive);
    const double gamma = coupling.gamma_tot;
    const double g = params.g();

    // Normalized by gamma: t = g x / gamma, v = (Delta - g x) / gamma.
    const double d = coupling.delta_eff / gamma;
    const cplx p = coupling.j1 * coupling.j2 / (gamma * gamma);
    const double j = std::norm(coupling.j2) / (gamma * gamma);
    const double kappa = params.hbar * g * g * params.gamma_ex * amp.e_pump * amp.e_pump /
                         (params.m_eff * params.omega_m * params.omega_m * gamma * gamma * gamma);

    const Poly v{d, -1.0};
    const Poly v2 = mul(v, v);
    const Poly re_part = add(Poly{1.0 + p.real()}, v2, -1.0);
    const Poly im_part = add(Poly{p.imag()}, v, 2.0);
    const Poly q = add(mul(re_part, re_part), mul(im_part, im_part));
    const Poly poly = add(mul(Poly{0.0, 1.0}, q), add(Poly{1.0 + j}, v2), -kappa);

    std::vector<double> real_roots;
    const auto roots = companion_roots(poly);
    for (const cplx& r : roots) {
        if (std::abs(r.imag()) > 1e-8 * std::max(1.0, std::abs(r))) {
            continue;
        }
        double t = r.real();
        if (!newton_polish(poly, t)) {
            continue;
        }
        const bool duplicate = std::any_of(real_roots.begin(), real_roots.end(), [&](double s) {
            return std::abs(s - t) <= 1e-9 * std::max(1.0, std::abs(t));
        });
        if (!duplicate) {
            real_roots.push_back(t);
        }
    }
    if (real_roots.empty()) {
        // An odd-degree real polynomial always has a real root; polish the
        // least-imaginary eigenvalue before giving up.
        auto it = std::min_element(roots.begin(), roots.end(),
                                   [](const cplx& a, const cplx& b) { return std::abs(a.imag()) < std::abs(b.imag()); });
        double t = it->real();
        if (!newton_polish(poly, t)) {
            throw NumericalError("steady state: no real root of the force-balance quintic");
        }
        real_roots.push_back(t);
    }

    auto to_x = [&](double t) { return g > 0.0 ? gamma * t / g : 0.0; };

    SteadyState s;
    for (double t : real_roots) {
        s.branches.push_back(to_x(t));
    }
    std::sort(s.branches.begin(), s.branches.end());
    s.branch_count = static_cast<int>(s.branches.size());
    s.x_bar = *std::min_element(s.branches.begin(), s.branches.end(),
                                [](double a, double b) { return std::abs(a) < std::abs(b); });

    fields_at(params, coupling, amp.e_pump, s.x_bar, s.a_cw, s.a_ccw);
    s.n_bar = std::norm(s.a_cw) + std::norm(s.a_ccw);
    const double u = coupling.delta_eff - g * s.x_bar;
    s.eta = std::norm(coupling.j2) / (gamma * gamma + u * u);
    return s;
}

std::vector<EtaPoint> eta_curve(const PhysicalParams& params, const DriveParams& drive,
                                std::span<const double> beta_grid) {
    std::vector<EtaPoint> out;
    out.reserve(beta_grid.size());
    for (double beta : beta_grid) {
        const CouplingState c = coupling_at(params, drive.delta_a, beta);
        const SteadyState s = solve_steady(params, drive, c);
        out.push_back({beta, s.eta, s.x_bar, s.n_bar, s.branch_count});
    }
    return out;
}

} // namespace omit
