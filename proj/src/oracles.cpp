#include "omit/oracles.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace omit::oracle {

namespace {

Eigen::Matrix2cd coupling_matrix(const PhysicalParams& params, double beta, bool with_carrier) {
    const double theta = 2.0 * params.azimuthal_m * beta;
    const cplx j1 = params.eps1 + params.eps2 * std::exp(cplx(0.0, -theta));
    const cplx j2 = params.eps1 + params.eps2 * std::exp(cplx(0.0, theta));
    const cplx diag = cplx(with_carrier ? params.omega_a : 0.0, -params.gamma_a) + params.eps1 + params.eps2;
    Eigen::Matrix2cd m;
    m << diag, j1, j2, diag;
    return m;
}

std::pair<cplx, cplx> eigenpair(const Eigen::Matrix2cd& m) {
    Eigen::ComplexEigenSolver<Eigen::Matrix2cd> solver(m, false);
    cplx a = solver.eigenvalues()(0);
    cplx b = solver.eigenvalues()(1);
    if (a.real() < b.real()) {
        std::swap(a, b);
    }
    return {a, b};
}

} // namespace

std::pair<cplx, cplx> dense_eigenfrequencies(const PhysicalParams& params, double beta) {
    return eigenpair(coupling_matrix(params, beta, true));
}

std::pair<cplx, cplx> dense_splitting_eigenvalues(const PhysicalParams& params, double beta) {
    return eigenpair(coupling_matrix(params, beta, false));
}

double dense_scan_minimum(const PhysicalParams& params, double lo, double hi, long samples) {
    const double step = (hi - lo) / static_cast<double>(samples);
    const double two_m = 2.0 * params.azimuthal_m;
    double best_beta = lo;
    double best = std::numeric_limits<double>::infinity();
    for (long i = 0; i < samples; ++i) {
        const double beta = lo + step * static_cast<double>(i);
        // |delta_omega| = 2 sqrt|eps1^2 + eps2^2 + 2 eps1 eps2 cos(2 m beta)|
        const cplx product = params.eps1 * params.eps1 + params.eps2 * params.eps2 +
                             2.0 * params.eps1 * params.eps2 * std::cos(two_m * beta);
        const double value = std::abs(product);
        if (value < best) {
            best = value;
            best_beta = beta;
        }
    }
    return best_beta;
}

FixedPointResult fixed_point_steady(const PhysicalParams& params, const DriveParams& drive,
                                    const CouplingState& coupling, double tol, double damping) {
    const Amplitudes amp = amplitudes_from_power(params, drive);
    const double g = params.g();
    const double gamma = coupling.gamma_tot;
    const double delta = coupling.delta_eff;
    const cplx product = coupling.j1 * coupling.j2;
    const double flux = params.gamma_ex * amp.e_pump * amp.e_pump;
    const double stiffness = params.m_eff * params.omega_m * params.omega_m;

    // x = hbar g gex |E|^2 (|J2|^2 + gamma^2 + (Delta - g x)^2) / (m wm^2 |(gamma + i(Delta - g x))^2 + J1 J2|^2)
    auto update = [&](double x) {
        const double u = delta - g * x;
        const cplx k(gamma, u);
        const double num = std::norm(coupling.j2) + gamma * gamma + u * u;
        return params.hbar * g * flux * num / (stiffness * std::norm(k * k + product));
    };

    FixedPointResult out;
    double x = 0.0;
    for (int iter = 1; iter <= 100000; ++iter) {
        const double next = (1.0 - damping) * x + damping * update(x);
        const double change = std::abs(next - x);
        x = next;
        out.iterations = iter;
        if (change <= tol * std::abs(x) || x == 0.0) {
            out.converged = true;
            break;
        }
    }
    out.x_bar = x;
    return out;
}

double steady_residual(const PhysicalParams& params, const DriveParams& drive, const CouplingState& coupling,
                       const SteadyState& steady) {
    const Amplitudes amp = amplitudes_from_power(params, drive);
    const double g = params.g();
    const cplx k(coupling.gamma_tot, coupling.delta_eff - g * steady.x_bar);
    const cplx denom = k * k + coupling.j1 * coupling.j2;
    const double drive_term = std::sqrt(params.gamma_ex) * amp.e_pump;
    const cplx a_cw = drive_term * k / denom;
    const cplx a_ccw = cplx(0.0, -1.0) * drive_term * coupling.j2 / denom;
    const double x = params.hbar * g * params.gamma_ex * amp.e_pump * amp.e_pump *
                     (std::norm(coupling.j2) + std::norm(k)) /
                     (params.m_eff * params.omega_m * params.omega_m * std::norm(denom));

    auto rel = [](cplx expected, cplx actual) {
        const double scale = std::abs(expected);
        return scale > 0.0 ? std::abs(expected - actual) / scale : std::abs(actual);
    };
    const double scale_a = std::max(std::abs(a_cw), std::abs(a_ccw));
    const double field_err = scale_a > 0.0
        ? std::max(std::abs(a_cw - steady.a_cw), std::abs(a_ccw - steady.a_ccw)) / scale_a
        : std::max(std::abs(steady.a_cw), std::abs(steady.a_ccw));
    return std::max(field_err, rel(x, steady.x_bar));
}

double empty_cavity_transmission(double gamma, double gamma_ex, double delta, double xi) {
    return std::norm(1.0 - gamma_ex / cplx(gamma, delta - xi));
}

Coalescence coalescence_measure(const PhysicalParams& params, double beta) {
    const Eigen::Matrix2cd m = coupling_matrix(params, beta, false);
    const cplx lambda = eigenpair(m).first;
    const Eigen::Matrix2cd shifted = m - lambda * Eigen::Matrix2cd::Identity();
    Eigen::JacobiSVD<Eigen::Matrix2cd> svd(shifted);
    Coalescence out;
    out.sigma_max = svd.singularValues()(0) / m.norm();
    out.sigma_min = svd.singularValues()(1) / m.norm();
    Eigen::ComplexEigenSolver<Eigen::Matrix2cd> solver(m, true);
    const Eigen::Vector2cd v1 = solver.eigenvectors().col(0).normalized();
    const Eigen::Vector2cd v2 = solver.eigenvectors().col(1).normalized();
    out.alignment = std::abs(v1.dot(v2));
    return out;
}

} // namespace omit::oracle
