#include "omit/validation.hpp"

#include "omit/mode_coupling.hpp"
#include "omit/oracles.hpp"
#include "omit/range.hpp"
#include "omit/steady_state.hpp"
#include "omit/sweep.hpp"
#include "omit/table.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace omit {

const char* to_string(CheckStatus status) {
    switch (status) {
    case CheckStatus::kPass:
        return "PASS";
    case CheckStatus::kFail:
        return "FAIL";
    case CheckStatus::kDocumented:
        return "DOCUMENTED";
    }
    return "?";
}

bool ValidationReport::passed() const {
    return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::kFail; });
}

const CheckResult* ValidationReport::find(const std::string& name) const {
    for (const auto& c : checks) {
        if (c.name == name) {
            return &c;
        }
    }
    return nullptr;
}

std::string ValidationReport::to_text() const {
    std::ostringstream out;
    for (const auto& c : checks) {
        out << '[' << to_string(c.status) << "] " << c.name << "  measured=" << format_number(c.measured)
            << " tolerance=" << format_number(c.tolerance);
        if (!c.detail.empty()) {
            out << "  (" << c.detail << ')';
        }
        out << '\n';
    }
    out << (passed() ? "validation passed\n" : "validation FAILED\n");
    return out.str();
}

namespace {

double rel_diff(cplx a, cplx b, double scale) { return std::abs(a - b) / std::max(scale, 1e-300); }

CheckResult make(std::string name, double measured, double tolerance, std::string detail = {}) {
    CheckResult c{std::move(name), measured <= tolerance ? CheckStatus::kPass : CheckStatus::kFail, measured,
                  tolerance, std::move(detail)};
    return c;
}

struct Scenario {
    double delta_a_over_omega_m;
    double p_pump_w;
};

// Drive settings used by the reproduced figures.
const std::vector<Scenario>& figure_scenarios() {
    static const std::vector<Scenario> s{{1.0, 1e-4}, {1.0, 1e-3}, {1.0, 1e-2},
                                         {0.87, 1e-4}, {0.87, 1e-3}, {0.87, 1e-2}};
    return s;
}

Config with_drive(const Config& base, double delta_a_over_omega_m, double p_pump_w) {
    Config c = base;
    apply_override(c, "delta_a_over_omega_m", delta_a_over_omega_m);
    apply_override(c, "p_pump_w", p_pump_w);
    return c;
}

double coupling_scale(const PhysicalParams& p) {
    return std::abs(p.eps1) + std::abs(p.eps2) + p.gamma_a;
}

bool beta_dependent(const PhysicalParams& p) {
    return std::abs(p.eps1) > 0.0 && std::abs(p.eps2) > 0.0;
}

void check_eigensolver(const Config& config, ValidationReport& report) {
    const PhysicalParams& p = config.physical;
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> beta_dist(0.0, 2.0 * std::numbers::pi);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double beta = beta_dist(rng);
        const CouplingState s = coupling_at(p, 0.0, beta);
        const cplx center = cplx(0.0, -p.gamma_a) + p.eps1 + p.eps2;
        auto [hi, lo] = oracle::dense_splitting_eigenvalues(p, beta);
        const cplx half = 0.5 * s.delta_omega;
        const double scale = coupling_scale(p);
        const double direct = std::max(rel_diff(center + half, hi, scale), rel_diff(center - half, lo, scale));
        const double swapped = std::max(rel_diff(center + half, lo, scale), rel_diff(center - half, hi, scale));
        worst = std::max(worst, std::min(direct, swapped));
    }
    report.checks.push_back(make("eigenfrequencies_vs_dense_eigensolver", worst, 1e-10, "100 random beta"));
}

void check_periodicity(const Config& config, ValidationReport& report) {
    const PhysicalParams& p = config.physical;
    const double period = std::numbers::pi / p.azimuthal_m;
    const double scale = coupling_scale(p);
    double worst = 0.0;
    for (double beta : linspace(0.0, 1.6, 200)) {
        const CouplingState a = coupling_at(p, 0.0, beta);
        const CouplingState b = coupling_at(p, 0.0, beta + period);
        worst = std::max({worst, rel_diff(a.j1, b.j1, scale), rel_diff(a.j2, b.j2, scale),
                          rel_diff(a.delta_omega, b.delta_omega, scale)});
    }
    report.checks.push_back(make("coupling_periodicity_pi_over_m", worst, 1e-12));
}

void check_ep_scan(const Config& config, ValidationReport& report) {
    const PhysicalParams& p = config.physical;
    if (!beta_dependent(p)) {
        report.checks.push_back(make("critical_angles_vs_dense_scan", 0.0, 0.0, "no beta dependence (single or no scatterer)"));
        return;
    }
    const double period = std::numbers::pi / p.azimuthal_m;
    const long samples = 1000000;
    const double step = period / samples;
    const double scan = oracle::dense_scan_minimum(p, 0.0, period, samples);
    const auto records = critical_angles(p);
    double nearest = std::numeric_limits<double>::infinity();
    for (const auto& r : records) {
        const double d = std::remainder(r.beta_c - scan, period);
        nearest = std::min(nearest, std::abs(d));
    }
    report.checks.push_back(make("critical_angles_vs_dense_scan", nearest, step,
                                 std::to_string(records.size()) + " records, scan step " + format_number(step)));

    // Asymmetric backscattering between EPs.
    const CouplingState s = coupling_at(p, 0.0, 0.2);
    const double asym = std::abs(std::abs(s.j1) - std::abs(s.j2)) / coupling_scale(p);
    CheckResult c{"asymmetric_backscattering_at_beta_0.2", asym > 1e-6 ? CheckStatus::kPass : CheckStatus::kFail, asym,
                  1e-6, "requires | |J1| - |J2| | above tolerance"};
    report.checks.push_back(c);
}

void check_coalescence(const Config& config, ValidationReport& report) {
    // Equal-modulus variant of the configured scatterers: exact EPs exist.
    PhysicalParams p = config.physical;
    if (!beta_dependent(p)) {
        report.checks.push_back(make("ep_single_eigenvector", 0.0, 0.0, "no beta dependence (single or no scatterer)"));
        return;
    }
    {
        p.eps2 = std::polar(std::abs(p.eps1), std::arg(p.eps2));
    }
    double worst_rank = 0.0;
    double worst_alignment = 0.0;
    int tested = 0;
    for (const auto& r : critical_angles(p)) {
        if (r.residual < 1e-6 * p.gamma_a) {
            const oracle::Coalescence c = oracle::coalescence_measure(p, r.beta_c);
            // rank exactly one: sigma_min vanishes, sigma_max does not
            worst_rank = std::max(worst_rank, c.sigma_max > 1e-8 ? c.sigma_min : 1.0);
            worst_alignment = std::max(worst_alignment, 1.0 - c.alignment);
            ++tested;
        }
    }
    const std::string detail = std::to_string(tested) + " EPs with |eps2| set to |eps1|";
    report.checks.push_back(make("ep_single_eigenvector", worst_rank, 1e-8, detail));
    report.checks.push_back(make("ep_eigenvectors_parallel", worst_alignment, 1e-8, detail + "; 1 - |<v1, v2>|"));
}

void check_steady(const Config& config, ValidationReport& report) {
    const PhysicalParams& p = config.physical;
    double worst_fp = 0.0;
    double worst_residual = 0.0;
    double worst_eta = 0.0;
    for (double beta : linspace(0.0, 1.6, 200)) {
        const CouplingState c = coupling_at(p, config.drive.delta_a, beta);
        const SteadyState s = solve_steady(p, config.drive, c);
        const auto fp = oracle::fixed_point_steady(p, config.drive, c);
        const double scale = std::max(std::abs(s.x_bar), 1e-300);
        worst_fp = std::max(worst_fp, fp.converged ? std::abs(fp.x_bar - s.x_bar) / scale : 1.0);
        worst_residual = std::max(worst_residual, oracle::steady_residual(p, config.drive, c, s));
        if (std::norm(s.a_cw) > 0.0) {
            const double ratio = std::norm(s.a_ccw) / std::norm(s.a_cw);
            worst_eta = std::max(worst_eta, std::abs(ratio - s.eta) / std::max(ratio, 1e-300));
        }
    }
    report.checks.push_back(make("steady_state_quintic_vs_fixed_point", worst_fp, 1e-9, "200 beta nodes"));
    report.checks.push_back(make("steady_state_residual", worst_residual, 1e-10));
    report.checks.push_back(make("eta_closed_form_vs_field_ratio", worst_eta, 1e-12));

    int worst_branches = 1;
    for (const Scenario& sc : figure_scenarios()) {
        const Config cfg = with_drive(config, sc.delta_a_over_omega_m, sc.p_pump_w);
        for (double beta : linspace(0.0, 1.6, 81)) {
            const CouplingState c = coupling_at(cfg.physical, cfg.drive.delta_a, beta);
            worst_branches = std::max(worst_branches, solve_steady(cfg.physical, cfg.drive, c).branch_count);
        }
    }
    report.checks.push_back(make("single_branch_on_figure_parameters", worst_branches, 1.0));

    // Weak-drive linearity at 1 and 2 nW.
    const Config weak1 = with_drive(config, config.delta_a_over_omega_m, 1e-9);
    const Config weak2 = with_drive(config, config.delta_a_over_omega_m, 2e-9);
    const CouplingState c = coupling_at(p, weak1.drive.delta_a, config.sweep.beta);
    const double x1 = solve_steady(p, weak1.drive, c).x_bar;
    const double x2 = solve_steady(p, weak2.drive, c).x_bar;
    const double ratio_err = std::abs(x2 / x1 - 2.0) / 2.0;
    report.checks.push_back(make("weak_drive_linear_displacement", ratio_err, 0.01, "P_l = 1 nW vs 2 nW"));
}

void check_response(const Config& config, ValidationReport& report) {
    const std::vector<double> betas{0.2, 0.4, 0.6};
    const ReconciliationReport rec = reconcile_closed_form(config, betas, 400);
    report.checks.push_back(make("direct_solve_residual", rec.max_direct_residual, 1e-10, "3 beta x 400 xi"));
    report.checks.push_back(make("closed_form_consistent_vs_direct", rec.max_deviation(ClosedFormVariant::kConsistent),
                                 1e-6));
    CheckResult literal{"closed_form_xi_squared_prefactor_vs_direct", CheckStatus::kDocumented,
                        rec.max_deviation(ClosedFormVariant::kXiSquaredPrefactor), 1e-6,
                        "xi^2 chi prefactor and missing f1 in the denominator; see reconciliation report"};
    report.checks.push_back(literal);

    // Empty-cavity limit: no scatterers, no optomechanics.
    {
        Config bare = config;
        bare.eps1_over_gamma_a = {};
        bare.eps2_over_gamma_a = {};
        refresh(bare);
        bare.physical.g_override = 0.0;
        const PhysicalParams& p = bare.physical;
        const CouplingState c = coupling_at(p, bare.drive.delta_a, 0.0);
        const SteadyState s = solve_steady(p, bare.drive, c);
        double worst = 0.0;
        for (double dp : linspace(-0.5, 0.5, 401)) {
            const double delta_p = dp * p.omega_m;
            const double t = std::norm(probe_amplitude(p, bare.drive, c, s, delta_p));
            const double expected =
                oracle::empty_cavity_transmission(p.gamma_a, p.gamma_ex, bare.drive.delta_a, delta_p + bare.drive.delta_a);
            worst = std::max(worst, std::abs(t - expected));
        }
        report.checks.push_back(make("empty_cavity_lorentzian", worst, 1e-12));
    }

    // Passivity, group-delay convergence and probe-power independence on the figure settings.
    double worst_passivity = 0.0;
    int unconverged = 0;
    int delay_points = 0;
    double worst_probe = 0.0;
    for (const Scenario& sc : figure_scenarios()) {
        const Config cfg = with_drive(config, sc.delta_a_over_omega_m, sc.p_pump_w);
        Config loud = cfg;
        apply_override(loud, "p_probe_w", cfg.drive.p_probe > 0.0 ? 10.0 * cfg.drive.p_probe : 1e-9);
        const PhysicalParams& p = cfg.physical;
        for (double beta : betas) {
            const CouplingState c = coupling_at(p, cfg.drive.delta_a, beta);
            const SteadyState s = solve_steady(p, cfg.drive, c);
            for (double dp : linspace(-0.5, 0.5, 401)) {
                const double t = std::norm(probe_amplitude(p, cfg.drive, c, s, dp * p.omega_m));
                worst_passivity = std::max(worst_passivity, t - 1.0);
            }
            for (double dp : {0.0, 0.13}) {
                const ResponsePoint quiet = response_at(p, cfg.drive, c, s, dp * p.omega_m);
                const ResponsePoint louder = response_at(p, loud.drive, c, s, dp * p.omega_m);
                ++delay_points;
                unconverged += quiet.group_delay_converged ? 0 : 1;
                worst_probe = std::max({worst_probe,
                                        std::abs(quiet.transmission - louder.transmission) / quiet.transmission,
                                        std::abs(quiet.group_delay - louder.group_delay) /
                                            std::max(std::abs(quiet.group_delay), 1e-300)});
            }
        }
    }
    report.checks.push_back(make("passivity_T_le_1", worst_passivity, 1e-9, "max(T - 1) over figure settings"));
    report.checks.push_back(make("group_delay_fd_converged", unconverged, 0.0,
                                 std::to_string(delay_points) + " points, unconverged count"));
    report.checks.push_back(make("probe_power_independence", worst_probe, 1e-12, "P_p vs 10 P_p"));
}

void check_plumbing(const Config& config, int workers, ValidationReport& report) {
    SweepSpec spec;
    spec.axis1 = {"beta", {0.2, 0.6, 5}};
    spec.axis2 = SweepAxis{"delta_p_over_omega_m", {0.0, 0.2, 4}};
    const std::string serial = to_csv(run_sweep(spec, config, 1));
    const std::string parallel = to_csv(run_sweep(spec, config, std::max(workers, 2)));
    const std::string again = to_csv(run_sweep(spec, config, 1));
    const bool same = serial == parallel && serial == again;
    report.checks.push_back(make("sweep_determinism", same ? 0.0 : 1.0, 0.0, "byte-identical CSV across runs/workers"));

    const std::string text = serialize(config);
    const Config back = load_config(text);
    const PhysicalParams& a = config.physical;
    const PhysicalParams& b = back.physical;
    const bool equal = serialize(back) == text && a.omega_a == b.omega_a && a.gamma_a == b.gamma_a &&
                       a.gamma_ex == b.gamma_ex && a.omega_m == b.omega_m && a.gamma_m == b.gamma_m &&
                       a.m_eff == b.m_eff && a.radius == b.radius && a.azimuthal_m == b.azimuthal_m &&
                       a.eps1 == b.eps1 && a.eps2 == b.eps2 && config.drive.p_pump == back.drive.p_pump &&
                       config.drive.p_probe == back.drive.p_probe && config.drive.delta_a == back.drive.delta_a &&
                       config.drive.xi == back.drive.xi && config.sweep == back.sweep;
    report.checks.push_back(make("config_round_trip", equal ? 0.0 : 1.0, 0.0, "bitwise-equal records after reparse"));
}

} // namespace

ValidationReport validate(const Config& config, int workers) {
    ValidationReport report;
    check_eigensolver(config, report);
    check_periodicity(config, report);
    check_ep_scan(config, report);
    check_coalescence(config, report);
    check_steady(config, report);
    check_response(config, report);
    check_plumbing(config, workers, report);
    return report;
}

double ReconciliationReport::max_deviation(ClosedFormVariant variant) const {
    double worst = 0.0;
    for (const auto& r : rows) {
        if (r.variant == variant) {
            worst = std::max(worst, r.max_rel_deviation);
        }
    }
    return worst;
}

std::string ReconciliationReport::to_markdown() const {
    std::ostringstream out;
    out << "# Closed-form sideband amplitude vs direct 5x5 solve\n\n"
        << "Grid: " << xi_points << " probe detunings, delta_p/omega_m in [-0.5, 0.5], per beta.\n"
        << "Largest direct-solve residual ||A s - b|| / ||b||: " << format_number(max_direct_residual) << "\n\n"
        << "| beta | variant | max relative deviation | worst delta_p/omega_m | poles |\n"
        << "|---|---|---|---|---|\n";
    for (const auto& r : rows) {
        out << "| " << format_number(r.beta) << " | " << to_string(r.variant) << " | "
            << format_number(r.max_rel_deviation) << " | " << format_number(r.worst_delta_p_over_omega_m) << " | "
            << r.poles << " |\n";
    }
    out << "\n## Terms responsible for the discrepancy\n\n"
        << "Eliminating the counter-propagating and mechanical unknowns from the linearized equations gives\n\n"
        << "    da-_cw = s/h4 * [1 + hbar g^2 chi h1 h3 / (f1 h3 h4 - hbar g^2 chi h)],  s = sqrt(gamma_ex) E_p\n\n"
        << "with h1, h3, h4, h5, h6 and h = h3 h6 + f1 h4 h5 unchanged (variant `consistent`).\n"
        << "The variant `xi_squared_prefactor` differs in exactly two terms:\n\n"
        << "1. Prefactor `xi^2 chi` in place of `hbar g^2 chi`. The coupling enters through the radiation-pressure\n"
        << "   force hbar g n and the optical shift g dx, so the prefactor is xi-independent; `xi^2 chi` has the\n"
        << "   wrong units and scale.\n"
        << "2. Denominator `h3 h4` in place of `f1 h3 h4`. Since h ~ n f^3 while h3 h4 ~ f^3, the two terms of the\n"
        << "   denominator only have matching units with the extra factor f1 (it comes from the 1/f1 in\n"
        << "   da-_ccw = (-i J2 da-_cw + i g a_ccw dx)/f1).\n\n"
        << "f1,2 = gamma +/- i(Delta - g x_bar) - i xi is used in both variants. The direct solve is the\n"
        << "canonical path for all transmission and group-delay output.\n";
    return out.str();
}

ReconciliationReport reconcile_closed_form(const Config& config, std::span<const double> betas, int xi_points) {
    ReconciliationReport report;
    report.xi_points = xi_points;
    const PhysicalParams& p = config.physical;
    Config probed = config;
    if (probed.drive.p_probe <= 0.0) {
        apply_override(probed, "p_probe_w", 1e-9);
    }
    const DriveParams& drive = probed.drive;
    const std::vector<double> grid = linspace(-0.5, 0.5, xi_points);
    for (double beta : betas) {
        const CouplingState c = coupling_at(p, drive.delta_a, beta);
        const SteadyState s = solve_steady(p, drive, c);
        for (ClosedFormVariant variant : {ClosedFormVariant::kConsistent, ClosedFormVariant::kXiSquaredPrefactor}) {
            ReconciliationRow row;
            row.beta = beta;
            row.variant = variant;
            for (double dp : grid) {
                const double xi = dp * p.omega_m + drive.delta_a;
                const SidebandSolution direct = solve_sidebands_direct(p, drive, c, s, xi);
                report.max_direct_residual = std::max(report.max_direct_residual, direct.residual);
                const ClosedFormResult closed = solve_sidebands_closed_form(p, drive, c, s, xi, variant);
                if (closed.pole) {
                    ++row.poles;
                    continue;
                }
                const double dev = std::abs(closed.d_cw_minus - direct.d_cw_minus) / std::abs(direct.d_cw_minus);
                if (!(dev <= row.max_rel_deviation)) {
                    row.max_rel_deviation = dev;
                    row.worst_delta_p_over_omega_m = dp;
                }
            }
            report.rows.push_back(row);
        }
    }
    return report;
}

} // namespace omit
