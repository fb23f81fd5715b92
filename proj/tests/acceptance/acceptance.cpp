// Acceptance suite: one PASS/FAIL line per criterion, details indented below.
// Exit status is nonzero if any criterion fails.

#include "omit/config.hpp"
#include "omit/mode_coupling.hpp"
#include "omit/oracles.hpp"
#include "omit/range.hpp"
#include "omit/response.hpp"
#include "omit/steady_state.hpp"
#include "omit/sweep.hpp"
#include "omit/table.hpp"
#include "omit/validation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#ifndef OMIT_RECONCILIATION_REPORT
#define OMIT_RECONCILIATION_REPORT "docs/closed_form_reconciliation.md"
#endif

using namespace omit;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> details;

    void require(bool ok, const std::string& what) {
        pass = pass && ok;
        details.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    }
    void note(const std::string& what) { details.push_back("info " + what); }
};

int failures = 0;

void report(int id, const std::string& title, const Outcome& o) {
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << id << ": " << title << '\n';
    for (const auto& d : o.details) {
        std::cout << "        " << d << '\n';
    }
    failures += o.pass ? 0 : 1;
}

std::string num(double v) { return format_number(v); }

const double kPeriod = std::numbers::pi / 4.0;

Config at_drive(double delta_a_over_omega_m, double p_pump_w) {
    Config c = reference_config();
    apply_override(c, "delta_a_over_omega_m", delta_a_over_omega_m);
    apply_override(c, "p_pump_w", p_pump_w);
    return c;
}

struct Spectrum {
    std::vector<double> x; // delta_p / omega_m
    std::vector<double> t;
};

Spectrum transmission(const Config& c, double beta, double lo, double hi, int count) {
    const PhysicalParams& p = c.physical;
    const CouplingState cs = coupling_at(p, c.drive.delta_a, beta);
    const SteadyState s = solve_steady(p, c.drive, cs);
    Spectrum out;
    out.x = linspace(lo, hi, count);
    for (double x : out.x) {
        out.t.push_back(std::norm(probe_amplitude(p, c.drive, cs, s, x * p.omega_m)));
    }
    return out;
}

// Interior local extremum of T on the grid; returns the location or NaN.
double interior_extremum(const Spectrum& s, bool maximum) {
    const double sign = maximum ? 1.0 : -1.0;
    double best_x = std::numeric_limits<double>::quiet_NaN();
    double best_t = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i + 1 < s.t.size(); ++i) {
        const double v = sign * s.t[i];
        if (v > sign * s.t[i - 1] && v >= sign * s.t[i + 1] && v > best_t) {
            best_t = v;
            best_x = s.x[i];
        }
    }
    return best_x;
}

double tau_at(const Config& c, double beta, double delta_p_over_omega_m, bool& converged) {
    const PhysicalParams& p = c.physical;
    const CouplingState cs = coupling_at(p, c.drive.delta_a, beta);
    const SteadyState s = solve_steady(p, c.drive, cs);
    const GroupDelay g = group_delay(p, c.drive, cs, s, delta_p_over_omega_m * p.omega_m);
    converged = converged && g.converged;
    return g.value;
}

const EpRecord* nearest(const std::vector<EpRecord>& records, double beta, EpBranch branch) {
    const EpRecord* best = nullptr;
    for (const auto& r : records) {
        if (r.branch == branch && (!best || std::abs(r.beta_c - beta) < std::abs(best->beta_c - beta))) {
            best = &r;
        }
    }
    return best;
}

void criterion_1() {
    Outcome o;
    const Config c = reference_config();
    const auto start = std::chrono::steady_clock::now();
    const auto records = critical_angles(c.physical);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const EpRecord* ep = nearest(records, 0.3926, EpBranch::kJ1Vanishes);
    o.require(ep != nullptr, "a J1=0 record exists");
    if (ep) {
        const double j_ratio = std::abs(ep->j_other) / c.physical.gamma_a;
        o.require(std::abs(ep->beta_c - 0.3926) <= 5e-4, "beta_c = " + num(ep->beta_c) + " within 0.3926 +/- 0.0005");
        o.require(std::abs(j_ratio - 0.003) <= 0.2 * 0.003, "|J2|/gamma_a = " + num(j_ratio) + " within 20% of 0.003");
        const cplx j = ep->j_other / c.physical.gamma_a;
        o.note("J2/gamma_a = " + num(j.real()) + " + " + num(j.imag()) + "i");
    }
    o.require(seconds < 1.0, "runtime " + num(seconds) + " s < 1 s");
    report(1, "EP location", o);
}

void criterion_2() {
    Outcome o;
    const Config c = reference_config();
    const PhysicalParams& p = c.physical;
    const double scale = std::abs(p.eps1) + std::abs(p.eps2);

    double worst_period = 0.0;
    for (double beta : linspace(0.0, std::numbers::pi - kPeriod, 601)) {
        const cplx a = coupling_at(p, 0.0, beta).delta_omega;
        const cplx b = coupling_at(p, 0.0, beta + kPeriod).delta_omega;
        worst_period = std::max({worst_period, std::abs(a.real() - b.real()) / scale,
                                 std::abs(a.imag() - b.imag()) / scale});
    }
    o.require(worst_period <= 1e-12, "Re/Im domega pi/4-periodic on [0, pi], max deviation " + num(worst_period) +
                                         " of |eps1|+|eps2|");

    const auto records = critical_angles(p);
    double worst_residual = 0.0;
    int in_period = 0;
    for (const auto& r : records) {
        worst_residual = std::max(worst_residual, r.residual / p.gamma_a);
        in_period += r.beta_c < std::numbers::pi ? 1 : 0;
    }
    o.require(in_period == 8, num(in_period) + " critical angles in [0, pi) (two per period)");
    o.require(worst_residual < 1e-6, "|domega(beta_c)|/gamma_a = " + num(worst_residual) + " < 1e-6 at every refined beta_c");
    o.note("|eps1|/gamma_a = " + num(std::abs(p.eps1) / p.gamma_a) + ", |eps2|/gamma_a = " +
           num(std::abs(p.eps2) / p.gamma_a) + ": min |J1 J2| = ||eps1|^2 - |eps2|^2| > 0");

    const long samples = 1000000;
    const double step = kPeriod / samples;
    const double scan = oracle::dense_scan_minimum(p, 0.0, kPeriod, samples);
    double gap = std::numeric_limits<double>::infinity();
    for (const auto& r : records) {
        gap = std::min(gap, std::abs(std::remainder(r.beta_c - scan, kPeriod)));
    }
    o.require(gap <= step, "dense scan (1e6 samples) minimum " + num(scan) + " within one step of a record (gap " +
                               num(gap) + ", step " + num(step) + ")");

    // Control: same phases with |eps2| = |eps1| has exact EPs.
    PhysicalParams eq = p;
    eq.eps2 = std::polar(std::abs(p.eps1), std::arg(p.eps2));
    double control = 0.0;
    for (const auto& r : critical_angles(eq)) {
        control = std::max(control, r.residual / eq.gamma_a);
    }
    o.note("control |eps2| := |eps1|: max |domega(beta_c)|/gamma_a = " + num(control));
    report(2, "splitting periodicity and simultaneous zeros", o);
}

void criterion_3() {
    Outcome o;
    const Config c = at_drive(1.0, 1e-3);
    const PhysicalParams& p = c.physical;
    const std::vector<double> grid = c.sweep.beta_range.values();
    const auto eta = eta_curve(p, c.drive, grid);
    std::vector<double> shifted;
    for (double b : grid) {
        shifted.push_back(b + kPeriod);
    }
    const auto eta_shift = eta_curve(p, c.drive, shifted);
    double worst = 0.0;
    for (std::size_t i = 0; i < eta.size(); ++i) {
        worst = std::max(worst, std::abs(eta[i].eta - eta_shift[i].eta) / std::max(eta[i].eta, 1e-300));
    }
    o.require(worst <= 1e-9, "eta(beta + pi/4) = eta(beta), max relative deviation " + num(worst));

    const EpRecord* ep = nearest(critical_angles(p), 0.4, EpBranch::kJ2Vanishes);
    o.require(ep != nullptr, "J2=0 record near 0.4");
    if (ep) {
        const double value = eta_curve(p, c.drive, std::vector<double>{ep->beta_c}).front().eta;
        o.require(value < 1e-4, "eta(" + num(ep->beta_c) + ") = " + num(value) + " < 1e-4");
    }

    double worst_fp = 0.0;
    for (double beta : grid) {
        const CouplingState cs = coupling_at(p, c.drive.delta_a, beta);
        const SteadyState s = solve_steady(p, c.drive, cs);
        const auto fp = oracle::fixed_point_steady(p, c.drive, cs);
        worst_fp = std::max(worst_fp, fp.converged ? std::abs(fp.x_bar - s.x_bar) / std::abs(s.x_bar) : 1.0);
    }
    o.require(worst_fp <= 1e-9, "quintic vs fixed-point x_bar, max relative deviation " + num(worst_fp) + " over " +
                                    num(static_cast<double>(grid.size())) + " beta nodes");
    report(3, "photon-number ratio curve", o);
}

void criterion_4() {
    Outcome o;
    Config c = at_drive(1.0, 1e-3);
    c.eps1_over_gamma_a = {};
    c.eps2_over_gamma_a = {};
    refresh(c);
    const Spectrum s = transmission(c, 0.0, -0.5, 0.5, 2001);
    const std::size_t mid = s.x.size() / 2;
    const double floor = *std::min_element(s.t.begin(), s.t.end());
    const bool peak = s.t[mid] > s.t[mid - 1] && s.t[mid] > s.t[mid + 1];
    o.require(peak, "local transmission maximum at delta_p = 0 (T = " + num(s.t[mid]) + ")");
    o.require(s.t[mid] > floor, "peak height above absorption floor " + num(floor));

    Config bare = c;
    bare.physical.g_override = 0.0;
    const PhysicalParams& p = bare.physical;
    const CouplingState cs = coupling_at(p, bare.drive.delta_a, 0.0);
    const SteadyState st = solve_steady(p, bare.drive, cs);
    double worst = 0.0;
    for (double x : linspace(-0.5, 0.5, 2001)) {
        const double t = std::norm(probe_amplitude(p, bare.drive, cs, st, x * p.omega_m));
        const double ref = oracle::empty_cavity_transmission(p.gamma_a, p.gamma_ex, bare.drive.delta_a,
                                                             x * p.omega_m + bare.drive.delta_a);
        worst = std::max(worst, std::abs(t - ref));
    }
    o.require(worst <= 1e-12, "g = 0: max |T - Lorentzian| = " + num(worst));
    report(4, "OMIT limiting case", o);
}

void criterion_5() {
    Outcome o;
    const Config c = at_drive(1.0, 1e-3);
    for (double beta : {0.2, 0.6}) {
        const double at = interior_extremum(transmission(c, beta, 0.12, 0.14, 2001), true);
        o.require(std::isfinite(at), "beta = " + num(beta) + ": transparency window (local max) at delta_p/omega_m = " +
                                         num(at));
    }
    const double dip = interior_extremum(transmission(c, 0.4, 0.12, 0.14, 2001), false);
    o.require(std::isfinite(dip), "beta = 0.4: absorption (local min) at delta_p/omega_m = " + num(dip));

    double worst = 0.0;
    for (double beta : linspace(0.0, 1.6 - kPeriod, 201)) {
        const Spectrum a = transmission(c, beta, 0.13, 0.13, 1);
        const Spectrum b = transmission(c, beta + kPeriod, 0.13, 0.13, 1);
        worst = std::max(worst, std::abs(a.t[0] - b.t[0]) / a.t[0]);
    }
    o.require(worst <= 1e-9, "T(beta) at delta_p/omega_m = 0.13 pi/4-periodic, max relative deviation " + num(worst));
    report(5, "transmission spectra vs beta", o);
}

void criterion_6() {
    Outcome o;
    const Config c = at_drive(1.0, 1e-3);
    bool converged = true;
    const double t02 = tau_at(c, 0.2, 0.13, converged);
    const double t04 = tau_at(c, 0.4, 0.13, converged);
    o.require(t02 * t04 < 0.0, "sign change: tau_g(0.2) = " + num(t02) + " s, tau_g(0.4) = " + num(t04) + " s");
    const double larger = std::max(std::abs(t02), std::abs(t04));
    o.require(larger >= 0.1e-6 && larger <= 3e-6, "max |tau_g| = " + num(larger * 1e6) + " us within 0.1-3 us");

    // Tunable range over P_l at fixed beta on the delta_p = 0 map.
    const std::vector<double> powers = Range{1e-4, 1e-2, 100}.values();
    double best_span = 0.0;
    double best_beta = 0.0;
    for (double beta : linspace(0.0, kPeriod, 41)) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (double pw : powers) {
            const double tau = tau_at(at_drive(1.0, pw), beta, 0.0, converged);
            lo = std::min(lo, tau);
            hi = std::max(hi, tau);
        }
        if (hi - lo > best_span) {
            best_span = hi - lo;
            best_beta = beta;
        }
    }
    o.require(best_span >= 1e-6, "delta_p = 0: largest P_l-span of tau_g over [0.1, 10] mW = " +
                                     num(best_span * 1e6) + " us (beta = " + num(best_beta) + ") >= 1 us");
    double span13 = 0.0;
    {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (double pw : powers) {
            const double tau = tau_at(at_drive(1.0, pw), 0.4, 0.13, converged);
            lo = std::min(lo, tau);
            hi = std::max(hi, tau);
        }
        span13 = hi - lo;
    }
    o.note("delta_p/omega_m = 0.13, beta = 0.4: P_l-span of tau_g = " + num(span13 * 1e6) + " us");
    o.require(converged, "all finite-difference group delays converged");
    report(6, "group-delay sign switch and tunable range", o);
}

void criterion_7() {
    Outcome o;
    const Config c = at_drive(0.87, 1e-3);
    const double beta = 0.4;
    const double at = interior_extremum(transmission(c, beta, 0.12, 0.14, 2001), true);
    o.require(std::isfinite(at), "beta = 0.4: OMIT window (local max) at delta_p/omega_m = " + num(at));

    bool converged = true;
    double lowest = std::numeric_limits<double>::infinity();
    for (double pw : Range{1e-4, 1e-2, 100}.values()) {
        lowest = std::min(lowest, tau_at(at_drive(0.87, pw), beta, 0.13, converged));
    }
    o.require(lowest > 0.0, "min tau_g over P_l in [0.1, 10] mW at delta_p/omega_m = 0.13: " + num(lowest) + " s > 0");
    o.require(converged, "all finite-difference group delays converged");
    report(7, "detuned pump (Delta_a/omega_m = 0.87)", o);
}

void criterion_8() {
    Outcome o;
    const std::vector<double> betas{0.2, 0.4, 0.6};
    const ReconciliationReport rec = reconcile_closed_form(reference_config(), betas, 400);
    o.require(rec.max_direct_residual <= 1e-10, "direct 5x5 residual " + num(rec.max_direct_residual) + " <= 1e-10");
    const double consistent = rec.max_deviation(ClosedFormVariant::kConsistent);
    const double printed = rec.max_deviation(ClosedFormVariant::kXiSquaredPrefactor);
    o.note("derived closed form vs direct: " + num(consistent));
    o.note("xi^2-prefactor closed form vs direct: " + num(printed));
    const bool exists = std::filesystem::exists(OMIT_RECONCILIATION_REPORT);
    o.require(consistent <= 1e-6 || exists,
              "closed form agrees to 1e-6 or the reconciliation report exists (" OMIT_RECONCILIATION_REPORT ")");
    o.require(exists, "reconciliation report present");
    report(8, "closed form vs direct solve", o);
}

void criterion_9() {
    Outcome o;
    const ValidationReport r = validate(reference_config(), 2);
    for (const char* name : {"passivity_T_le_1", "probe_power_independence", "sweep_determinism", "config_round_trip"}) {
        const CheckResult* c = r.find(name);
        o.require(c && c->status == CheckStatus::kPass,
                  std::string(name) + (c ? " measured " + num(c->measured) : std::string(" missing")));
    }
    o.require(r.passed(), "validate() passes (exit code 0)");
    report(9, "property suite", o);
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    std::cout << (failures == 0 ? "all criteria passed" : num(failures) + " criterion/criteria failed") << '\n';
    return failures == 0 ? 0 : 1;
}
