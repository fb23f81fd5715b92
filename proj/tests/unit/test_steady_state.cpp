#include "omit/config.hpp"
#include "omit/mode_coupling.hpp"
#include "omit/oracles.hpp"
#include "omit/range.hpp"
#include "omit/steady_state.hpp"
#include "omit/sweep.hpp"

#include "doctest.h"

#include <cmath>
#include <numbers>

using namespace omit;

TEST_CASE("undriven cavity rests at zero") {
    Config c = reference_config();
    apply_override(c, "p_pump_w", 0.0);
    const CouplingState cs = coupling_at(c.physical, c.drive.delta_a, 0.2);
    const SteadyState s = solve_steady(c.physical, c.drive, cs);
    CHECK(s.x_bar == 0.0);
    CHECK(s.a_cw == cplx{});
    CHECK(s.a_ccw == cplx{});
    CHECK(s.n_bar == 0.0);
}

TEST_CASE("vanishing J2 empties the CCW mode") {
    const Config c = reference_config();
    CouplingState cs = coupling_at(c.physical, c.drive.delta_a, 0.3928);
    cs.j2 = 0.0;
    const SteadyState s = solve_steady(c.physical, c.drive, cs);
    CHECK(s.a_ccw == cplx{});
    CHECK(s.eta == 0.0);
    CHECK(s.x_bar > 0.0);
}

TEST_CASE("quintic agrees with fixed-point iteration") {
    const Config c = reference_config();
    const PhysicalParams& p = c.physical;
    for (double beta : linspace(0.0, 1.6, 200)) {
        const CouplingState cs = coupling_at(p, c.drive.delta_a, beta);
        const SteadyState s = solve_steady(p, c.drive, cs);
        const auto fp = oracle::fixed_point_steady(p, c.drive, cs);
        REQUIRE(fp.converged);
        CHECK(std::abs(fp.x_bar - s.x_bar) <= 1e-9 * std::abs(s.x_bar));
        CHECK(oracle::steady_residual(p, c.drive, cs, s) <= 1e-10);
        CHECK(s.branch_count == 1);
        CHECK(std::abs(std::norm(s.a_ccw) / std::norm(s.a_cw) - s.eta) <= 1e-12 * s.eta);
        CHECK(s.n_bar == doctest::Approx(std::norm(s.a_cw) + std::norm(s.a_ccw)));
    }
}

TEST_CASE("eta is periodic and dips where J2 vanishes") {
    const Config c = reference_config();
    const PhysicalParams& p = c.physical;
    const auto grid = linspace(0.0, 1.6, 200);
    const auto curve = eta_curve(p, c.drive, grid);
    std::vector<double> shifted;
    for (double b : grid) {
        shifted.push_back(b + std::numbers::pi / 4);
    }
    const auto again = eta_curve(p, c.drive, shifted);
    for (std::size_t i = 0; i < curve.size(); ++i) {
        CHECK(again[i].eta == doctest::Approx(curve[i].eta).epsilon(1e-9));
    }
    for (const auto& r : critical_angles(p)) {
        if (r.branch == EpBranch::kJ2Vanishes) {
            CHECK(eta_curve(p, c.drive, std::vector<double>{r.beta_c}).front().eta < 1e-4);
        }
    }
    // away from the EPs the CCW mode is strongly populated
    CHECK(curve.front().eta > 1e-3);
}

TEST_CASE("single scatterer: eta constant in beta") {
    Config c = reference_config();
    c.eps2_over_gamma_a = {};
    refresh(c);
    const auto curve = eta_curve(c.physical, c.drive, linspace(0.0, 1.6, 33));
    for (const auto& pt : curve) {
        CHECK(pt.eta == doctest::Approx(curve.front().eta).epsilon(1e-12));
    }
}

TEST_CASE("weak drive: displacement linear in power") {
    Config a = reference_config();
    Config b = reference_config();
    apply_override(a, "p_pump_w", 1e-9);
    apply_override(b, "p_pump_w", 2e-9);
    const CouplingState cs = coupling_at(a.physical, a.drive.delta_a, 0.2);
    const double xa = solve_steady(a.physical, a.drive, cs).x_bar;
    const double xb = solve_steady(b.physical, b.drive, cs).x_bar;
    CHECK(xb / xa == doctest::Approx(2.0).epsilon(0.01));
}

TEST_CASE("displacement map is the force balance") {
    const Config c = reference_config();
    const PhysicalParams& p = c.physical;
    const CouplingState cs = coupling_at(p, c.drive.delta_a, 0.6);
    const SteadyState s = solve_steady(p, c.drive, cs);
    const double e = amplitudes_from_power(p, c.drive).e_pump;
    CHECK(displacement_map(p, cs, e, s.x_bar) == doctest::Approx(s.x_bar).epsilon(1e-12));
    CHECK(s.x_bar == doctest::Approx(p.hbar * p.g() * s.n_bar / (p.m_eff * p.omega_m * p.omega_m)).epsilon(1e-12));
}

TEST_CASE("every real branch is reported and the smallest is selected") {
    Config c = reference_config();
    apply_override(c, "delta_a_over_omega_m", 0.0);
    apply_override(c, "p_pump_w", 1.0);
    c.eps1_over_gamma_a = {};
    c.eps2_over_gamma_a = {};
    refresh(c);
    const CouplingState cs = coupling_at(c.physical, c.drive.delta_a, 0.0);
    const SteadyState s = solve_steady(c.physical, c.drive, cs);
    CHECK(s.branch_count == static_cast<int>(s.branches.size()));
    CHECK(s.branch_count >= 1);
    for (double x : s.branches) {
        CHECK(std::abs(s.x_bar) <= std::abs(x));
    }
}
