#include "omit/sweep.hpp"

#include "omit/errors.hpp"
#include "omit/mode_coupling.hpp"
#include "omit/parallel.hpp"
#include "omit/response.hpp"
#include "omit/steady_state.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace omit {

SweepAxis SweepAxis::parse(std::string_view text) {
    const auto eq = text.find('=');
    if (eq == std::string_view::npos || eq == 0) {
        throw std::invalid_argument("axis must be name=start:stop:count, got '" + std::string(text) + "'");
    }
    return SweepAxis{std::string(text.substr(0, eq)), Range::parse(text.substr(eq + 1))};
}

namespace {

void check_axis(const SweepAxis& axis) {
    if (std::find(std::begin(kSweepable), std::end(kSweepable), axis.name) == std::end(kSweepable)) {
        throw std::invalid_argument("'" + axis.name +
                                    "' is not sweepable (beta, delta_p_over_omega_m, p_pump_w, delta_a_over_omega_m)");
    }
    if (axis.range.count < 2) {
        throw std::invalid_argument("axis '" + axis.name + "' needs count >= 2");
    }
}

} // namespace

void SweepSpec::validate() const {
    check_axis(axis1);
    if (axis2) {
        check_axis(*axis2);
        if (axis2->name == axis1.name) {
            throw std::invalid_argument("both axes sweep '" + axis1.name + "'");
        }
    }
}

void apply_override(Config& config, const std::string& name, double value) {
    PhysicalParams& p = config.physical;
    if (name == "omega_a_hz") {
        p.omega_a = value;
    } else if (name == "gamma_a_hz") {
        p.gamma_a = value;
    } else if (name == "gamma_ex_hz") {
        p.gamma_ex = value;
    } else if (name == "omega_m_hz") {
        p.omega_m = value;
    } else if (name == "gamma_m_hz") {
        p.gamma_m = value;
    } else if (name == "m_eff_kg") {
        p.m_eff = value;
    } else if (name == "radius_m") {
        p.radius = value;
    } else if (name == "azimuthal_m") {
        if (std::floor(value) != value || !(value >= 1.0) || value > 1e6) {
            throw ConfigError(name, "must be an integer >= 1");
        }
        p.azimuthal_m = static_cast<int>(value);
    } else if (name == "eps1_over_gamma_a.re") {
        config.eps1_over_gamma_a.real(value);
    } else if (name == "eps1_over_gamma_a.im") {
        config.eps1_over_gamma_a.imag(value);
    } else if (name == "eps2_over_gamma_a.re") {
        config.eps2_over_gamma_a.real(value);
    } else if (name == "eps2_over_gamma_a.im") {
        config.eps2_over_gamma_a.imag(value);
    } else if (name == "p_pump_w") {
        config.drive.p_pump = value;
    } else if (name == "p_probe_w") {
        config.drive.p_probe = value;
    } else if (name == "delta_a_over_omega_m") {
        config.delta_a_over_omega_m = value;
    } else if (name == "beta") {
        config.sweep.beta = value;
    } else if (name == "delta_p_over_omega_m") {
        config.sweep.delta_p_over_omega_m = value;
    } else {
        throw ConfigError(name, "unknown or non-numeric field");
    }
    refresh(config);
    p.validate();
    config.drive.validate();
}

NodeResult evaluate_node(const Config& base, double beta, double delta_p_over_omega_m, double p_pump_w,
                         double delta_a_over_omega_m) {
    NodeResult r;
    r.beta = beta;
    r.delta_p_over_omega_m = delta_p_over_omega_m;
    r.p_pump_w = p_pump_w;
    r.delta_a_over_omega_m = delta_a_over_omega_m;
    try {
        Config c = base;
        apply_override(c, "p_pump_w", p_pump_w);
        apply_override(c, "delta_a_over_omega_m", delta_a_over_omega_m);
        apply_override(c, "delta_p_over_omega_m", delta_p_over_omega_m);
        const PhysicalParams& params = c.physical;
        const CouplingState coupling = coupling_at(params, c.drive.delta_a, beta);
        const SteadyState steady = solve_steady(params, c.drive, coupling);
        const ResponsePoint point =
            response_at(params, c.drive, coupling, steady, delta_p_over_omega_m * params.omega_m);
        r.transmission = point.transmission;
        r.re_tp = point.t_p.real();
        r.im_tp = point.t_p.imag();
        r.group_delay_s = point.group_delay;
        r.eta = steady.eta;
        r.x_bar_m = steady.x_bar;
        r.branch_count = steady.branch_count;
        if (!point.group_delay_converged) {
            r.error = "group delay not converged";
        }
    } catch (const std::exception& e) {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        r.transmission = r.re_tp = r.im_tp = r.group_delay_s = r.eta = r.x_bar_m = nan;
        r.branch_count = 0;
        r.error = e.what();
    }
    return r;
}

std::vector<std::string> sweep_columns() {
    return {"beta",   "delta_p_over_omega_m", "p_pump_w", "delta_a_over_omega_m", "transmission", "re_tp", "im_tp",
            "group_delay_s", "eta", "x_bar_m", "branch_count", "error"};
}

Table run_sweep(const SweepSpec& spec, const Config& config, int workers) {
    spec.validate();
    Config base = config;
    for (const auto& [name, value] : spec.fixed) {
        apply_override(base, name, value);
    }

    const std::vector<double> outer = spec.axis1.range.values();
    const std::vector<double> inner = spec.axis2 ? spec.axis2->range.values() : std::vector<double>{0.0};
    const std::size_t n_inner = inner.size();
    std::vector<NodeResult> results(outer.size() * n_inner);

    parallel_for(results.size(), workers, [&](std::size_t index) {
        double beta = base.sweep.beta;
        double delta_p = base.sweep.delta_p_over_omega_m;
        double p_pump = base.drive.p_pump;
        double delta_a = base.delta_a_over_omega_m;
        auto assign = [&](const std::string& name, double value) {
            if (name == "beta") {
                beta = value;
            } else if (name == "delta_p_over_omega_m") {
                delta_p = value;
            } else if (name == "p_pump_w") {
                p_pump = value;
            } else {
                delta_a = value;
            }
        };
        assign(spec.axis1.name, outer[index / n_inner]);
        if (spec.axis2) {
            assign(spec.axis2->name, inner[index % n_inner]);
        }
        results[index] = evaluate_node(base, beta, delta_p, p_pump, delta_a);
    });

    Table table;
    table.columns = sweep_columns();
    for (const NodeResult& r : results) {
        table.add_row({r.beta, r.delta_p_over_omega_m, r.p_pump_w, r.delta_a_over_omega_m, r.transmission, r.re_tp,
                       r.im_tp, r.group_delay_s, r.eta, r.x_bar_m, std::int64_t{r.branch_count}, r.error});
    }
    return table;
}

} // namespace omit
