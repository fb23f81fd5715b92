#include "omit/figures.hpp"

#include "omit/mode_coupling.hpp"
#include "omit/response.hpp"
#include "omit/steady_state.hpp"
#include "omit/sweep.hpp"

#include <stdexcept>

namespace omit {

Table splitting_table(const Config& config, std::span<const double> betas) {
    Table t;
    t.columns = {"beta", "re_domega", "im_domega", "abs_j1", "abs_j2"};
    for (const SplittingPoint& p : splitting_curve(config.physical, betas)) {
        t.add_row({p.beta, p.re_domega, p.im_domega, p.abs_j1, p.abs_j2});
    }
    return t;
}

Table eta_table(const Config& config, std::span<const double> betas) {
    Table t;
    t.columns = {"beta", "eta", "x_bar_m", "n_bar", "branch_count"};
    for (const EtaPoint& p : eta_curve(config.physical, config.drive, betas)) {
        t.add_row({p.beta, p.eta, p.x_bar, p.n_bar, std::int64_t{p.branch_count}});
    }
    return t;
}

Table spectrum_table(const Config& config, std::span<const double> delta_p_over_omega_m) {
    const PhysicalParams& params = config.physical;
    const CouplingState coupling = coupling_at(params, config.drive.delta_a, config.sweep.beta);
    const SteadyState steady = solve_steady(params, config.drive, coupling);
    std::vector<double> grid;
    grid.reserve(delta_p_over_omega_m.size());
    for (double v : delta_p_over_omega_m) {
        grid.push_back(v * params.omega_m);
    }
    Table t;
    t.columns = {"delta_p_over_omega_m", "transmission", "re_tp", "im_tp", "group_delay_s"};
    const auto points = transmission_spectrum(params, config.drive, coupling, steady, grid);
    for (std::size_t i = 0; i < points.size(); ++i) {
        const ResponsePoint& p = points[i];
        t.add_row({delta_p_over_omega_m[i], p.transmission, p.t_p.real(), p.t_p.imag(), p.group_delay});
    }
    return t;
}

const std::vector<std::string>& figure_ids() {
    static const std::vector<std::string> ids{"fig1b", "fig1c", "fig2a", "fig2b", "fig2c",
                                              "fig2d", "fig3a", "fig3b", "fig4a", "fig4b"};
    return ids;
}

FigureRecipe figure_recipe(std::string_view id) {
    FigureRecipe r;
    r.id = std::string(id);
    const Range p_pump_w{1e-4, 1e-2, 100};
    if (id == "fig1b") {
        r.kind = FigureKind::kSplitting;
    } else if (id == "fig1c") {
        r.kind = FigureKind::kEta;
    } else if (id == "fig2a") {
        r.kind = FigureKind::kSpectra;
        r.single_particle = true;
        r.include_bare_reference = true;
        r.betas = {0.0};
    } else if (id == "fig2b") {
        r.kind = FigureKind::kSpectra;
        r.betas = {0.2, 0.4, 0.6};
    } else if (id == "fig2c") {
        r.delta_p_over_omega_m = 0.13;
        r.axis1 = "beta";
        r.axis1_range = {0.0, 1.6, 801};
    } else if (id == "fig2d") {
        r.axis1 = "beta";
        r.axis1_range = {0.0, 1.6, 161};
        r.axis2 = "delta_p_over_omega_m";
        r.axis2_range = {-0.5, 0.5, 201};
    } else if (id == "fig3a") {
        r.delta_p_over_omega_m = 0.0;
        r.axis1 = "p_pump_w";
        r.axis1_range = p_pump_w;
        r.axis2 = "beta";
        r.axis2_range = {0.0, 1.6, 161};
    } else if (id == "fig3b") {
        r.delta_p_over_omega_m = 0.13;
        r.axis1 = "beta";
        r.axis1_range = {0.2, 0.4, 2};
        r.axis2 = "p_pump_w";
        r.axis2_range = p_pump_w;
    } else if (id == "fig4a") {
        r.kind = FigureKind::kSpectra;
        r.delta_a_over_omega_m = 0.87;
        r.betas = {0.2, 0.4, 0.6};
    } else if (id == "fig4b") {
        r.delta_a_over_omega_m = 0.87;
        r.delta_p_over_omega_m = 0.13;
        r.axis1 = "p_pump_w";
        r.axis1_range = p_pump_w;
        r.axis2 = "beta";
        r.axis2_range = {0.0, 1.6, 161};
    } else {
        throw std::invalid_argument("unknown figure id '" + std::string(id) + "'");
    }
    return r;
}

Table reproduce_figure(std::string_view id, const Config& config, int workers) {
    const FigureRecipe r = figure_recipe(id);
    Config c = config;
    apply_override(c, "p_pump_w", r.p_pump_w);
    apply_override(c, "delta_a_over_omega_m", r.delta_a_over_omega_m);
    apply_override(c, "delta_p_over_omega_m", r.delta_p_over_omega_m);
    if (r.single_particle) {
        c.eps2_over_gamma_a = {};
        refresh(c);
    }

    switch (r.kind) {
    case FigureKind::kSplitting:
        return splitting_table(c, r.beta_range.values());
    case FigureKind::kEta:
        return eta_table(c, r.beta_range.values());
    case FigureKind::kSpectra: {
        Table out;
        out.columns = {"series", "beta", "delta_p_over_omega_m", "transmission", "re_tp", "im_tp", "group_delay_s"};
        const std::vector<double> grid = r.delta_p_range.values();
        auto append = [&](const std::string& series, const Config& cfg) {
            const Table spectrum = spectrum_table(cfg, grid);
            for (const auto& row : spectrum.rows) {
                std::vector<Cell> full{series, cfg.sweep.beta};
                full.insert(full.end(), row.begin(), row.end());
                out.add_row(std::move(full));
            }
        };
        if (r.include_bare_reference) {
            Config bare = c;
            bare.eps1_over_gamma_a = {};
            bare.eps2_over_gamma_a = {};
            refresh(bare);
            append("no_particle", bare);
        }
        for (double beta : r.betas) {
            Config at = c;
            apply_override(at, "beta", beta);
            append(r.single_particle ? "single_particle" : "two_particles", at);
        }
        return out;
    }
    case FigureKind::kSweep: {
        SweepSpec spec;
        spec.axis1 = {r.axis1, r.axis1_range};
        if (!r.axis2.empty()) {
            spec.axis2 = SweepAxis{r.axis2, r.axis2_range};
        }
        return run_sweep(spec, c, workers);
    }
    }
    throw std::logic_error("unhandled figure kind");
}

} // namespace omit
