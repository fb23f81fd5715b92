#pragma once

#include "omit/config.hpp"
#include "omit/range.hpp"
#include "omit/table.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace omit {

// --- dataset builders shared by the CLI and the figure recipes ---

// beta,re_domega,im_domega,abs_j1,abs_j2
Table splitting_table(const Config& config, std::span<const double> betas);

// beta,eta,x_bar_m,n_bar,branch_count
Table eta_table(const Config& config, std::span<const double> betas);

// delta_p_over_omega_m,transmission,re_tp,im_tp,group_delay_s at config.sweep.beta
Table spectrum_table(const Config& config, std::span<const double> delta_p_over_omega_m);

// --- figure recipes ---

enum class FigureKind {
    kSplitting,  // splitting curve vs beta
    kEta,        // relative photon number vs beta
    kSpectra,    // transmission spectra at a list of beta values
    kSweep,      // run_sweep over one or two axes
};

struct FigureRecipe {
    std::string id;
    FigureKind kind = FigureKind::kSweep;
    double p_pump_w = 1e-3;
    double delta_a_over_omega_m = 1.0;
    double delta_p_over_omega_m = 0.0; // fixed probe detuning for sweeps
    bool single_particle = false;      // eps2 := 0
    bool include_bare_reference = false; // extra spectrum with eps1 = eps2 = 0
    std::vector<double> betas;         // spectra curves
    Range beta_range{0.0, 1.6, 1601};
    Range delta_p_range{-0.5, 0.5, 1001};
    std::string axis1;                 // sweep axes (kSweep)
    Range axis1_range;
    std::string axis2;
    Range axis2_range;
};

const std::vector<std::string>& figure_ids();

// Throws std::invalid_argument for an unknown id.
FigureRecipe figure_recipe(std::string_view id);

// Runs the recipe on top of `config` (resonator constants and probe power
// come from the config; drive settings from the recipe).
Table reproduce_figure(std::string_view id, const Config& config, int workers = 1);

} // namespace omit
