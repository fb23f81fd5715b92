#pragma once

#include "omit/range.hpp"
#include "omit/types.hpp"

#include <string>
#include <string_view>

namespace omit {

// Sweep descriptors: the only part of a config that has defaults.
struct SweepDefaults {
    double beta = 0.2;
    double delta_p_over_omega_m = 0.13;
    Range beta_range{0.0, 1.6, 321};
    Range delta_p_range{-0.5, 0.5, 1001};
    Range p_pump_mw_range{0.1, 10.0, 100};

    friend bool operator==(const SweepDefaults&, const SweepDefaults&) = default;
};

// A loaded configuration document. The document-level ratios are kept
// alongside the scaled records so that serialize() reproduces them exactly.
struct Config {
    PhysicalParams physical;
    DriveParams drive;
    SweepDefaults sweep;

    cplx eps1_over_gamma_a{};
    cplx eps2_over_gamma_a{};
    double delta_a_over_omega_m = 0.0;
};

// Parses a flat JSON object. Every physical field is required; complex
// values are `[re, im]`. Throws ConfigError naming the field.
Config load_config(std::string_view text);
Config load_config_file(const std::string& path);

std::string serialize(const Config& config);

// Rebuilds `physical`/`drive` after a ratio or sweep field was edited.
void refresh(Config& config);

// Built-in reference parameter set: R = 34.5 um,
// omega_a = 193e12, gamma_a = gamma_ex = 6.43e6, m_eff = 50 ng,
// omega_m = 147e6, gamma_m = 0.24e6, m = 4, P_l = 1 mW, Delta_a = omega_m.
Config reference_config();

} // namespace omit
