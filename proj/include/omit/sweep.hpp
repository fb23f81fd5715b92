#pragma once

#include "omit/config.hpp"
#include "omit/range.hpp"
#include "omit/table.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace omit {

// Sweepable parameter names. p_pump_w is in watts.
inline constexpr std::string_view kSweepable[] = {"beta", "delta_p_over_omega_m", "p_pump_w",
                                                  "delta_a_over_omega_m"};

struct SweepAxis {
    std::string name;
    Range range;

    // `name=start:stop:count`; throws std::invalid_argument.
    static SweepAxis parse(std::string_view text);
};

struct SweepSpec {
    SweepAxis axis1;
    std::optional<SweepAxis> axis2;
    std::vector<std::pair<std::string, double>> fixed; // config-field overrides
    std::string output_path;

    // Throws std::invalid_argument for unknown names or count < 2.
    void validate() const;
};

// Sets a numeric config field (document key, or beta / delta_p_over_omega_m)
// and rebuilds the derived records. Throws ConfigError for unknown keys or
// values that break an invariant.
void apply_override(Config& config, const std::string& name, double value);

// One grid node: coupling, steady state and probe response.
struct NodeResult {
    double beta = 0.0;
    double delta_p_over_omega_m = 0.0;
    double p_pump_w = 0.0;
    double delta_a_over_omega_m = 0.0;
    double transmission = 0.0;
    double re_tp = 0.0;
    double im_tp = 0.0;
    double group_delay_s = 0.0;
    double eta = 0.0;
    double x_bar_m = 0.0;
    int branch_count = 0;
    std::string error; // empty on success
};

NodeResult evaluate_node(const Config& base, double beta, double delta_p_over_omega_m, double p_pump_w,
                         double delta_a_over_omega_m);

// Columns of run_sweep output.
std::vector<std::string> sweep_columns();

// Long-form grid, one row per node, axis2 fastest. Failed nodes keep their
// row with the message in `error`.
Table run_sweep(const SweepSpec& spec, const Config& config, int workers = 1);

} // namespace omit
