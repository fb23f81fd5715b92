#pragma once

#include "omit/config.hpp"
#include "omit/response.hpp"

#include <span>
#include <string>
#include <vector>

namespace omit {

enum class CheckStatus { kPass, kFail, kDocumented };

const char* to_string(CheckStatus status);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::kPass;
    double measured = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

struct ValidationReport {
    std::vector<CheckResult> checks;

    // kDocumented checks do not fail the report.
    bool passed() const;
    const CheckResult* find(const std::string& name) const;
    std::string to_text() const;
};

// Runs every oracle cross-check and invariant suite on `config`.
ValidationReport validate(const Config& config, int workers = 1);

struct ReconciliationRow {
    double beta = 0.0;
    ClosedFormVariant variant = ClosedFormVariant::kConsistent;
    double max_rel_deviation = 0.0; // |closed - direct| / |direct| over the xi grid
    double worst_delta_p_over_omega_m = 0.0;
    int poles = 0;
};

struct ReconciliationReport {
    int xi_points = 0;
    double max_direct_residual = 0.0;
    std::vector<ReconciliationRow> rows;

    double max_deviation(ClosedFormVariant variant) const;
    std::string to_markdown() const;
};

// Compares both closed-form variants with the direct solve on
// delta_p/omega_m in [-0.5, 0.5] (`xi_points` nodes) at each beta.
ReconciliationReport reconcile_closed_form(const Config& config, std::span<const double> betas, int xi_points = 400);

} // namespace omit
