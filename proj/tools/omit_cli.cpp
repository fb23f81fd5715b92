// omit_cli: command-line front end for the two-scatterer OMIT engine.
//
// Exit codes: 0 ok, 1 usage, 2 config invalid, 3 validation failure.

#include "omit/config.hpp"
#include "omit/errors.hpp"
#include "omit/figures.hpp"
#include "omit/mode_coupling.hpp"
#include "omit/range.hpp"
#include "omit/sweep.hpp"
#include "omit/table.hpp"
#include "omit/validation.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kConfigInvalid = 2, kValidationFailed = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommonOptions {
    std::string config_path;
    std::string out_path;
    std::string json_path;
    int workers = 1;
    std::optional<double> beta;
    std::optional<double> delta_a_over_omega_m;
    std::optional<double> p_pump_mw;
};

void add_common(CLI::App* cmd, CommonOptions& o) {
    cmd->add_option("--config", o.config_path, "JSON config (default: built-in reference parameters)");
    cmd->add_option("--out", o.out_path, "CSV output path (default: stdout)");
    cmd->add_option("--json", o.json_path, "also write a JSON mirror of the dataset");
    cmd->add_option("--workers", o.workers, "worker threads for grid evaluation")->check(CLI::Range(1, 1024));
    cmd->add_option("--beta", o.beta, "scatterer angle beta [rad]");
    cmd->add_option("--delta-a-over-omega-m", o.delta_a_over_omega_m, "pump detuning Delta_a / omega_m");
    cmd->add_option("--p-pump-mw", o.p_pump_mw, "pump power [mW]");
}

omit::Config load(const CommonOptions& o) {
    omit::Config c = o.config_path.empty() ? omit::reference_config() : omit::load_config_file(o.config_path);
    if (o.beta) {
        omit::apply_override(c, "beta", *o.beta);
    }
    if (o.delta_a_over_omega_m) {
        omit::apply_override(c, "delta_a_over_omega_m", *o.delta_a_over_omega_m);
    }
    if (o.p_pump_mw) {
        omit::apply_override(c, "p_pump_w", *o.p_pump_mw * 1e-3);
    }
    return c;
}

omit::Range parse_range(const std::string& text, const omit::Range& fallback) {
    if (text.empty()) {
        return fallback;
    }
    try {
        omit::Range r = omit::Range::parse(text);
        if (r.count < 2) {
            throw UsageError("range '" + text + "' needs count >= 2");
        }
        return r;
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

// Dataset to --out (or stdout), JSON mirror to --json.
void emit(const omit::Table& table, const CommonOptions& o) {
    if (o.out_path.empty()) {
        omit::write_csv(std::cout, table);
    } else {
        omit::write_file(o.out_path, omit::to_csv(table));
    }
    if (!o.json_path.empty()) {
        omit::write_file(o.json_path, omit::to_json(table));
    }
}

// Messages go to stdout when the dataset is in a file, else to stderr.
std::ostream& info(const CommonOptions& o) { return o.out_path.empty() ? std::cerr : std::cout; }

int run_ep_scan(const CommonOptions& o, const std::string& range_text) {
    const omit::Config c = load(o);
    const std::vector<double> betas = parse_range(range_text, c.sweep.beta_range).values();
    const omit::Table split = omit::splitting_table(c, betas);
    const omit::Table eta = omit::eta_table(c, betas);
    omit::Table out;
    out.columns = split.columns;
    out.columns.insert(out.columns.end(), eta.columns.begin() + 1, eta.columns.end());
    for (std::size_t i = 0; i < split.rows.size(); ++i) {
        std::vector<omit::Cell> row = split.rows[i];
        row.insert(row.end(), eta.rows[i].begin() + 1, eta.rows[i].end());
        out.add_row(std::move(row));
    }
    emit(out, o);

    std::ostream& msg = info(o);
    const double gamma_a = c.physical.gamma_a;
    for (const omit::EpRecord& ep : omit::critical_angles(c.physical)) {
        msg << (ep.near_ep ? "near-EP" : "EP") << " beta_c=" << omit::format_number(ep.beta_c)
            << " branch=" << omit::to_string(ep.branch)
            << " |domega|/gamma_a=" << omit::format_number(ep.residual / gamma_a)
            << " |J_other|/gamma_a=" << omit::format_number(std::abs(ep.j_other) / gamma_a) << '\n';
    }
    return kOk;
}

int run_spectrum(const CommonOptions& o, const std::string& range_text) {
    const omit::Config c = load(o);
    const std::vector<double> grid = parse_range(range_text, c.sweep.delta_p_range).values();
    emit(omit::spectrum_table(c, grid), o);
    return kOk;
}

int run_map(const CommonOptions& o, const std::string& axis1, const std::string& axis2,
            const std::vector<std::string>& fixed) {
    const omit::Config c = load(o);
    omit::SweepSpec spec;
    try {
        spec.axis1 = omit::SweepAxis::parse(axis1);
        if (!axis2.empty()) {
            spec.axis2 = omit::SweepAxis::parse(axis2);
        }
        spec.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    for (const std::string& item : fixed) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw UsageError("--set expects name=value, got '" + item + "'");
        }
        double value = 0.0;
        try {
            std::size_t used = 0;
            value = std::stod(item.substr(eq + 1), &used);
            if (used != item.size() - eq - 1) {
                throw std::invalid_argument("trailing characters");
            }
        } catch (const std::exception&) {
            throw UsageError("--set value is not a number: '" + item + "'");
        }
        spec.fixed.emplace_back(item.substr(0, eq), value);
    }
    spec.output_path = o.out_path;
    const omit::Table table = omit::run_sweep(spec, c, o.workers);
    emit(table, o);
    std::size_t failed = 0;
    const std::size_t err = table.column_index("error");
    for (const auto& row : table.rows) {
        failed += std::get<std::string>(row[err]).empty() ? 0 : 1;
    }
    if (failed > 0) {
        info(o) << failed << " of " << table.rows.size() << " nodes reported an error\n";
    }
    return kOk;
}

int run_figure(const CommonOptions& o, const std::string& id) {
    const omit::Config c = load(o);
    try {
        omit::figure_recipe(id);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    emit(omit::reproduce_figure(id, c, o.workers), o);
    return kOk;
}

int run_validate(const CommonOptions& o, const std::string& report_path) {
    const omit::Config c = load(o);
    const omit::ValidationReport report = omit::validate(c, o.workers);
    std::cout << report.to_text();
    if (!report_path.empty()) {
        const std::vector<double> betas{0.2, 0.4, 0.6};
        omit::write_file(report_path, omit::reconcile_closed_form(c, betas).to_markdown());
    }
    if (!o.out_path.empty()) {
        omit::Table t;
        t.columns = {"check", "status", "measured", "tolerance", "detail"};
        for (const auto& check : report.checks) {
            t.add_row({check.name, std::string(omit::to_string(check.status)), check.measured, check.tolerance,
                       check.detail});
        }
        omit::write_file(o.out_path, omit::to_csv(t));
    }
    return report.passed() ? kOk : kValidationFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"OMIT engine for a whispering-gallery resonator with two nanoscatterers"};
    app.require_subcommand(1);

    CommonOptions opts;
    std::string beta_range;
    std::string delta_p_range;
    std::string axis1;
    std::string axis2;
    std::vector<std::string> fixed;
    std::string figure_id;
    std::string report_path;

    CLI::App* ep = app.add_subcommand("ep-scan", "splitting and CCW/CW photon ratio vs beta, plus critical angles");
    add_common(ep, opts);
    ep->add_option("--beta-range", beta_range, "start:stop:count");

    CLI::App* spectrum = app.add_subcommand("spectrum", "probe transmission and group delay vs Delta_p at fixed beta");
    add_common(spectrum, opts);
    spectrum->add_option("--delta-p-range", delta_p_range, "Delta_p/omega_m as start:stop:count");

    CLI::App* map = app.add_subcommand("map", "1-D or 2-D grid sweep (axis2 varies fastest)");
    add_common(map, opts);
    map->add_option("--axis1", axis1, "name=start:stop:count")->required();
    map->add_option("--axis2", axis2, "name=start:stop:count");
    map->add_option("--set", fixed, "fixed config override name=value (repeatable)");

    CLI::App* figure = app.add_subcommand("figure", "dataset for a baked-in figure recipe");
    add_common(figure, opts);
    figure->add_option("id", figure_id, "figure id")->required();

    CLI::App* validate = app.add_subcommand("validate", "oracle cross-checks and invariant suites");
    add_common(validate, opts);
    validate->add_option("--report", report_path, "write the closed-form reconciliation report (markdown)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*ep) {
            return run_ep_scan(opts, beta_range);
        }
        if (*spectrum) {
            return run_spectrum(opts, delta_p_range);
        }
        if (*map) {
            return run_map(opts, axis1, axis2, fixed);
        }
        if (*figure) {
            return run_figure(opts, figure_id);
        }
        return run_validate(opts, report_path);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const omit::ConfigError& e) {
        std::cerr << "config invalid: " << e.what() << '\n';
        return kConfigInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
}
