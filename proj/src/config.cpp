#include "omit/config.hpp"

#include "omit/errors.hpp"

#include "json.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace omit {

namespace {

using json = nlohmann::ordered_json;

const std::set<std::string>& known_fields() {
    static const std::set<std::string> fields{
        "omega_a_hz", "gamma_a_hz", "gamma_ex_hz", "omega_m_hz", "gamma_m_hz",
        "m_eff_kg", "radius_m", "azimuthal_m", "eps1_over_gamma_a", "eps2_over_gamma_a",
        "p_pump_w", "p_probe_w", "delta_a_over_omega_m",
        "beta", "delta_p_over_omega_m", "beta_range", "delta_p_range", "p_pump_mw_range"};
    return fields;
}

const json& required(const json& doc, const char* field) {
    auto it = doc.find(field);
    if (it == doc.end()) {
        throw ConfigError(field, "required field is missing");
    }
    return *it;
}

double as_number(const json& value, const char* field) {
    if (!value.is_number()) {
        throw ConfigError(field, "must be a number");
    }
    return value.get<double>();
}

double number_field(const json& doc, const char* field) { return as_number(required(doc, field), field); }

cplx complex_field(const json& doc, const char* field) {
    const json& value = required(doc, field);
    if (!value.is_array() || value.size() != 2 || !value[0].is_number() || !value[1].is_number()) {
        throw ConfigError(field, "must be a [re, im] pair of numbers");
    }
    return {value[0].get<double>(), value[1].get<double>()};
}

Range range_field(const json& doc, const char* field, Range fallback) {
    auto it = doc.find(field);
    if (it == doc.end()) {
        return fallback;
    }
    if (!it->is_string()) {
        throw ConfigError(field, "must be a \"start:stop:count\" string");
    }
    try {
        Range r = Range::parse(it->get<std::string>());
        if (r.count < 2) {
            throw ConfigError(field, "count must be >= 2");
        }
        return r;
    } catch (const std::invalid_argument& e) {
        throw ConfigError(field, e.what());
    }
}

} // namespace

void refresh(Config& config) {
    PhysicalParams& p = config.physical;
    p.eps1 = config.eps1_over_gamma_a * p.gamma_a;
    p.eps2 = config.eps2_over_gamma_a * p.gamma_a;
    config.drive.delta_a = config.delta_a_over_omega_m * p.omega_m;
    config.drive.set_delta_p(config.sweep.delta_p_over_omega_m * p.omega_m);
}

Config load_config(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ConfigError("document", std::string("not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ConfigError("document", "must be a flat JSON object");
    }
    for (const auto& [key, _] : doc.items()) {
        if (!known_fields().count(key)) {
            throw ConfigError(key, "unknown field");
        }
    }

    Config c;
    PhysicalParams& p = c.physical;
    p.omega_a = number_field(doc, "omega_a_hz");
    p.gamma_a = number_field(doc, "gamma_a_hz");
    p.gamma_ex = number_field(doc, "gamma_ex_hz");
    p.omega_m = number_field(doc, "omega_m_hz");
    p.gamma_m = number_field(doc, "gamma_m_hz");
    p.m_eff = number_field(doc, "m_eff_kg");
    p.radius = number_field(doc, "radius_m");

    const json& m = required(doc, "azimuthal_m");
    const double m_value = as_number(m, "azimuthal_m");
    if (!(m_value >= 1.0) || std::floor(m_value) != m_value || m_value > 1e6) {
        throw ConfigError("azimuthal_m", "must be an integer >= 1");
    }
    p.azimuthal_m = static_cast<int>(m_value);

    c.eps1_over_gamma_a = complex_field(doc, "eps1_over_gamma_a");
    c.eps2_over_gamma_a = complex_field(doc, "eps2_over_gamma_a");
    c.drive.p_pump = number_field(doc, "p_pump_w");
    c.drive.p_probe = number_field(doc, "p_probe_w");
    c.delta_a_over_omega_m = number_field(doc, "delta_a_over_omega_m");

    if (auto it = doc.find("beta"); it != doc.end()) {
        c.sweep.beta = as_number(*it, "beta");
    }
    if (auto it = doc.find("delta_p_over_omega_m"); it != doc.end()) {
        c.sweep.delta_p_over_omega_m = as_number(*it, "delta_p_over_omega_m");
    }
    c.sweep.beta_range = range_field(doc, "beta_range", c.sweep.beta_range);
    c.sweep.delta_p_range = range_field(doc, "delta_p_range", c.sweep.delta_p_range);
    c.sweep.p_pump_mw_range = range_field(doc, "p_pump_mw_range", c.sweep.p_pump_mw_range);

    p.validate();
    refresh(c);
    c.drive.validate();
    return c;
}

Config load_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("document", "cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_config(buf.str());
}

std::string serialize(const Config& c) {
    const PhysicalParams& p = c.physical;
    json doc = json::object();
    doc["omega_a_hz"] = p.omega_a;
    doc["gamma_a_hz"] = p.gamma_a;
    doc["gamma_ex_hz"] = p.gamma_ex;
    doc["omega_m_hz"] = p.omega_m;
    doc["gamma_m_hz"] = p.gamma_m;
    doc["m_eff_kg"] = p.m_eff;
    doc["radius_m"] = p.radius;
    doc["azimuthal_m"] = p.azimuthal_m;
    doc["eps1_over_gamma_a"] = {c.eps1_over_gamma_a.real(), c.eps1_over_gamma_a.imag()};
    doc["eps2_over_gamma_a"] = {c.eps2_over_gamma_a.real(), c.eps2_over_gamma_a.imag()};
    doc["p_pump_w"] = c.drive.p_pump;
    doc["p_probe_w"] = c.drive.p_probe;
    doc["delta_a_over_omega_m"] = c.delta_a_over_omega_m;
    doc["beta"] = c.sweep.beta;
    doc["delta_p_over_omega_m"] = c.sweep.delta_p_over_omega_m;
    doc["beta_range"] = c.sweep.beta_range.to_string();
    doc["delta_p_range"] = c.sweep.delta_p_range.to_string();
    doc["p_pump_mw_range"] = c.sweep.p_pump_mw_range.to_string();
    return doc.dump(2) + "\n";
}

Config reference_config() {
    Config c;
    PhysicalParams& p = c.physical;
    p.omega_a = 193e12;
    p.gamma_a = 6.43e6;
    p.gamma_ex = 6.43e6;
    p.omega_m = 147e6;
    p.gamma_m = 0.24e6;
    p.m_eff = 50e-12;
    p.radius = 34.5e-6;
    p.azimuthal_m = 4;
    c.eps1_over_gamma_a = {1.5, -0.1};
    c.eps2_over_gamma_a = {1.4999, -0.1015};
    c.drive.p_pump = 1e-3;
    c.drive.p_probe = 1e-9;
    c.delta_a_over_omega_m = 1.0;
    refresh(c);
    return c;
}

} // namespace omit
