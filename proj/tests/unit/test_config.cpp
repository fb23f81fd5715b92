#include "omit/config.hpp"
#include "omit/errors.hpp"

#include "doctest.h"

#include "json.hpp"

using namespace omit;
using json = nlohmann::ordered_json;

namespace {

json reference_doc() {
    return json{{"omega_a_hz", 193e12},
                {"gamma_a_hz", 6.43e6},
                {"gamma_ex_hz", 6.43e6},
                {"omega_m_hz", 147e6},
                {"gamma_m_hz", 0.24e6},
                {"m_eff_kg", 50e-12},
                {"radius_m", 34.5e-6},
                {"azimuthal_m", 4},
                {"eps1_over_gamma_a", {1.5, -0.1}},
                {"eps2_over_gamma_a", {1.4999, -0.1015}},
                {"p_pump_w", 1e-3},
                {"p_probe_w", 1e-9},
                {"delta_a_over_omega_m", 1.0}};
}

std::string field_of(const json& doc) {
    try {
        load_config(doc.dump());
    } catch (const ConfigError& e) {
        return e.field();
    }
    return {};
}

} // namespace

TEST_CASE("reference document is accepted") {
    const Config c = load_config(reference_doc().dump());
    CHECK(c.physical.radius == 34.5e-6);
    CHECK(c.physical.azimuthal_m == 4);
    CHECK(c.physical.eps1 == cplx(1.5, -0.1) * 6.43e6);
    CHECK(c.physical.eps2 == cplx(1.4999, -0.1015) * 6.43e6);
    CHECK(c.drive.delta_a == 147e6);
    // sweep descriptors default
    CHECK(c.sweep.beta == 0.2);
    CHECK(c.sweep.delta_p_over_omega_m == 0.13);
    CHECK(c.drive.xi == doctest::Approx(1.13 * 147e6));
}

TEST_CASE("negative gamma_a is rejected") {
    json doc = reference_doc();
    doc["gamma_a_hz"] = -1.0;
    CHECK(field_of(doc) == "gamma_a_hz");
}

TEST_CASE("missing eps2 is rejected naming it") {
    json doc = reference_doc();
    doc.erase("eps2_over_gamma_a");
    CHECK(field_of(doc).find("eps2") != std::string::npos);
}

TEST_CASE("malformed fields") {
    json doc = reference_doc();
    doc["omega_m_hz"] = "147e6";
    CHECK(field_of(doc) == "omega_m_hz");
    doc = reference_doc();
    doc["eps1_over_gamma_a"] = {1.5};
    CHECK(field_of(doc) == "eps1_over_gamma_a");
    doc = reference_doc();
    doc["azimuthal_m"] = 2.5;
    CHECK(field_of(doc) == "azimuthal_m");
    doc = reference_doc();
    doc["hbar"] = 1.0;
    CHECK(field_of(doc) == "hbar");
    doc = reference_doc();
    doc["beta_range"] = "0:1:1";
    CHECK(field_of(doc) == "beta_range");
    doc = reference_doc();
    doc["gamma_m_hz"] = 0.0;
    CHECK(field_of(doc) == "gamma_m_hz");
    CHECK_THROWS_AS(load_config("{not json"), ConfigError);
    CHECK_THROWS_AS(load_config("[1, 2]"), ConfigError);
}

TEST_CASE("serialize round trip is exact") {
    json doc = reference_doc();
    doc["beta"] = 0.3926;
    doc["delta_p_range"] = "-0.25:0.25:11";
    const Config a = load_config(doc.dump());
    const std::string text = serialize(a);
    const Config b = load_config(text);
    CHECK(serialize(b) == text);
    CHECK(b.physical.eps2 == a.physical.eps2);
    CHECK(b.physical.m_eff == a.physical.m_eff);
    CHECK(b.drive.xi == a.drive.xi);
    CHECK(b.sweep == a.sweep);
}

TEST_CASE("built-in reference matches the shipped document") {
    const Config c = reference_config();
    CHECK(load_config(serialize(c)).physical.omega_a == 193e12);
    CHECK(c.drive.p_pump == 1e-3);
    CHECK(c.delta_a_over_omega_m == 1.0);
}
