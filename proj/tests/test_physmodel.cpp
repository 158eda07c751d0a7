#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <numbers>

#include "mobius/physmodel.hpp"

using namespace mobius;

namespace {

RawModel table_raw() {
    RawModel raw;
    raw.potential = {0.2, 1.0, 1.0, 0.1, 0.3, 0.2};
    raw.constants = PhysicalConstants::natural();
    return raw;
}

} // namespace

TEST_CASE("validate accepts the canonical configuration") {
    const ModelParams model = validate(table_raw());
    CHECK(model.potential().V0 == 0.2);
    CHECK(model.constants().hbar == 1.0);
}

TEST_CASE("validate rejects alpha = 0") {
    RawModel raw = table_raw();
    raw.potential.alpha = 0.0;
    CHECK_THROWS_AS(validate(raw), DomainError);
    try {
        validate(raw);
    } catch (const DomainError& e) {
        CHECK(e.field() == "alpha");
    }
}

TEST_CASE("validate rejects mixed-sign q and eta by default") {
    RawModel raw = table_raw();
    raw.potential.eta = -0.3;
    CHECK_THROWS_AS(validate(raw), DomainError);

    ValidationOptions opt;
    opt.allow_mixed_sign_q_eta = true;
    CHECK_NOTHROW(validate(raw, opt));
}

TEST_CASE("validate rejects nonpositive constants and negative tau0") {
    RawModel raw = table_raw();
    raw.constants.mu = 0.0;
    CHECK_THROWS_AS(validate(raw), DomainError);

    raw = table_raw();
    raw.field.tau0 = -0.1;
    CHECK_THROWS_AS(validate(raw), DomainError);
}

TEST_CASE("validate is idempotent") {
    const ModelParams model = validate(table_raw());
    const ModelParams again = validate(model.raw());
    CHECK(model == again);
}

TEST_CASE("effective tau of both flux models") {
    FieldConfig f;
    f.tau0 = 0.2;

    SUBCASE("zeta = 0 makes the models coincide for any tau0") {
        f.zeta = 0.0;
        for (int i = 0; i <= 40; ++i) {
            f.tau0 = 0.05 * i;
            f.flux_model = FluxModel::Linear;
            const double lin = effective_tau(f);
            f.flux_model = FluxModel::Exponential;
            CHECK(lin == effective_tau(f));
            CHECK(lin == f.tau0);
        }
    }

    SUBCASE("zeta = 2") {
        f.zeta = 2.0;
        f.flux_model = FluxModel::Linear;
        CHECK(effective_tau(f) == doctest::Approx(0.4).epsilon(1e-15));
        f.flux_model = FluxModel::Exponential;
        CHECK(effective_tau(f) ==
              doctest::Approx(0.54365636569180902).epsilon(1e-14));
    }
}

TEST_CASE("effective tau is monotone non-decreasing in zeta") {
    for (const FluxModel fm : {FluxModel::Linear, FluxModel::Exponential}) {
        double prev = -1.0;
        for (int i = 0; i <= 50; ++i) {
            FieldConfig f;
            f.tau0 = 0.7;
            f.zeta = -2.0 + 0.2 * i;
            f.flux_model = fm;
            const double t = effective_tau(f);
            CHECK(t >= prev);
            prev = t;
        }
    }
}

TEST_CASE("zeta from flux") {
    const auto c = PhysicalConstants::natural();
    CHECK(zeta_from_flux(0.0, c) == 0.0);
    const double phi0 = 2.0 * std::numbers::pi; // one flux quantum, natural units
    CHECK(zeta_from_flux(phi0, c) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(zeta_from_flux(std::numbers::pi, c) ==
          doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("json model round trip") {
    RawModel raw = table_raw();
    raw.field.tau0 = 0.2;
    raw.field.zeta = 0.4;
    raw.field.flux_model = FluxModel::Exponential;
    const ModelParams model = validate(raw);

    const std::string text = model_to_json_text(model);
    const ModelParams back = model_from_json_text(text);
    CHECK(model == back);
}

TEST_CASE("config file round trip") {
    RawModel raw = table_raw();
    raw.field.zeta = 1.5;
    const ModelParams model = validate(raw);
    save_model(model, "model_roundtrip.json");
    const ModelParams back = load_model("model_roundtrip.json");
    CHECK(model == back);
    std::remove("model_roundtrip.json");
}

TEST_CASE("json parsing reports bad configs as domain errors") {
    CHECK_THROWS_AS(model_from_json_text("{not json"), DomainError);
    CHECK_THROWS_AS(model_from_json_text("{\"V0\": 0.2}"), DomainError);
    CHECK_THROWS_AS(
        model_from_json_text(
            R"({"V0":0.2,"a":1,"b":1,"q":0.1,"eta":0.3,"alpha":0.2,
                "tau0":0,"zeta":0,"flux_model":"sideways","units":"natural"})"),
        DomainError);
}

TEST_CASE("custom units require explicit constants") {
    const std::string text =
        R"({"V0":0.2,"a":1,"b":1,"q":0.1,"eta":0.3,"alpha":0.2,
            "tau0":0,"zeta":0,"flux_model":"linear","units":"custom",
            "hbar":2,"mu":3,"e_charge":1,"c_light":1,"k_B":1})";
    const ModelParams model = model_from_json_text(text);
    CHECK(model.constants().hbar == 2.0);
    CHECK(model.constants().mu == 3.0);
}
