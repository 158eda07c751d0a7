#include "mobius/physmodel.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

namespace mobius {

std::string to_string(FluxModel f) {
    return f == FluxModel::Linear ? "linear" : "exponential";
}

FluxModel flux_model_from_string(const std::string& s) {
    if (s == "linear") return FluxModel::Linear;
    if (s == "exponential") return FluxModel::Exponential;
    throw DomainError("flux_model", "expected \"linear\" or \"exponential\", got \"" + s + '"');
}

ModelParams ModelParams::with_field(const FieldConfig& f) const {
    RawModel r = raw_;
    r.field = f;
    return validate(r);
}

static void require_finite(const char* name, double v) {
    if (!std::isfinite(v)) throw DomainError(name, "must be finite");
}

ModelParams validate(const RawModel& in, const ValidationOptions& opt) {
    const auto& p = in.potential;
    require_finite("V0", p.V0);
    require_finite("a", p.a);
    require_finite("b", p.b);
    require_finite("q", p.q);
    require_finite("eta", p.eta);
    require_finite("alpha", p.alpha);
    if (!(p.alpha > 0.0)) throw DomainError("alpha", "screening parameter must be > 0");
    if (p.q == 0.0) throw DomainError("q", "must be nonzero");
    if (p.eta == 0.0) throw DomainError("eta", "must be nonzero");
    if (!opt.allow_mixed_sign_q_eta && !(p.q * p.eta > 0.0))
        throw DomainError("q*eta",
                          "q and eta must have the same sign so the potential "
                          "denominator never vanishes for rho >= 0");

    const auto& c = in.constants;
    if (!(c.hbar > 0.0)) throw DomainError("hbar", "must be > 0");
    if (!(c.mu > 0.0)) throw DomainError("mu", "must be > 0");
    if (!(c.e_charge > 0.0)) throw DomainError("e_charge", "must be > 0");
    if (!(c.c_light > 0.0)) throw DomainError("c_light", "must be > 0");
    if (!(c.k_B > 0.0)) throw DomainError("k_B", "must be > 0");

    const auto& f = in.field;
    require_finite("tau0", f.tau0);
    require_finite("zeta", f.zeta);
    if (f.tau0 < 0.0) throw DomainError("tau0", "must be >= 0");

    return ModelParams(in);
}

bool operator==(const PotentialParams& a, const PotentialParams& b) {
    return a.V0 == b.V0 && a.a == b.a && a.b == b.b && a.q == b.q &&
           a.eta == b.eta && a.alpha == b.alpha;
}

bool operator==(const PhysicalConstants& a, const PhysicalConstants& b) {
    return a.hbar == b.hbar && a.mu == b.mu && a.e_charge == b.e_charge &&
           a.c_light == b.c_light && a.k_B == b.k_B;
}

bool operator==(const FieldConfig& a, const FieldConfig& b) {
    return a.tau0 == b.tau0 && a.zeta == b.zeta && a.flux_model == b.flux_model;
}

bool operator==(const ModelParams& a, const ModelParams& b) {
    return a.potential() == b.potential() && a.constants() == b.constants() &&
           a.field() == b.field();
}

double effective_tau(const FieldConfig& field) {
    if (field.flux_model == FluxModel::Linear)
        return field.tau0 * (1.0 + field.zeta / 2.0);
    return field.tau0 * std::exp(field.zeta / 2.0);
}

double zeta_from_flux(double phi_AB, const PhysicalConstants& constants) {
    const double phi0 = 2.0 * std::numbers::pi * constants.hbar *
                        constants.c_light / constants.e_charge;
    return phi_AB / phi0;
}

ModelParams model_from_json_text(const std::string& text,
                                 const ValidationOptions& opt) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DomainError("config", std::string("invalid JSON: ") + e.what());
    }

    RawModel raw;
    auto need = [&](const char* key) -> double {
        if (!j.contains(key))
            throw DomainError(key, "missing required config key");
        if (!j[key].is_number())
            throw DomainError(key, "must be a number");
        return j[key].get<double>();
    };
    raw.potential.V0 = need("V0");
    raw.potential.a = need("a");
    raw.potential.b = need("b");
    raw.potential.q = need("q");
    raw.potential.eta = need("eta");
    raw.potential.alpha = need("alpha");
    raw.field.tau0 = need("tau0");
    raw.field.zeta = need("zeta");
    if (!j.contains("flux_model") || !j["flux_model"].is_string())
        throw DomainError("flux_model", "missing or not a string");
    raw.field.flux_model = flux_model_from_string(j["flux_model"].get<std::string>());

    const std::string units =
        j.contains("units") ? j["units"].get<std::string>() : "natural";
    if (units == "natural") {
        raw.constants = PhysicalConstants::natural();
    } else if (units == "custom") {
        raw.constants.hbar = need("hbar");
        raw.constants.mu = need("mu");
        raw.constants.e_charge = need("e_charge");
        raw.constants.c_light = need("c_light");
        raw.constants.k_B = need("k_B");
    } else {
        throw DomainError("units", "expected \"natural\" or \"custom\"");
    }
    return validate(raw, opt);
}

std::string model_to_json_text(const ModelParams& model) {
    nlohmann::json j;
    const auto& p = model.potential();
    j["V0"] = p.V0;
    j["a"] = p.a;
    j["b"] = p.b;
    j["q"] = p.q;
    j["eta"] = p.eta;
    j["alpha"] = p.alpha;
    j["tau0"] = model.field().tau0;
    j["zeta"] = model.field().zeta;
    j["flux_model"] = to_string(model.field().flux_model);
    const auto& c = model.constants();
    if (c == PhysicalConstants::natural()) {
        j["units"] = "natural";
    } else {
        j["units"] = "custom";
        j["hbar"] = c.hbar;
        j["mu"] = c.mu;
        j["e_charge"] = c.e_charge;
        j["c_light"] = c.c_light;
        j["k_B"] = c.k_B;
    }
    return j.dump(2);
}

ModelParams load_model(const std::string& path, const ValidationOptions& opt) {
    std::ifstream f(path);
    if (!f) throw DomainError("config", "cannot open " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return model_from_json_text(buf.str(), opt);
}

void save_model(const ModelParams& model, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw DomainError("config", "cannot write " + path);
    f << model_to_json_text(model) << '\n';
}

} // namespace mobius
