#ifndef MOBIUS_PHYSMODEL_HPP
#define MOBIUS_PHYSMODEL_HPP

#include <string>

#include "mobius/errors.hpp"

namespace mobius {

enum class FluxModel { Linear, Exponential };

std::string to_string(FluxModel f);
FluxModel flux_model_from_string(const std::string& s);

/// Parameters of the Mobius square potential
///   V(rho) = V0 * ((a + b e^{-alpha rho}) / (q + eta e^{-alpha rho}))^2.
struct PotentialParams {
    double V0 = 0.0;    // potential depth (energy)
    double a = 0.0;     // dimensionless
    double b = 0.0;     // dimensionless
    double q = 1.0;     // dimensionless
    double eta = 1.0;   // dimensionless
    double alpha = 1.0; // screening parameter (inverse length)
};

struct PhysicalConstants {
    double hbar = 1.0;
    double mu = 1.0;      // effective mass
    double e_charge = 1.0;
    double c_light = 1.0;
    double k_B = 1.0;

    static PhysicalConstants natural() { return PhysicalConstants{}; }
};

/// External field configuration.  tau0 = eB/(hbar c) carries the magnetic
/// field; zeta = Phi_AB/Phi_0 the Aharonov-Bohm flux ratio.  zeta is kept
/// real: the thermo sweeps treat it as a continuous variable.
struct FieldConfig {
    double tau0 = 0.0;
    double zeta = 0.0;
    FluxModel flux_model = FluxModel::Linear;
};

struct RawModel {
    PotentialParams potential;
    PhysicalConstants constants;
    FieldConfig field;
};

struct ValidationOptions {
    // Default requires q*eta > 0 so the potential denominator never vanishes
    // on rho >= 0.  Research configurations may relax this deliberately.
    bool allow_mixed_sign_q_eta = false;
};

/// Immutable validated model; the single source of every model symbol.
class ModelParams {
public:
    const PotentialParams& potential() const { return raw_.potential; }
    const PhysicalConstants& constants() const { return raw_.constants; }
    const FieldConfig& field() const { return raw_.field; }
    RawModel raw() const { return raw_; }

    /// Same model with one field value replaced (used by sweeps).
    ModelParams with_field(const FieldConfig& f) const;

    friend ModelParams validate(const RawModel&, const ValidationOptions&);

private:
    explicit ModelParams(RawModel r) : raw_(r) {}
    RawModel raw_;
};

/// Validates all invariants and returns an immutable model.
/// Throws DomainError naming the offending field.
ModelParams validate(const RawModel& in, const ValidationOptions& opt = {});

bool operator==(const PotentialParams&, const PotentialParams&);
bool operator==(const PhysicalConstants&, const PhysicalConstants&);
bool operator==(const FieldConfig&, const FieldConfig&);
bool operator==(const ModelParams&, const ModelParams&);

/// Effective flux-dressed tau:
///   Linear      -> tau0 * (1 + zeta/2)
///   Exponential -> tau0 * exp(zeta/2)
double effective_tau(const FieldConfig& field);

/// zeta = Phi_AB / Phi_0 with flux quantum Phi_0 = hc/e = 2 pi hbar c / e.
double zeta_from_flux(double phi_AB, const PhysicalConstants& constants);

struct QuantumNumbers {
    int n = 0;      // radial / vibrational
    double m = 0.0; // magnetic; real-valued for the d/dm derivative
};

/// JSON model I/O.  Flat keys: V0, a, b, q, eta, alpha, tau0, zeta,
/// flux_model, units; explicit constant overrides when units == "custom".
ModelParams model_from_json_text(const std::string& text,
                                 const ValidationOptions& opt = {});
std::string model_to_json_text(const ModelParams& model);
ModelParams load_model(const std::string& path,
                       const ValidationOptions& opt = {});
void save_model(const ModelParams& model, const std::string& path);

} // namespace mobius

#endif
