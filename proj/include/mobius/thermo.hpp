#ifndef MOBIUS_THERMO_HPP
#define MOBIUS_THERMO_HPP

#include "mobius/errors.hpp"
#include "mobius/jet.hpp"
#include "mobius/physmodel.hpp"
#include "mobius/specfun.hpp"
#include "mobius/spectrum.hpp"

namespace mobius::thermo {

enum class Method { DirectSum, PoissonClosedForm };

struct ThermoInput {
    double beta = 1.0; // 1 / (k_B T)
    double m = 0.0;
    int n_max = 3;     // largest vibrational level kept in the sum
    Method method = Method::PoissonClosedForm;
};

/// Precomputed pieces of the closed-form partition function for one
/// (m, field) configuration:
///   E(x) = -p g(x)^2 + Q,  g(x) = Xi/(2(x+nu)) + (x+nu)/2,
///   g1 = g(0), g2 = g(n_max + 1).
struct ThermoCoefficients {
    double p = 0.0;
    double q_shift = 0.0; // Q
    double g1 = 0.0;
    double g2 = 0.0;
    double big_xi = 0.0;
    double nu = 0.0;
    int n_max = 0;
};

ThermoCoefficients thermo_coefficients(const ModelParams& model, double m,
                                       int n_max);

struct ThermoProperties {
    double Z = 0.0;
    double F = 0.0;
    double U = 0.0;
    double S = 0.0;
    double C = 0.0;
    double M = 0.0;
    double chi = 0.0;
    double I_persistent = 0.0;
    double method_deviation = 0.0; // |Z_direct - Z_closed| / Z_direct
};

/// Finite Boltzmann sum over levels 0..n_max; the reference for every
/// closed form.
double partition_direct(const ModelParams& model, const ThermoInput& input);

/// Closed-form partition function from the lower-order Poisson summation:
/// boundary terms plus the erfi-expressible integral, evaluated in scaled
/// arithmetic (all terms share the e^{beta p g_i^2 - beta Q} scales).
/// Throws NumericalInstability when cancellation destroys the result.
double partition_poisson(const ModelParams& model, const ThermoInput& input);

/// Same value as a ScaledValue (usable when the double would overflow).
specfun::ScaledValue partition_poisson_scaled(const ModelParams& model,
                                              const ThermoInput& input);

/// Closed form restricted to the exponentially varying flux; requires
/// field.flux_model == Exponential.
double partition_exp_flux(const ModelParams& model, const ThermoInput& input);

double log_partition(const ModelParams& model, const ThermoInput& input);

double internal_energy(const ModelParams& model, const ThermoInput& input);
double free_energy(const ModelParams& model, const ThermoInput& input);
double entropy(const ModelParams& model, const ThermoInput& input);
double heat_capacity(const ModelParams& model, const ThermoInput& input);

struct CrossChecked {
    double analytic = 0.0;
    double finite_difference = 0.0;
};

/// Persistent current I = -(e / hbar c) dF/dm, analytic derivative chain and
/// central finite-difference counterpart.
CrossChecked persistent_current(const ModelParams& model,
                                const ThermoInput& input);

/// Magnetization M = (1/beta)(1/Z) dZ/dB with B entering through
/// tau0 = eB/(hbar c); derivatives at fixed zeta.
CrossChecked magnetization(const ModelParams& model, const ThermoInput& input);

/// Susceptibility chi = dM/dB.
CrossChecked susceptibility(const ModelParams& model, const ThermoInput& input);

/// All observables for one (beta, m, n_max), internal identities checked.
ThermoProperties thermo_suite(const ModelParams& model,
                              const ThermoInput& input);

namespace detail {

/// The closed form assembles to Z = A1 e^{s1} + A2 e^{s2} with
/// s_i = beta p g_i^2 - beta Q: the boundary terms and both erfi integrals
/// share those two scales once erfi is written through the bounded Dawson
/// carrier.  Generic over the scalar type so exact beta-, m- and
/// B-derivatives come from Jet2 evaluation.
template <class T>
struct ClosedParts {
    T s1, s2, A1, A2;
};

template <class T>
ClosedParts<T> closed_parts(T beta, T big_xi, T nu, T q_shift, double p,
                            int n_max) {
    T d1 = nu;
    T d2 = nu + double(n_max + 1);
    T g1 = big_xi / (2.0 * d1) + d1 / 2.0;
    T g2 = big_xi / (2.0 * d2) + d2 / 2.0;
    // signed companions: h = (d^2 - Xi)/(2d); |h| = sqrt(g^2 - Xi), and the
    // sign keeps the level-variable substitution valid on both sides of
    // d^2 = Xi
    T h1 = (d1 * d1 - big_xi) / (2.0 * d1);
    T h2 = (d2 * d2 - big_xi) / (2.0 * d2);

    T s = sqrt(beta * p);
    T inv_s = 1.0 / s;

    ClosedParts<T> parts;
    parts.s1 = beta * p * g1 * g1 - beta * q_shift;
    parts.s2 = beta * p * g2 * g2 - beta * q_shift;
    parts.A1 = 0.5 - (dawson(s * g1) + dawson(s * h1)) * inv_s;
    parts.A2 = -0.5 + (dawson(s * g2) + dawson(s * h2)) * inv_s;
    return parts;
}

/// log Z of the closed form.  Throws NumericalInstability when the two
/// scaled terms cancel (or the closed form leaves its validity range and
/// turns non-positive, where a log no longer exists).
template <class T>
T log_partition_closed(T beta, T big_xi, T nu, T q_shift, double p, int n_max) {
    const auto parts = closed_parts<T>(beta, big_xi, nu, q_shift, p, n_max);
    auto guarded_log = [](const T& big, const T& small_scaled) {
        T sum = big + small_scaled;
        const double gross =
            std::fabs(value_of(big)) + std::fabs(value_of(small_scaled));
        if (!(value_of(sum) > 1e-13 * gross))
            throw NumericalInstability("partition sum lost to cancellation");
        return log(sum);
    };
    if (value_of(parts.s1) >= value_of(parts.s2))
        return parts.s1 + guarded_log(parts.A1, parts.A2 * exp(parts.s2 - parts.s1));
    return parts.s2 + guarded_log(parts.A2, parts.A1 * exp(parts.s1 - parts.s2));
}

} // namespace detail

} // namespace mobius::thermo

#endif
