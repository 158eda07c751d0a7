#ifndef MOBIUS_SPECTRUM_HPP
#define MOBIUS_SPECTRUM_HPP

#include <cmath>
#include <vector>

#include "mobius/errors.hpp"
#include "mobius/jet.hpp"
#include "mobius/physmodel.hpp"
#include "mobius/nufa.hpp"

namespace mobius::spectrum {

namespace detail {

/// Energy-independent coefficient pieces of the transformed radial equation
/// for the Mobius square potential with flux fields.  Templated over the
/// scalar type so field derivatives (in m or tau0) can be carried exactly
/// by Jet2.
template <class T>
struct XiParts {
    T xi1p;   // chi^2 coefficient part
    T xi2p;   // chi coefficient part
    T xi3p;   // constant coefficient part (holds the (m+zeta)^2 - 1/4 term)
    double p; // hbar^2 alpha^2 / (2 mu)
};

template <class T>
XiParts<T> make_xi_parts(const ModelParams& model, T m, T tau0) {
    const auto& pot = model.potential();
    const auto& c = model.constants();
    const auto& f = model.field();

    const double two_mu_V0 = 2.0 * c.mu * pot.V0 / (c.hbar * c.hbar);
    const double zeta = f.zeta;

    T tau = (f.flux_model == FluxModel::Linear)
                ? tau0 * (1.0 + zeta / 2.0)
                : tau0 * std::exp(zeta / 2.0);

    XiParts<T> parts;
    parts.p = c.hbar * c.hbar * pot.alpha * pot.alpha / (2.0 * c.mu);
    parts.xi1p = tau0 * tau0 / (pot.eta * pot.eta)
               + two_mu_V0 * pot.b * pot.b / (pot.eta * pot.eta);
    parts.xi2p = tau * pot.q / pot.eta + two_mu_V0 / (pot.eta * pot.q);
    T shifted = m + zeta;
    parts.xi3p = shifted * shifted - 0.25
               + two_mu_V0 * pot.a * pot.a / (pot.q * pot.q);
    return parts;
}

/// Coefficient pieces plus the derived exponent data.
template <class T>
struct Core {
    T xi1p;
    T xi2p;
    T xi3p;
    T nu;      // outer exponent, principal branch (>= 1/2)
    T big_xi;  // xi3p - xi1p
    T q_shift; // p * xi3p, the energy offset
    double p;
};

/// Builds the core with m and tau0 as (possibly jet-valued) inputs.
/// Throws ComplexExponent if the nu radicand is negative.
template <class T>
Core<T> make_core(const ModelParams& model, T m, T tau0) {
    const auto parts = make_xi_parts<T>(model, m, tau0);
    Core<T> core;
    core.p = parts.p;
    core.xi1p = parts.xi1p;
    core.xi2p = parts.xi2p;
    core.xi3p = parts.xi3p;
    core.big_xi = core.xi3p - core.xi1p;
    core.q_shift = core.p * core.xi3p;

    T radicand = 1.0 + 4.0 * (core.xi1p + core.xi3p - core.xi2p);
    if (value_of(radicand) < 0.0) throw ComplexExponent(value_of(radicand));
    core.nu = 0.5 + 0.5 * sqrt(radicand);
    return core;
}

template <class T>
T level_g(const Core<T>& core, T x) {
    T d = x + core.nu;
    return core.big_xi / (2.0 * d) + d / 2.0;
}

/// Closed-form bound-level energy at (possibly fractional) level x.
template <class T>
T level_energy(const Core<T>& core, T x) {
    T g = level_g(core, x);
    return core.q_shift - core.p * g * g;
}

} // namespace detail

/// Coefficients of the transformed equation at a given energy:
/// xi_i = eps2/alpha^2 + (energy-free part), eps2 = -2 mu E / hbar^2.
struct XiCoefficients {
    double xi1 = 0.0;
    double xi2 = 0.0;
    double xi3 = 0.0;
    double eps2 = 0.0;
};

XiCoefficients xi_coefficients(const ModelParams& model, double m, double energy);

/// Maps the coefficients onto the generic parametric solver
/// (alpha1 = alpha2 = alpha3 = 1 for this potential family).
nufa::NufaParams as_nufa_params(const XiCoefficients& xi);

/// Xi = (m+zeta)^2 - 1/4 + (2 mu V0/hbar^2)(a^2/q^2 - b^2/eta^2) - tau0^2/eta^2.
double big_xi(const ModelParams& model, double m);

/// Principal outer exponent nu >= 1/2; uses the flux-dressed tau.
/// Throws ComplexExponent when the radicand is negative.
double nu_exponent(const ModelParams& model, double m);

/// Closed-form bound-state energy at quantum numbers (n, m).
double energy(const ModelParams& model, const QuantumNumbers& qn);

/// Inner exponent sqrt(xi3) evaluated at the given energy (equals the
/// level g-value when the energy is a bound level).
double lambda_exponent(const ModelParams& model, double m, double energy);

struct SpectrumSolution {
    double energy = 0.0;
    double nu = 0.0;
    double big_xi = 0.0;
    // inner-exponent root the quantization closes on (the descending branch,
    // -sqrt(xi3); the radial decay rate is |lam| alpha)
    double lam = 0.0;
    double delta = 0.0; // quantization-closing hypergeometric root (= -n)
    double g = 0.0;
    double sigma = 0.0; // alpha1 + 2 lam of the same ansatz
    int n = 0;
    double m = 0.0;
};

SpectrumSolution solve(const ModelParams& model, const QuantumNumbers& qn);

struct WavefunctionParams {
    double delta = 0.0;
    double g = 0.0;
    double sigma = 0.0;
};

/// Hypergeometric parameters of the radial solution at the given energy.
/// delta is the quantization-closing root: it equals -n at the bound level.
WavefunctionParams wavefunction_params(const ModelParams& model,
                                       const QuantumNumbers& qn,
                                       double energy);

struct WavefunctionSample {
    double rho = 0.0;
    double value = 0.0;
};

/// Unnormalized radial factor
///   |chi|^{sqrt(xi3)} (1-chi)^nu 2F1(-n, g; sigma; chi),
/// chi = -(eta/q) e^{-alpha rho}, sampled on the given grid.  The first
/// exponent is the decaying root; the terminating hypergeometric factor
/// carries the nodal structure.
std::vector<WavefunctionSample> radial_wavefunction(
    const ModelParams& model, const QuantumNumbers& qn, double energy,
    const std::vector<double>& rho_grid);

/// Centrifugal-approximation diagnostic:
///   rho^{-2} - alpha^2 q^2 / (q + eta e^{-alpha rho})^2.
double greene_aldrich_residual(double alpha, double q, double eta, double rho);

/// Bound energy found by root-solving the generic quantization condition
/// over E (the coefficients depend on E), instead of the closed form.
/// Uses the exponent branch that admits roots for this potential family.
double energy_via_nufa(const ModelParams& model, const QuantumNumbers& qn);

} // namespace mobius::spectrum

#endif
