#include "mobius/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "mobius/nufa.hpp"

namespace mobius::spectrum {

using detail::Core;
using detail::make_core;

XiCoefficients xi_coefficients(const ModelParams& model, double m,
                               double energy) {
    const auto parts =
        detail::make_xi_parts<double>(model, m, model.field().tau0);
    const auto& c = model.constants();
    const auto& pot = model.potential();
    XiCoefficients xi;
    xi.eps2 = -2.0 * c.mu * energy / (c.hbar * c.hbar);
    const double e_ratio = xi.eps2 / (pot.alpha * pot.alpha);
    xi.xi1 = e_ratio + parts.xi1p;
    xi.xi2 = 2.0 * e_ratio + parts.xi2p;
    xi.xi3 = e_ratio + parts.xi3p;
    return xi;
}

nufa::NufaParams as_nufa_params(const XiCoefficients& xi) {
    return nufa::NufaParams{1.0, 1.0, 1.0, xi.xi1, xi.xi2, xi.xi3};
}

double big_xi(const ModelParams& model, double m) {
    const auto parts =
        detail::make_xi_parts<double>(model, m, model.field().tau0);
    return parts.xi3p - parts.xi1p;
}

double nu_exponent(const ModelParams& model, double m) {
    return make_core<double>(model, m, model.field().tau0).nu;
}

double energy(const ModelParams& model, const QuantumNumbers& qn) {
    if (qn.n < 0) throw DomainError("n", "must be >= 0");
    const auto core = make_core<double>(model, qn.m, model.field().tau0);
    return detail::level_energy(core, double(qn.n));
}

double lambda_exponent(const ModelParams& model, double m, double energy) {
    const auto xi = xi_coefficients(model, m, energy);
    if (xi.xi3 < 0.0) throw ComplexExponent(xi.xi3);
    return std::sqrt(xi.xi3);
}

WavefunctionParams wavefunction_params(const ModelParams& model,
                                       const QuantumNumbers& qn,
                                       double energy) {
    const auto xi = xi_coefficients(model, qn.m, energy);
    const auto p = as_nufa_params(xi);
    // The quantization closes on the descending inner-exponent branch:
    // with lam = -sqrt(xi3) the smaller hypergeometric root equals -n at
    // every bound level.  sigma = alpha1 + 2 lam for that same ansatz.
    const double lam = nufa::exponent_lambda(p, nufa::Branch::Minus);
    const double nu = nu_exponent(model, qn.m);
    const auto hp = nufa::hypergeometric_params(p, lam, nu);
    return WavefunctionParams{hp.delta, hp.g, hp.sigma};
}

SpectrumSolution solve(const ModelParams& model, const QuantumNumbers& qn) {
    SpectrumSolution sol;
    sol.n = qn.n;
    sol.m = qn.m;
    sol.energy = energy(model, qn);
    const auto core = make_core<double>(model, qn.m, model.field().tau0);
    sol.nu = core.nu;
    sol.big_xi = core.big_xi;
    const auto xi = xi_coefficients(model, qn.m, sol.energy);
    const auto p = as_nufa_params(xi);
    sol.lam = nufa::exponent_lambda(p, nufa::Branch::Minus);
    const auto hp = nufa::hypergeometric_params(p, sol.lam, sol.nu);
    sol.delta = hp.delta;
    sol.g = hp.g;
    sol.sigma = hp.sigma;
    return sol;
}

std::vector<WavefunctionSample> radial_wavefunction(
    const ModelParams& model, const QuantumNumbers& qn, double energy,
    const std::vector<double>& rho_grid) {
    const auto& pot = model.potential();
    const double decay = lambda_exponent(model, qn.m, energy);
    const double nu = nu_exponent(model, qn.m);
    const auto wp = wavefunction_params(model, qn, energy);

    std::vector<WavefunctionSample> out;
    out.reserve(rho_grid.size());
    for (double rho : rho_grid) {
        if (!(rho > 0.0)) throw DomainError("rho", "grid must be > 0");
        const double chi = -(pot.eta / pot.q) * std::exp(-pot.alpha * rho);
        // |chi|^decay carries the bound-state falloff; the polynomial factor
        // (delta -> -n) holds the nodal structure
        const double value = std::pow(std::fabs(chi), decay) *
                             std::pow(1.0 - chi, nu) *
                             nufa::gauss_2f1(-double(qn.n), wp.g, wp.sigma, chi);
        out.push_back({rho, value});
    }
    return out;
}

double greene_aldrich_residual(double alpha, double q, double eta, double rho) {
    const double denom = q + eta * std::exp(-alpha * rho);
    return 1.0 / (rho * rho) - alpha * alpha * q * q / (denom * denom);
}

double energy_via_nufa(const ModelParams& model, const QuantumNumbers& qn) {
    if (qn.n < 0) throw DomainError("n", "must be >= 0");
    const auto core = make_core<double>(model, qn.m, model.field().tau0);
    const double nu = core.nu;
    const double t = nu + qn.n;

    auto residual = [&](double E) {
        const auto xi = xi_coefficients(model, qn.m, E);
        if (xi.xi3 < 0.0) return 1.0; // outside the admissible window
        const double lam = nufa::exponent_lambda(as_nufa_params(xi),
                                                 nufa::Branch::Minus);
        return nufa::quantization_residual(as_nufa_params(xi), lam, nu, qn.n);
    };

    // Bound levels live below the energy offset Q = p * xi3p; the g-value at
    // the root is bounded by |Xi|/(2 nu) + (t + 4)/1, which fixes the window.
    const double q_shift = core.q_shift;
    const double g_cap = std::fabs(core.big_xi) / (2.0 * nu) + t + 4.0;
    nufa::RootScan scan;
    scan.lo = q_shift - core.p * g_cap * g_cap;
    scan.hi = q_shift;
    scan.scan_points = 4000;
    scan.tol = 1e-13;
    const auto roots = nufa::solve_roots(residual, scan);
    if (roots.empty())
        throw NoBoundState("quantization condition has no root in the window");
    // the residual is monotone in E: a single root per level
    return roots.front();
}

} // namespace mobius::spectrum
