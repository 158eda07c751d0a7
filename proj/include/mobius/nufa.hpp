#ifndef MOBIUS_NUFA_HPP
#define MOBIUS_NUFA_HPP

#include <functional>
#include <utility>
#include <vector>

#include "mobius/errors.hpp"

namespace mobius::nufa {

/// Coefficients of the parametric hypergeometric-type equation
///   psi'' + (alpha1 - alpha2 s)/(s(1 - alpha3 s)) psi'
///         + [-xi1 s^2 + xi2 s - xi3]/(s^2 (1 - alpha3 s)^2) psi = 0.
struct NufaParams {
    double alpha1 = 1.0;
    double alpha2 = 1.0;
    double alpha3 = 1.0;
    double xi1 = 0.0;
    double xi2 = 0.0;
    double xi3 = 0.0;
};

void check_params(const NufaParams& p); // throws DomainError on alpha3 == 0

enum class Branch { Plus, Minus };

struct NufaSolution {
    double lam = 0.0;
    double nu = 0.0;
    double delta = 0.0;
    double g = 0.0;
    double sigma = 0.0;
};

/// Assembles the exponents and hypergeometric parameters for the chosen
/// branches; the indicial residuals of the returned exponents vanish.
NufaSolution solve(const NufaParams& p, Branch lam_branch = Branch::Plus,
                   Branch nu_branch = Branch::Plus);

/// Exponent of s in the wavefunction ansatz s^lam (1 - alpha3 s)^nu:
///   lam = [(1 - alpha1) +- sqrt((1 - alpha1)^2 + 4 xi3)] / 2.
/// Throws ComplexExponent when the radicand is negative.
double exponent_lambda(const NufaParams& p, Branch branch = Branch::Plus);

/// Exponent of (1 - alpha3 s):
///   nu = [(alpha3 + alpha1 alpha3 - alpha2)
///         +- sqrt((alpha3 + alpha1 alpha3 - alpha2)^2
///                 + 4 (xi1/alpha3 + alpha3 xi3 - xi2))] / 2.
double exponent_nu(const NufaParams& p, Branch branch = Branch::Plus);

std::pair<double, double> nufa_exponents(const NufaParams& p,
                                         Branch lam_branch = Branch::Plus,
                                         Branch nu_branch = Branch::Plus);

/// Residuals of the two indicial conditions the ansatz exponents satisfy.
double lambda_residual(const NufaParams& p, double lam);
double nu_residual(const NufaParams& p, double nu);

/// Left side of the quantization condition at level n, evaluated with the
/// ansatz exponent mu_a = lam:
///   mu^2 + 2 mu (nu + c + n/sqrt(alpha3)) + (nu + c + n/sqrt(alpha3))^2
///     - c^2 - xi1/alpha3,   c = (alpha2/alpha3 - 1)/2.
/// A bound state at level n makes this vanish.
double quantization_residual(const NufaParams& p, double lam, double nu, int n);

struct HypergeometricParams {
    double delta = 0.0;
    double g = 0.0;
    double sigma = 0.0;
};

/// Gauss-equation parameters of the reduced equation for the given ansatz
/// exponents.  delta and g are the two roots
///   sqrt(alpha3) (lam + nu + c -+ sqrt(c^2 + xi1/alpha3));
/// delta takes the smaller root, the one the quantization drives to -n.
/// Throws ComplexParameter when the radicand is negative.
HypergeometricParams hypergeometric_params(const NufaParams& p,
                                           double lam, double nu);

/// Gauss hypergeometric series 2F1(delta, g; sigma; s).  Terminates exactly
/// when delta (or g) is a non-positive integer; otherwise sums the series for
/// |s| < 1.  Throws DivergentSeries outside the convergence domain or when
/// sigma hits a non-positive integer before termination.
double gauss_2f1(double delta, double g, double sigma, double s);

/// Roots of residual(E) = 0 on [lo, hi]: bracket by uniform scan, refine by
/// bisection, polish by secant.  Returns all roots found, ascending.
struct RootScan {
    double lo = -1.0;
    double hi = 0.0;
    int scan_points = 2000;
    double tol = 1e-12; // absolute tolerance on the residual argument
};

std::vector<double> solve_roots(const std::function<double(double)>& residual,
                                const RootScan& scan);

} // namespace mobius::nufa

#endif
