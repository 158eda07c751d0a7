#ifndef MOBIUS_ORACLE_HPP
#define MOBIUS_ORACLE_HPP

#include <functional>
#include <vector>

#include "mobius/errors.hpp"
#include "mobius/physmodel.hpp"

namespace mobius::oracle {

struct QuadratureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    long evaluations = 0;
};

/// Adaptive bisection with a Gauss-Kronrod 7-15 local rule.
/// |value - integral| <= max(tol, abs_error_estimate); throws MaxSubdivisions
/// when the interval stack is exhausted before convergence.
QuadratureResult quad_adaptive(const std::function<double(double)>& f,
                               double lo, double hi, double tol,
                               int max_subdivisions = 2000);

enum class DerivativeOrder { First, Second };

/// Central difference with one Richardson extrapolation level.
/// Step defaults to 1e-5 * max(1, |x|).
double richardson_derivative(const std::function<double(double)>& f, double x,
                             DerivativeOrder order, double step = 0.0);

struct GridSpec {
    double rho_min = 0.0;
    double rho_max = 0.0;
    int points = 4000;
};

struct EigenResult {
    std::vector<double> energies;   // ascending
    std::vector<int> node_counts;   // 0, 1, 2, ... in order
    GridSpec grid;
};

enum class EigenMethod { FiniteDifference, Shooting };

/// Dirichlet eigenvalues of  -u'' + W(rho) u = lambda u  on
/// [grid.rho_min, grid.rho_max].  FiniteDifference diagonalizes the
/// second-order three-point matrix via Sturm bisection; Shooting integrates
/// with Numerov and bisects on the boundary value with node counting.
/// Throws NoBoundState when the requested levels are not found in the window.
EigenResult sturm_eigenvalues(const std::function<double(double)>& W,
                              const GridSpec& grid, int levels,
                              EigenMethod method = EigenMethod::FiniteDifference);

struct OdeOptions {
    int points = 4000;
    double rho_min_factor = 1e-6; // rho_min = factor / alpha
    double rho_max_factor = 40.0; // rho_max = factor / alpha
    EigenMethod method = EigenMethod::FiniteDifference;
    bool exact_centrifugal = false; // use exact 1/rho^2 instead of the
                                    // exponential approximation
};

/// Effective radial potential multiplied by 2 mu / hbar^2, i.e. the W(rho)
/// of the transformed equation the closed-form derivation starts from:
/// all centrifugal, magnetic and potential pieces in their approximated
/// exponential form (or exact 1/rho^2 pieces when requested).
double effective_potential_w(const ModelParams& model, double m, double rho,
                             bool exact_centrifugal = false);

/// Numerical eigenvalues of the approximated radial equation for the model,
/// returned in model energy units.  node_counts identify the level index.
EigenResult ode_eigenvalues(const ModelParams& model, double m,
                            const std::vector<int>& n_list,
                            const OdeOptions& opt = {});

} // namespace mobius::oracle

#endif
