#include "mobius/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace mobius::oracle {

namespace {

// Gauss-Kronrod 7-15 nodes and weights on [-1, 1].
constexpr double kKronrodNodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
constexpr double kKronrodWeights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kGaussWeights[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct LocalRule {
    double kronrod;
    double gauss;
    double kronrod_abs; // integral of |f|, sets the roundoff floor
};

LocalRule gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double hw = 0.5 * (b - a);
    const double fc = f(c);
    double k = kKronrodWeights[7] * fc;
    double g = kGaussWeights[3] * fc;
    double kabs = kKronrodWeights[7] * std::fabs(fc);
    for (int i = 0; i < 7; ++i) {
        const double x = hw * kKronrodNodes[i];
        const double fl = f(c - x);
        const double fr = f(c + x);
        k += kKronrodWeights[i] * (fl + fr);
        kabs += kKronrodWeights[i] * (std::fabs(fl) + std::fabs(fr));
        if (i % 2 == 1) g += kGaussWeights[i / 2] * (fl + fr);
    }
    return {k * hw, g * hw, kabs * std::fabs(hw)};
}

} // namespace

QuadratureResult quad_adaptive(const std::function<double(double)>& f,
                               double lo, double hi, double tol,
                               int max_subdivisions) {
    if (!(tol > 0.0)) throw DomainError("tol", "must be > 0");
    if (lo == hi) return {0.0, 0.0, 0};

    struct Interval {
        double a, b, value, err, floor;
    };
    const double total_len = std::fabs(hi - lo);
    std::vector<Interval> stack;
    QuadratureResult out;

    auto push = [&](double a, double b) {
        const auto r = gk15(f, a, b);
        out.evaluations += 15;
        stack.push_back({a, b, r.kronrod, std::fabs(r.kronrod - r.gauss),
                         50.0 * 2.22e-16 * r.kronrod_abs});
    };
    push(lo, hi);

    int splits = 0;
    double value = 0.0;
    double err = 0.0;
    while (!stack.empty()) {
        const Interval iv = stack.back();
        stack.pop_back();
        const double local_tol =
            tol * std::max(std::fabs(iv.b - iv.a) / total_len, 1e-12);
        // accept on tolerance or at the roundoff floor of the local rule
        if (iv.err <= std::max(local_tol, iv.floor) ||
            std::fabs(iv.b - iv.a) < 1e-14 * total_len) {
            value += iv.value;
            err += iv.err;
            continue;
        }
        if (++splits > max_subdivisions)
            throw MaxSubdivisions("quadrature did not converge within the subdivision budget");
        const double mid = 0.5 * (iv.a + iv.b);
        push(iv.a, mid);
        push(mid, iv.b);
    }
    out.value = value;
    out.abs_error_estimate = err;
    return out;
}

double richardson_derivative(const std::function<double(double)>& f, double x,
                             DerivativeOrder order, double step) {
    // second differences amplify roundoff by 1/h^2; a wider default step is
    // needed there to keep the extrapolated estimate meaningful
    const double base = order == DerivativeOrder::First ? 1e-5 : 3e-4;
    const double h = step > 0.0 ? step : base * std::max(1.0, std::fabs(x));
    if (order == DerivativeOrder::First) {
        auto central = [&](double hh) { return (f(x + hh) - f(x - hh)) / (2.0 * hh); };
        const double d1 = central(h);
        const double d2 = central(h / 2.0);
        return (4.0 * d2 - d1) / 3.0;
    }
    auto central2 = [&](double hh) {
        return (f(x + hh) - 2.0 * f(x) + f(x - hh)) / (hh * hh);
    };
    const double d1 = central2(h);
    const double d2 = central2(h / 2.0);
    return (4.0 * d2 - d1) / 3.0;
}

namespace {

// Sturm count for the Dirichlet three-point matrix: number of eigenvalues
// below lambda, from the signs of the LDL^T pivots.
int sturm_count(const std::vector<double>& diag, double off2, double lambda) {
    int count = 0;
    double d = diag[0] - lambda;
    if (d < 0.0) ++count;
    for (size_t i = 1; i < diag.size(); ++i) {
        if (d == 0.0) d = 1e-300;
        d = diag[i] - lambda - off2 / d;
        if (d < 0.0) ++count;
    }
    return count;
}

std::vector<double> fd_eigenvalues(const std::function<double(double)>& W,
                                   const GridSpec& grid, int levels) {
    const int n = grid.points - 2; // interior points
    const double h = (grid.rho_max - grid.rho_min) / (grid.points - 1);
    std::vector<double> diag(n);
    for (int i = 0; i < n; ++i) {
        const double rho = grid.rho_min + (i + 1) * h;
        diag[i] = 2.0 / (h * h) + W(rho);
    }
    const double off = 1.0 / (h * h);
    const double b2 = off * off;

    double lo = diag[0], hi = diag[0];
    for (double a : diag) {
        lo = std::min(lo, a);
        hi = std::max(hi, a);
    }
    lo -= 2.0 * off + 1.0;
    hi += 2.0 * off + 1.0;

    std::vector<double> eigs(levels);
    for (int k = 0; k < levels; ++k) {
        double a = lo, b = hi;
        for (int it = 0; it < 80; ++it) {
            const double mid = 0.5 * (a + b);
            if (sturm_count(diag, b2, mid) >= k + 1)
                b = mid;
            else
                a = mid;
        }
        eigs[k] = 0.5 * (a + b);
    }
    return eigs;
}

// Numerov sweep from the left; returns boundary value sign data and the
// interior node count.
struct ShotResult {
    int nodes = 0;
    double boundary = 0.0;
};

ShotResult numerov_shot(const std::function<double(double)>& W,
                        const GridSpec& grid, double lambda) {
    const int n = grid.points;
    const double h = (grid.rho_max - grid.rho_min) / (n - 1);
    const double h2 = h * h;
    auto q = [&](int i) { return lambda - W(grid.rho_min + i * h); };

    double um = 0.0;
    double u = h;
    double qm = q(0), qc = q(1);
    int nodes = 0;
    for (int i = 1; i < n - 1; ++i) {
        const double qp = q(i + 1);
        double up;
        const double qmax =
            std::max({std::fabs(qm), std::fabs(qc), std::fabs(qp)});
        if (h2 * qmax / 12.0 < 0.25) {
            up = (2.0 * (1.0 - 5.0 * h2 * qc / 12.0) * u -
                  (1.0 + h2 * qm / 12.0) * um) /
                 (1.0 + h2 * qp / 12.0);
        } else {
            // deep forbidden region (or a probe far below the potential
            // floor): the Numerov denominator can flip sign and fake
            // oscillations, so fall back to the plain three-point step
            up = (2.0 - h2 * qc) * u - um;
        }
        if ((up < 0.0 && u > 0.0) || (up > 0.0 && u < 0.0)) ++nodes;
        um = u;
        u = up;
        qm = qc;
        qc = qp;
        if (std::fabs(u) > 1e100) { // renormalize; signs unaffected
            u *= 1e-100;
            um *= 1e-100;
        }
    }
    return {nodes, u};
}

std::vector<double> shooting_eigenvalues(const std::function<double(double)>& W,
                                         const GridSpec& grid, int levels) {
    // window from the potential range on the grid
    double wmin = W(grid.rho_min), wmax = wmin;
    for (int i = 0; i < 512; ++i) {
        const double rho =
            grid.rho_min + (grid.rho_max - grid.rho_min) * i / 511.0;
        const double w = W(rho);
        wmin = std::min(wmin, w);
        wmax = std::max(wmax, w);
    }
    double lo = wmin - 1.0;
    double hi = wmax + 10.0;
    // ensure the window holds at least `levels` states
    for (int guard = 0; numerov_shot(W, grid, hi).nodes < levels && guard < 60;
         ++guard)
        hi = lo + (hi - lo) * 2.0;
    if (numerov_shot(W, grid, hi).nodes < levels)
        throw NoBoundState("eigenvalue window exhausted before reaching the requested level");

    std::vector<double> eigs(levels);
    for (int k = 0; k < levels; ++k) {
        double a = lo, b = hi;
        for (int it = 0; it < 80; ++it) {
            const double mid = 0.5 * (a + b);
            if (numerov_shot(W, grid, mid).nodes >= k + 1)
                b = mid;
            else
                a = mid;
        }
        eigs[k] = 0.5 * (a + b);
    }
    return eigs;
}

} // namespace

EigenResult sturm_eigenvalues(const std::function<double(double)>& W,
                              const GridSpec& grid, int levels,
                              EigenMethod method) {
    if (levels < 1) throw DomainError("levels", "must be >= 1");
    if (grid.points < 16) throw DomainError("points", "grid too coarse");
    EigenResult out;
    out.grid = grid;
    out.energies = (method == EigenMethod::FiniteDifference)
                       ? fd_eigenvalues(W, grid, levels)
                       : shooting_eigenvalues(W, grid, levels);
    out.node_counts.resize(levels);
    for (int k = 0; k < levels; ++k) out.node_counts[k] = k;
    return out;
}

double effective_potential_w(const ModelParams& model, double m, double rho,
                             bool exact_centrifugal) {
    const auto& pot = model.potential();
    const auto& c = model.constants();
    const auto& f = model.field();
    const double two_mu_V0 = 2.0 * c.mu * pot.V0 / (c.hbar * c.hbar);
    const double tau = effective_tau(f);
    const double shifted2 = (m + f.zeta) * (m + f.zeta) - 0.25;

    const double xi1p = f.tau0 * f.tau0 / (pot.eta * pot.eta) +
                        two_mu_V0 * pot.b * pot.b / (pot.eta * pot.eta);
    const double xi2p = tau * pot.q / pot.eta + two_mu_V0 / (pot.eta * pot.q);
    const double xi3p = shifted2 + two_mu_V0 * pot.a * pot.a / (pot.q * pot.q);

    const double chi = -(pot.eta / pot.q) * std::exp(-pot.alpha * rho);
    const double one_m = 1.0 - chi;
    const double a2 = pot.alpha * pot.alpha;
    double w = a2 * (xi1p * chi * chi - xi2p * chi + xi3p) / (one_m * one_m);
    if (exact_centrifugal) {
        // swap the approximated centrifugal piece for the exact 1/rho^2 one
        w += shifted2 * (1.0 / (rho * rho) - a2 / (one_m * one_m));
    }
    return w;
}

EigenResult ode_eigenvalues(const ModelParams& model, double m,
                            const std::vector<int>& n_list,
                            const OdeOptions& opt) {
    if (n_list.empty()) throw DomainError("n_list", "must not be empty");
    int top = 0;
    for (int n : n_list) {
        if (n < 0) throw DomainError("n_list", "levels must be >= 0");
        top = std::max(top, n);
    }

    const auto& pot = model.potential();
    const auto& c = model.constants();
    GridSpec grid;
    grid.rho_min = opt.rho_min_factor / pot.alpha;
    grid.rho_max = opt.rho_max_factor / pot.alpha;
    grid.points = opt.points;

    auto W = [&](double rho) {
        return effective_potential_w(model, m, rho, opt.exact_centrifugal);
    };

    // one grid refinement plus Richardson extrapolation of the O(h^2) scheme
    auto solve_on = [&](int points) {
        GridSpec g = grid;
        g.points = points;
        return sturm_eigenvalues(W, g, top + 1, opt.method).energies;
    };
    const auto coarse = solve_on(grid.points / 2);
    const auto fine = solve_on(grid.points);

    const double to_energy = c.hbar * c.hbar / (2.0 * c.mu);
    EigenResult out;
    out.grid = grid;
    for (int n : n_list) {
        const double lam = opt.method == EigenMethod::FiniteDifference
                               ? (4.0 * fine[n] - coarse[n]) / 3.0
                               : fine[n];
        out.energies.push_back(lam * to_energy);
        out.node_counts.push_back(n);
    }
    return out;
}

} // namespace mobius::oracle
