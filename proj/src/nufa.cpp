#include "mobius/nufa.hpp"

#include <algorithm>
#include <cmath>

namespace mobius::nufa {

void check_params(const NufaParams& p) {
    if (p.alpha3 == 0.0)
        throw DomainError("alpha3", "must be nonzero");
}

double exponent_lambda(const NufaParams& p, Branch branch) {
    check_params(p);
    const double radicand = (1.0 - p.alpha1) * (1.0 - p.alpha1) + 4.0 * p.xi3;
    if (radicand < 0.0) throw ComplexExponent(radicand);
    const double root = std::sqrt(radicand);
    return ((1.0 - p.alpha1) + (branch == Branch::Plus ? root : -root)) / 2.0;
}

double exponent_nu(const NufaParams& p, Branch branch) {
    check_params(p);
    // root of the outer indicial condition
    //   alpha3 nu^2 + (alpha2 - alpha1 alpha3 - alpha3) nu
    //     + (xi2 - xi1/alpha3 - alpha3 xi3) = 0;
    // at alpha3 = 1 (the only case this potential family produces) it is the
    // usual (base +- sqrt(base^2 + 4(xi1/alpha3 + alpha3 xi3 - xi2)))/2
    const double base = p.alpha3 + p.alpha1 * p.alpha3 - p.alpha2;
    const double radicand =
        base * base +
        4.0 * p.alpha3 * (p.xi1 / p.alpha3 + p.alpha3 * p.xi3 - p.xi2);
    if (radicand < 0.0) throw ComplexExponent(radicand);
    const double root = std::sqrt(radicand);
    return (base + (branch == Branch::Plus ? root : -root)) / (2.0 * p.alpha3);
}

std::pair<double, double> nufa_exponents(const NufaParams& p,
                                         Branch lam_branch, Branch nu_branch) {
    return {exponent_lambda(p, lam_branch), exponent_nu(p, nu_branch)};
}

NufaSolution solve(const NufaParams& p, Branch lam_branch, Branch nu_branch) {
    NufaSolution sol;
    sol.lam = exponent_lambda(p, lam_branch);
    sol.nu = exponent_nu(p, nu_branch);
    const auto hp = hypergeometric_params(p, sol.lam, sol.nu);
    sol.delta = hp.delta;
    sol.g = hp.g;
    sol.sigma = hp.sigma;
    return sol;
}

double lambda_residual(const NufaParams& p, double lam) {
    return lam * (lam - 1.0) + p.alpha1 * lam - p.xi3;
}

double nu_residual(const NufaParams& p, double nu) {
    return p.alpha2 * nu - p.alpha1 * p.alpha3 * nu +
           nu * (nu - 1.0) * p.alpha3 - p.xi1 / p.alpha3 + p.xi2 -
           p.xi3 * p.alpha3;
}

double quantization_residual(const NufaParams& p, double lam, double nu, int n) {
    check_params(p);
    const double c = 0.5 * (p.alpha2 / p.alpha3 - 1.0);
    const double t = nu + c + n / std::sqrt(p.alpha3);
    return lam * lam + 2.0 * lam * t + t * t - c * c - p.xi1 / p.alpha3;
}

HypergeometricParams hypergeometric_params(const NufaParams& p,
                                           double lam, double nu) {
    check_params(p);
    const double c = 0.5 * (p.alpha2 / p.alpha3 - 1.0);
    const double radicand = c * c + p.xi1 / p.alpha3;
    if (radicand < 0.0) throw ComplexParameter(radicand);
    const double root = std::sqrt(radicand);
    const double sa = std::sqrt(p.alpha3);
    HypergeometricParams out;
    out.delta = sa * (lam + nu + c - root);
    out.g = sa * (lam + nu + c + root);
    out.sigma = p.alpha1 + 2.0 * lam;
    return out;
}

double gauss_2f1(double delta, double g, double sigma, double s) {
    // termination: first parameter a non-positive integer (either slot works,
    // the series is symmetric in delta and g)
    auto as_nonpos_int = [](double v, int& n) {
        const double r = std::round(v);
        if (r <= 0.0 && std::fabs(v - r) < 1e-9) {
            n = static_cast<int>(-r);
            return true;
        }
        return false;
    };
    int n = 0;
    double other = g;
    bool polynomial = as_nonpos_int(delta, n);
    if (!polynomial && as_nonpos_int(g, n)) {
        polynomial = true;
        other = delta;
    }

    if (polynomial) {
        double term = 1.0;
        double sum = 1.0;
        for (int k = 0; k < n; ++k) {
            const double denom = (sigma + k) * (k + 1);
            if (denom == 0.0)
                throw DivergentSeries("2F1 parameter sigma hits a pole before termination");
            term *= (-n + k) * (other + k) * s / denom;
            sum += term;
        }
        return sum;
    }

    if (std::fabs(s) >= 1.0)
        throw DivergentSeries("2F1 series requires |s| < 1 unless it terminates");
    double term = 1.0;
    double sum = 1.0;
    for (int k = 0; k < 100000; ++k) {
        const double denom = (sigma + k) * (k + 1);
        if (denom == 0.0)
            throw DivergentSeries("2F1 parameter sigma is a non-positive integer");
        term *= (delta + k) * (g + k) * s / denom;
        sum += term;
        if (std::fabs(term) < 1e-16 * std::fabs(sum)) return sum;
    }
    throw DivergentSeries("2F1 series did not converge");
}

std::vector<double> solve_roots(const std::function<double(double)>& residual,
                                const RootScan& scan) {
    std::vector<double> roots;
    const int npts = std::max(scan.scan_points, 2);
    const double h = (scan.hi - scan.lo) / npts;

    auto refine = [&](double a, double b, double fa, double fb) {
        // bisection to near machine width, then secant polish
        for (int it = 0; it < 200 && (b - a) > scan.tol * std::max(1.0, std::fabs(a)); ++it) {
            const double mid = 0.5 * (a + b);
            const double fm = residual(mid);
            if (fm == 0.0) return mid;
            if ((fa < 0.0) != (fm < 0.0)) {
                b = mid;
                fb = fm;
            } else {
                a = mid;
                fa = fm;
            }
        }
        double x0 = a, x1 = b, f0 = fa, f1 = fb;
        for (int it = 0; it < 8; ++it) {
            if (f1 == f0) break;
            const double x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
            if (!(x2 >= a && x2 <= b)) break;
            x0 = x1; f0 = f1;
            x1 = x2; f1 = residual(x1);
            if (f1 == 0.0) break;
        }
        return x1;
    };

    double prev_x = scan.lo;
    double prev_f = residual(prev_x);
    for (int i = 1; i <= npts; ++i) {
        const double x = scan.lo + i * h;
        const double f = residual(x);
        if (prev_f == 0.0) {
            roots.push_back(prev_x);
        } else if ((prev_f < 0.0) != (f < 0.0)) {
            roots.push_back(refine(prev_x, x, prev_f, f));
        }
        prev_x = x;
        prev_f = f;
    }
    if (prev_f == 0.0) roots.push_back(prev_x);
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace mobius::nufa
