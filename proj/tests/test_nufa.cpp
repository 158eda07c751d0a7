#include <doctest.h>

#include <cmath>

#include "mobius/nufa.hpp"
#include "mobius/reference_tables.hpp"
#include "mobius/spectrum.hpp"

using namespace mobius;
using nufa::Branch;
using nufa::NufaParams;

TEST_CASE("exponents of degenerate parameter sets") {
    // alpha1 = 1, xi3 = 0 makes both terms of the s-exponent vanish
    NufaParams p{1.0, 2.0, 1.0, 0.0, 0.0, 0.0};
    CHECK(nufa::exponent_lambda(p) == 0.0);
    CHECK(nufa::exponent_nu(p) == 0.0); // (1+1-2)/2 + 0
}

TEST_CASE("alpha3 = 0 is rejected") {
    NufaParams p{1.0, 1.0, 0.0, 0.0, 0.0, 0.0};
    CHECK_THROWS_AS(nufa::exponent_nu(p), DomainError);
}

TEST_CASE("negative radicand signals a complex exponent") {
    NufaParams p{1.0, 1.0, 1.0, 0.0, 0.0, -1.0};
    CHECK_THROWS_AS(nufa::exponent_lambda(p), ComplexExponent);
    NufaParams p2{1.0, 1.0, 1.0, 0.0, 100.0, 0.0};
    CHECK_THROWS_AS(nufa::exponent_nu(p2), ComplexExponent);
}

TEST_CASE("exponents satisfy their indicial conditions") {
    // generic parameter sets; residual tolerance is relative to |xi3|
    const NufaParams sets[] = {
        {1.0, 1.0, 1.0, 2.0, 3.0, 3.5},
        {0.5, 2.0, 1.5, 1.0, 2.0, 4.0},
        {1.0, 1.0, 1.0, 0.018, 4.4, 35.3},
    };
    for (const auto& p : sets) {
        for (const auto br : {Branch::Plus, Branch::Minus}) {
            const double lam = nufa::exponent_lambda(p, br);
            CHECK(std::fabs(nufa::lambda_residual(p, lam)) <=
                  1e-10 * std::max(1.0, std::fabs(p.xi3)));
            const double nu = nufa::exponent_nu(p, br);
            CHECK(std::fabs(nufa::nu_residual(p, nu)) <=
                  1e-10 * std::max(1.0, std::fabs(p.xi3)));
        }
    }
}

TEST_CASE("quantization residual vanishes exactly at a constructed root") {
    // choose lam so that (lam + nu + n)^2 = xi1 by construction
    NufaParams p{1.0, 1.0, 1.0, 9.0, 0.0, 0.0};
    const double nu = 1.25;
    const int n = 1;
    const double lam = std::sqrt(p.xi1) - nu - n;
    CHECK(std::fabs(nufa::quantization_residual(p, lam, nu, n)) <= 1e-12);
    CHECK(std::fabs(nufa::quantization_residual(p, lam + 0.1, nu, n)) > 1e-3);
}

TEST_CASE("hypergeometric parameters: sigma relation and root ordering") {
    NufaParams p{1.0, 1.0, 1.0, 4.0, 1.0, 2.0};
    const double lam = 0.7, nu = 1.1;
    const auto hp = nufa::hypergeometric_params(p, lam, nu);
    CHECK(hp.sigma == p.alpha1 + 2.0 * lam); // exact
    CHECK(hp.delta < hp.g);
    CHECK(hp.delta == doctest::Approx(lam + nu - 2.0).epsilon(1e-15));
    CHECK(hp.g == doctest::Approx(lam + nu + 2.0).epsilon(1e-15));

    NufaParams bad = p;
    bad.xi1 = -1.0;
    CHECK_THROWS_AS(nufa::hypergeometric_params(bad, lam, nu), ComplexParameter);
}

TEST_CASE("2F1 series basics") {
    CHECK(nufa::gauss_2f1(0.3, 1.7, 2.2, 0.0) == 1.0);
    // one-term polynomial
    CHECK(nufa::gauss_2f1(-1.0, 1.7, 2.2, 0.45) ==
          doctest::Approx(1.0 - (1.7 / 2.2) * 0.45).epsilon(1e-15));
    // two-term polynomial, expanded by hand
    const double expected = 1.0 - 2.0 * (1.5 / 2.0) * 0.3 +
                            (2.0 * 1.5 * 2.5 / (2.0 * 3.0 * 2.0)) * 0.09;
    CHECK(nufa::gauss_2f1(-2.0, 1.5, 2.0, 0.3) ==
          doctest::Approx(expected).epsilon(1e-15));
    CHECK(expected == doctest::Approx(0.60625).epsilon(1e-15));
}

TEST_CASE("2F1 series agrees with the logarithm identity") {
    // log(1 - s)/(-s) = 2F1(1, 1; 2; s)
    for (double s : {-0.7, -0.3, 0.2, 0.5, 0.9}) {
        CHECK(nufa::gauss_2f1(1.0, 1.0, 2.0, s) ==
              doctest::Approx(-std::log(1.0 - s) / s).epsilon(1e-13));
    }
}

TEST_CASE("2F1 error paths") {
    CHECK_THROWS_AS(nufa::gauss_2f1(0.3, 1.7, 2.2, 1.5), DivergentSeries);
    // sigma at a non-positive integer without earlier termination
    CHECK_THROWS_AS(nufa::gauss_2f1(0.3, 1.7, -1.0, 0.5), DivergentSeries);
    // termination before the sigma pole is fine
    CHECK_NOTHROW(nufa::gauss_2f1(-1.0, 1.7, -1.5, 0.5));
}

TEST_CASE("terminating 2F1 is a polynomial of degree n") {
    // (n+1)-th forward difference of a degree-n polynomial vanishes
    const int n = 3;
    const double g = 2.3, sigma = 1.9, h = 0.11;
    double samples[5];
    for (int i = 0; i < 5; ++i)
        samples[i] = nufa::gauss_2f1(-double(n), g, sigma, 0.05 + i * h);
    for (int level = 0; level < 4; ++level)
        for (int i = 0; i < 4 - level; ++i)
            samples[i] = samples[i + 1] - samples[i];
    CHECK(std::fabs(samples[0]) <= 1e-9);
}

TEST_CASE("Mobius-square coefficients feed the generic solver consistently") {
    const ModelParams model = tables::reference_model(1);
    const double m = 0.0;
    const double e0 = spectrum::energy(model, {0, m});
    const auto xi = spectrum::xi_coefficients(model, m, e0);
    const auto p = spectrum::as_nufa_params(xi);

    // the positive branch reproduces the inner-exponent formula
    const double lam_plus = nufa::exponent_lambda(p, Branch::Plus);
    CHECK(lam_plus == doctest::Approx(std::sqrt(xi.xi3)).epsilon(1e-15));
    // the principal nu branch reproduces the spectrum module's exponent
    const double nu = nufa::exponent_nu(p, Branch::Plus);
    CHECK(nu == doctest::Approx(spectrum::nu_exponent(model, m)).epsilon(1e-13));

    // closure: the closed-form energy satisfies the quantization condition
    // on the descending inner-exponent branch
    const double lam_minus = nufa::exponent_lambda(p, Branch::Minus);
    CHECK(std::fabs(nufa::quantization_residual(p, lam_minus, nu, 0)) <= 1e-8);
}

TEST_CASE("assembled solution carries consistent exponents and parameters") {
    NufaParams p{1.0, 1.0, 1.0, 4.0, 1.0, 2.0};
    const auto sol = nufa::solve(p);
    CHECK(std::fabs(nufa::lambda_residual(p, sol.lam)) <= 1e-12);
    CHECK(std::fabs(nufa::nu_residual(p, sol.nu)) <= 1e-12);
    CHECK(sol.sigma == p.alpha1 + 2.0 * sol.lam);
    const auto hp = nufa::hypergeometric_params(p, sol.lam, sol.nu);
    CHECK(sol.delta == hp.delta);
    CHECK(sol.g == hp.g);
}

TEST_CASE("root scan finds isolated roots") {
    auto residual = [](double x) { return (x - 0.3) * (x + 1.2); };
    nufa::RootScan scan;
    scan.lo = -2.0;
    scan.hi = 1.0;
    const auto roots = nufa::solve_roots(residual, scan);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == doctest::Approx(-1.2).epsilon(1e-12));
    CHECK(roots[1] == doctest::Approx(0.3).epsilon(1e-12));
}

TEST_CASE("generic quantization root-solve equals the closed form") {
    const ModelParams model = tables::reference_model(1);
    for (double m : {-1.0, 0.0, 1.0}) {
        for (int n = 0; n <= 3; ++n) {
            const double closed = spectrum::energy(model, {n, m});
            const double solved = spectrum::energy_via_nufa(model, {n, m});
            CHECK(std::fabs(solved - closed) <= 1e-12 * std::fabs(closed));
        }
    }
}
