#include "mobius/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace mobius::specfun {

namespace {

constexpr double kTwoOverSqrtPi = 1.1283791670955126; // 2/sqrt(pi)
constexpr double kLogDblMax = 709.782712893384;

// erf Maclaurin series, alternating; fine up to |x| ~ 1.
double erf_series_small(double x) {
    const double x2 = x * x;
    double term = x;
    double sum = x;
    for (int k = 1; k < 40; ++k) {
        term *= -x2 / k;
        const double add = term / (2 * k + 1);
        sum += add;
        if (std::fabs(add) < 1e-18 * std::fabs(sum)) break;
    }
    return kTwoOverSqrtPi * sum;
}

// All-positive scaled series erf(x) = (2/sqrt(pi)) x e^{-x^2}
// sum_k (2x^2)^k / (2k+1)!!; no cancellation, Kahan-compensated.
double erf_series_scaled(double x) {
    const double t = 2.0 * x * x;
    double term = 1.0;
    double sum = 1.0;
    double comp = 0.0;
    for (int k = 1; k < 400; ++k) {
        term *= t / (2 * k + 1);
        const double y = term - comp;
        const double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
        if (term < 1e-17 * sum) break;
    }
    return kTwoOverSqrtPi * x * std::exp(-x * x) * sum;
}

// Dawson Maclaurin series for |x| <= 1.
double dawson_series_small(double x) {
    const double x2 = x * x;
    double term = x;
    double sum = x;
    for (int k = 1; k < 40; ++k) {
        term *= -2.0 * x2 / (2 * k + 1);
        sum += term;
        if (std::fabs(term) < 1e-18 * std::fabs(sum)) break;
    }
    return sum;
}

// Mid-range Dawson by sampled-exponential quadrature (Rybicki):
//   F(x) = (1/sqrt(pi)) sum_{n odd} e^{-(x - n h)^2} / n,
// with h = 1/4 the discretization error is ~e^{-(pi/2h)^2} ~ 7e-18.
double dawson_rybicki(double x) {
    constexpr double h = 0.25;
    constexpr double cut = 38.0; // drop terms below e^{-38}
    const double half_width = std::sqrt(cut);
    const int n_lo_raw = static_cast<int>(std::floor((x - half_width) / h));
    const int n_hi_raw = static_cast<int>(std::ceil((x + half_width) / h));
    int n = n_lo_raw | 1; // first odd >= n_lo_raw
    double sum = 0.0;
    for (; n <= n_hi_raw; n += 2) {
        const double d = x - n * h;
        sum += std::exp(-d * d) / n;
    }
    return sum * std::numbers::inv_sqrtpi;
}

// Asymptotic expansion F(x) ~ 1/(2x) sum_k (2k-1)!!/(2x^2)^k, |x| >= 6.
double dawson_asymptotic(double x) {
    const double inv = 1.0 / (2.0 * x * x);
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 40; ++k) {
        const double next = term * (2 * k - 1) * inv;
        if (next >= term) break; // divergence onset
        term = next;
        sum += term;
        if (term < 1e-17 * sum) break;
    }
    return sum / (2.0 * x);
}

} // namespace

double erf(double x) {
    if (std::isnan(x)) return x;
    const double ax = std::fabs(x);
    double r;
    if (ax <= 0.84)
        r = erf_series_small(ax);
    else if (ax < 6.0)
        r = erf_series_scaled(ax);
    else
        // erfc(6) ~ 2e-17 sits below one ulp of 1; report the largest double
        // strictly below 1 so |erf| < 1 holds for every finite argument
        r = std::nextafter(1.0, 0.0);
    if (r >= 1.0) r = std::nextafter(1.0, 0.0);
    return x < 0.0 ? -r : r;
}

double dawson(double x) {
    const double ax = std::fabs(x);
    double r;
    if (ax <= 1.0)
        r = dawson_series_small(ax);
    else if (ax < 6.0)
        r = dawson_rybicki(ax);
    else
        r = dawson_asymptotic(ax);
    return x < 0.0 ? -r : r;
}

double erfi(double x) {
    const double log_mag = x * x + std::log(std::fabs(kTwoOverSqrtPi * dawson(x)) +
                                            std::numeric_limits<double>::min());
    if (log_mag > kLogDblMax)
        throw OverflowError("erfi(" + std::to_string(x) +
                            ") exceeds the double range; use erfi_scaled");
    return kTwoOverSqrtPi * dawson(x) * std::exp(x * x);
}

ScaledValue erfi_scaled(double x) {
    if (x == 0.0) return ScaledValue{0.0, 0.0};
    return ScaledValue::from_parts(kTwoOverSqrtPi * dawson(x), x * x);
}

double erfi_general(double radicand) {
    if (radicand >= 0.0) return erfi(std::sqrt(radicand));
    return erf(std::sqrt(-radicand));
}

ScaledValue ScaledValue::from_parts(double mantissa, double log_scale) {
    return ScaledValue{mantissa, log_scale}.normalized();
}

ScaledValue ScaledValue::normalized() const {
    if (mantissa == 0.0) return ScaledValue{0.0, 0.0};
    const double shift = std::floor(std::log(std::fabs(mantissa)));
    return ScaledValue{mantissa * std::exp(-shift), log_scale + shift};
}

double ScaledValue::to_real() const {
    if (mantissa == 0.0) return 0.0;
    return mantissa * std::exp(log_scale);
}

double ScaledValue::log_abs() const {
    if (mantissa == 0.0) return -std::numeric_limits<double>::infinity();
    return std::log(std::fabs(mantissa)) + log_scale;
}

ScaledValue scaled_sum(const ScaledValue* terms, int count) {
    double smax = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < count; ++i)
        if (!terms[i].is_zero()) smax = std::max(smax, terms[i].log_scale);
    if (!std::isfinite(smax)) return ScaledValue{0.0, 0.0};
    double sum = 0.0;
    for (int i = 0; i < count; ++i) {
        if (terms[i].is_zero()) continue;
        sum += terms[i].mantissa * std::exp(terms[i].log_scale - smax);
    }
    return ScaledValue{sum, smax}.normalized();
}

ScaledValue scaled_add(const ScaledValue& a, const ScaledValue& b) {
    const ScaledValue terms[2] = {a, b};
    return scaled_sum(terms, 2);
}

ScaledValue scaled_mul(const ScaledValue& a, double factor) {
    if (factor == 0.0 || a.is_zero()) return ScaledValue{0.0, 0.0};
    return ScaledValue{a.mantissa * factor, a.log_scale}.normalized();
}

} // namespace mobius::specfun
