#ifndef MOBIUS_SPECFUN_HPP
#define MOBIUS_SPECFUN_HPP

#include "mobius/errors.hpp"

namespace mobius::specfun {

/// A real number represented as mantissa * e^{log_scale}.  Keeps products of
/// Boltzmann-sized exponentials and erfi values representable far beyond the
/// double range.  After normalize(), |mantissa| is in [1, e) or exactly 0.
struct ScaledValue {
    double mantissa = 0.0;
    double log_scale = 0.0;

    static ScaledValue from_parts(double mantissa, double log_scale);
    ScaledValue normalized() const;
    double to_real() const;       // mantissa * exp(log_scale); may overflow to inf
    double log_abs() const;       // log|value|; -inf for zero
    bool is_zero() const { return mantissa == 0.0; }

    ScaledValue operator-() const { return {-mantissa, log_scale}; }
};

/// Sum of scaled terms, computed by factoring out the largest log_scale.
ScaledValue scaled_sum(const ScaledValue* terms, int count);
ScaledValue scaled_add(const ScaledValue& a, const ScaledValue& b);
ScaledValue scaled_mul(const ScaledValue& a, double factor);

/// Error function, |erf| < 1, odd, ~1e-16 accurate.
double erf(double x);

/// Dawson integral F(x) = e^{-x^2} \int_0^x e^{t^2} dt.  Odd, bounded
/// (max ~0.5410442246 at x ~0.9241388730).  Series for small x, rational
/// core for mid range, asymptotic expansion for large x.
double dawson(double x);

/// Imaginary error function erfi(x) = (2/sqrt(pi)) \int_0^x e^{t^2} dt.
/// Throws OverflowError when e^{x^2} is not representable (|x| >~ 26.6);
/// use erfi_scaled there.
double erfi(double x);

/// erfi as a ScaledValue with log_scale = x^2 and mantissa built from the
/// bounded Dawson carrier; exact identity to erfi(x) whenever representable.
ScaledValue erfi_scaled(double x);

/// Sign-dispatching kernel for erfi of a square root:
///   radicand >= 0 -> erfi(sqrt(radicand))
///   radicand <  0 -> erf(sqrt(-radicand)), the real factor of
///                    erfi(i y) = i erf(y).
double erfi_general(double radicand);

} // namespace mobius::specfun

#endif
