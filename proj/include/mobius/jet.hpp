#ifndef MOBIUS_JET_HPP
#define MOBIUS_JET_HPP

#include <cmath>

#include "mobius/specfun.hpp"

namespace mobius {

/// Scalar carrying value and first/second derivatives with respect to one
/// independent variable.  Lets the thermodynamic closed forms be written once
/// and differentiated exactly in beta, m, or B by operator overloading.
struct Jet2 {
    double f = 0.0;  // value
    double d1 = 0.0; // first derivative
    double d2 = 0.0; // second derivative

    Jet2() = default;
    Jet2(double v) : f(v) {}
    Jet2(double v, double first, double second = 0.0) : f(v), d1(first), d2(second) {}

    static Jet2 variable(double v) { return Jet2(v, 1.0, 0.0); }
};

inline Jet2 operator+(const Jet2& a, const Jet2& b) { return {a.f + b.f, a.d1 + b.d1, a.d2 + b.d2}; }
inline Jet2 operator-(const Jet2& a, const Jet2& b) { return {a.f - b.f, a.d1 - b.d1, a.d2 - b.d2}; }
inline Jet2 operator-(const Jet2& a) { return {-a.f, -a.d1, -a.d2}; }

inline Jet2 operator*(const Jet2& a, const Jet2& b) {
    return {a.f * b.f,
            a.d1 * b.f + a.f * b.d1,
            a.d2 * b.f + 2.0 * a.d1 * b.d1 + a.f * b.d2};
}

inline Jet2 operator/(const Jet2& a, const Jet2& b) {
    const double inv = 1.0 / b.f;
    const double q = a.f * inv;
    const double q1 = (a.d1 - q * b.d1) * inv;
    const double q2 = (a.d2 - 2.0 * q1 * b.d1 - q * b.d2) * inv;
    return {q, q1, q2};
}

/// Chain rule for g(u): needs g, g', g'' at u.f.
inline Jet2 chain(const Jet2& u, double g, double gp, double gpp) {
    return {g, gp * u.d1, gpp * u.d1 * u.d1 + gp * u.d2};
}

inline Jet2 exp(const Jet2& u) {
    const double e = std::exp(u.f);
    return chain(u, e, e, e);
}

inline Jet2 log(const Jet2& u) {
    const double inv = 1.0 / u.f;
    return chain(u, std::log(u.f), inv, -inv * inv);
}

inline Jet2 sqrt(const Jet2& u) {
    const double r = std::sqrt(u.f);
    return chain(u, r, 0.5 / r, -0.25 / (r * u.f));
}

/// Dawson integral over a jet: F' = 1 - 2xF, F'' = (4x^2 - 2)F - 2x.
inline Jet2 dawson(const Jet2& u) {
    const double F = specfun::dawson(u.f);
    const double Fp = 1.0 - 2.0 * u.f * F;
    const double Fpp = (4.0 * u.f * u.f - 2.0) * F - 2.0 * u.f;
    return chain(u, F, Fp, Fpp);
}

// double/Jet2 mixed arithmetic
inline Jet2 operator+(double a, const Jet2& b) { return Jet2(a) + b; }
inline Jet2 operator+(const Jet2& a, double b) { return a + Jet2(b); }
inline Jet2 operator-(double a, const Jet2& b) { return Jet2(a) - b; }
inline Jet2 operator-(const Jet2& a, double b) { return a - Jet2(b); }
inline Jet2 operator*(double a, const Jet2& b) { return Jet2(a) * b; }
inline Jet2 operator*(const Jet2& a, double b) { return a * Jet2(b); }
inline Jet2 operator/(double a, const Jet2& b) { return Jet2(a) / b; }
inline Jet2 operator/(const Jet2& a, double b) { return a / Jet2(b); }

// Generic helpers so formulas templated on the scalar type compile for both
// double and Jet2.
inline double value_of(double x) { return x; }
inline double value_of(const Jet2& x) { return x.f; }

inline double exp(double x) { return std::exp(x); }
inline double log(double x) { return std::log(x); }
inline double sqrt(double x) { return std::sqrt(x); }
inline double dawson(double x) { return specfun::dawson(x); }

} // namespace mobius

#endif
