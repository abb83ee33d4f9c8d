// Second-order forward-mode jets in two variables.
//
// A Jet2 carries a value, both first partials and the (symmetric) Hessian of
// a scalar quantity with respect to the surface coordinates (x1, x2). All
// arithmetic propagates derivatives exactly (chain rule), so surface heights
// evaluated through jets yield machine-accurate f_i and f_ij — no finite
// differencing anywhere in the production path.
//
// Domain violations (division by zero, sqrt/log of a non-positive value,
// 0 raised to a negative power) throw std::domain_error with a terse cause;
// the expression evaluator catches and re-wraps them with the offending
// sub-expression attached.

#pragma once

#include <cmath>
#include <stdexcept>

namespace slope_nav {

struct Jet2 {
    double v = 0.0;                           // value
    double d1 = 0.0, d2 = 0.0;                // first partials
    double d11 = 0.0, d12 = 0.0, d22 = 0.0;   // Hessian (single triangle)

    static Jet2 constant(double c) { return {c, 0, 0, 0, 0, 0}; }
    static Jet2 var_x1(double x) { return {x, 1, 0, 0, 0, 0}; }
    static Jet2 var_x2(double x) { return {x, 0, 1, 0, 0, 0}; }
};

inline Jet2 operator+(const Jet2& a, const Jet2& b) {
    return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2,
            a.d11 + b.d11, a.d12 + b.d12, a.d22 + b.d22};
}

inline Jet2 operator-(const Jet2& a, const Jet2& b) {
    return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2,
            a.d11 - b.d11, a.d12 - b.d12, a.d22 - b.d22};
}

inline Jet2 operator-(const Jet2& a) {
    return {-a.v, -a.d1, -a.d2, -a.d11, -a.d12, -a.d22};
}

inline Jet2 operator*(const Jet2& a, const Jet2& b) {
    return {a.v * b.v,
            a.d1 * b.v + a.v * b.d1,
            a.d2 * b.v + a.v * b.d2,
            a.d11 * b.v + 2 * a.d1 * b.d1 + a.v * b.d11,
            a.d12 * b.v + a.d1 * b.d2 + a.d2 * b.d1 + a.v * b.d12,
            a.d22 * b.v + 2 * a.d2 * b.d2 + a.v * b.d22};
}

inline Jet2 operator*(double c, const Jet2& a) {
    return {c * a.v, c * a.d1, c * a.d2, c * a.d11, c * a.d12, c * a.d22};
}
inline Jet2 operator*(const Jet2& a, double c) { return c * a; }
inline Jet2 operator+(const Jet2& a, double c) { Jet2 r = a; r.v += c; return r; }
inline Jet2 operator+(double c, const Jet2& a) { return a + c; }
inline Jet2 operator-(const Jet2& a, double c) { return a + (-c); }
inline Jet2 operator-(double c, const Jet2& a) { return (-a) + c; }

inline Jet2 operator/(const Jet2& a, const Jet2& b) {
    if (b.v == 0.0) throw std::domain_error("division by zero");
    // t = a/b: differentiate a = t*b and solve for t's derivatives in order.
    Jet2 t;
    t.v = a.v / b.v;
    t.d1 = (a.d1 - t.v * b.d1) / b.v;
    t.d2 = (a.d2 - t.v * b.d2) / b.v;
    t.d11 = (a.d11 - t.v * b.d11 - 2 * t.d1 * b.d1) / b.v;
    t.d12 = (a.d12 - t.v * b.d12 - t.d1 * b.d2 - t.d2 * b.d1) / b.v;
    t.d22 = (a.d22 - t.v * b.d22 - 2 * t.d2 * b.d2) / b.v;
    return t;
}

// Composition with a univariate g: (g∘u) gets g'(u)·∇u and
// g'(u)·Hess(u) + g''(u)·∇u⊗∇u.
inline Jet2 compose(const Jet2& u, double g, double dg, double ddg) {
    return {g,
            dg * u.d1,
            dg * u.d2,
            dg * u.d11 + ddg * u.d1 * u.d1,
            dg * u.d12 + ddg * u.d1 * u.d2,
            dg * u.d22 + ddg * u.d2 * u.d2};
}

inline Jet2 exp(const Jet2& u) {
    const double e = std::exp(u.v);
    return compose(u, e, e, e);
}

inline Jet2 log(const Jet2& u) {
    if (u.v <= 0.0) throw std::domain_error("log of non-positive value");
    return compose(u, std::log(u.v), 1.0 / u.v, -1.0 / (u.v * u.v));
}

inline Jet2 sqrt(const Jet2& u) {
    if (u.v < 0.0) throw std::domain_error("sqrt of negative value");
    if (u.v == 0.0) throw std::domain_error("sqrt derivative singular at zero");
    const double r = std::sqrt(u.v);
    return compose(u, r, 0.5 / r, -0.25 / (r * u.v));
}

inline Jet2 sin(const Jet2& u) {
    const double s = std::sin(u.v), c = std::cos(u.v);
    return compose(u, s, c, -s);
}

inline Jet2 cos(const Jet2& u) {
    const double s = std::sin(u.v), c = std::cos(u.v);
    return compose(u, c, -s, -c);
}

// Integer powers stay valid for non-positive bases (checked separately for
// negative exponents at zero).
inline Jet2 pow_int(const Jet2& u, long long n) {
    if (n == 0) return Jet2::constant(1.0);
    if (u.v == 0.0 && n < 0) throw std::domain_error("zero base with negative exponent");
    const double g = std::pow(u.v, static_cast<double>(n));
    const double dg = static_cast<double>(n) * std::pow(u.v, static_cast<double>(n - 1));
    const double ddg = (n == 1) ? 0.0
        : static_cast<double>(n) * static_cast<double>(n - 1) *
          std::pow(u.v, static_cast<double>(n - 2));
    return compose(u, g, dg, ddg);
}

// Real exponent: requires a strictly positive base (principal branch).
inline Jet2 pow_real(const Jet2& u, double c) {
    if (u.v <= 0.0) throw std::domain_error("non-integer power of non-positive base");
    const double g = std::pow(u.v, c);
    return compose(u, g, c * g / u.v, c * (c - 1) * g / (u.v * u.v));
}

// Fully general power u^w = exp(w·log u).
inline Jet2 pow(const Jet2& u, const Jet2& w) {
    return exp(w * log(u));
}

}  // namespace slope_nav
