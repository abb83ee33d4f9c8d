// Minimal 2D vector type used throughout the library.
//
// Tangent vectors on the parametric domain are plain coordinate pairs; all
// metric structure (the slope metric h, the Finsler metric F) lives in the
// functions that consume them, never in the type itself.

#pragma once

#include <cmath>

namespace slope_nav {

struct Vec2 {
    double x1 = 0.0;
    double x2 = 0.0;
};

constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x1 + b.x1, a.x2 + b.x2}; }
constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x1 - b.x1, a.x2 - b.x2}; }
constexpr Vec2 operator*(double c, Vec2 a) { return {c * a.x1, c * a.x2}; }
constexpr Vec2 operator*(Vec2 a, double c) { return c * a; }
constexpr Vec2 operator/(Vec2 a, double c) { return {a.x1 / c, a.x2 / c}; }
constexpr Vec2 operator-(Vec2 a) { return {-a.x1, -a.x2}; }

constexpr Vec2& operator+=(Vec2& a, Vec2 b) { a = a + b; return a; }
constexpr Vec2& operator-=(Vec2& a, Vec2 b) { a = a - b; return a; }

// Euclidean helpers (used for diagnostics and plotting; geometric lengths go
// through the metric functions instead).
inline double dot(Vec2 a, Vec2 b) { return a.x1 * b.x1 + a.x2 * b.x2; }
inline double norm(Vec2 a) { return std::hypot(a.x1, a.x2); }

}  // namespace slope_nav
