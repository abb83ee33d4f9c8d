// Real-root solvers for low-degree polynomials.
//
// The quartic solver is the workhorse: it runs Ferrari's method through the
// resolvent cubic in long double, splits the quartic into two quadratics,
// and polishes every root with a few Newton steps on the original
// coefficients. Degenerate leading coefficients (relative to the coefficient
// scale) fall through to the lower-degree solvers instead of being divided
// by. Roots are returned sorted ascending with duplicates merged.

#pragma once

#include <vector>

namespace slope_nav {

// a*x^2 + b*x + c = 0
std::vector<double> real_roots_quadratic(double a, double b, double c);

// a*x^3 + b*x^2 + c*x + d = 0
std::vector<double> real_roots_cubic(double a, double b, double c, double d);

// c4*x^4 + c3*x^3 + c2*x^2 + c1*x + c0 = 0
std::vector<double> real_roots_quartic(double c4, double c3, double c2,
                                       double c1, double c0);

}  // namespace slope_nav
