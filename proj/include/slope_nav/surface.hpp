// Mountain-slope surfaces z = f(x1, x2) and the geometry derived from them.
//
// A Surface produces second-order jets of its height function. From a jet at
// one point we build:
//   * the slope metric      h_ij = delta_ij + f_i f_j           (det h = 1+q)
//   * the gravitational wind G^T with components w^i = -gbar f_i/(q+1)
//     and norm ||G^T||_h = gbar * sqrt(q/(q+1)),   q = f_1^2 + f_2^2
//   * the curvature scalars r00, r0, r, r^i entering the geodesic spray
//     (covariant derivatives of the wind; the associated s-quantities vanish
//     identically because the 1-form beta = f_1 dx1 + f_2 dx2 is closed).
//
// Built-in surfaces ("incline:<a>", "gauss3") carry hand-coded jets so the
// core experiments do not depend on the expression parser; "expr:<formula>"
// goes through slope_nav::expr.

#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "slope_nav/jet.hpp"
#include "slope_nav/vec.hpp"

namespace slope_nav {

class Surface {
  public:
    virtual ~Surface() = default;

    // Height jet at (x1, x2): value f, gradient (f_1, f_2), Hessian f_ij.
    virtual Jet2 height_jet(double x1, double x2) const = 0;

    // The canonical spec string this surface was built from.
    virtual const std::string& spec() const = 0;
};

// Factory for the three spec forms: "incline:<a>" (z = a*x1), "gauss3"
// (the triple Gaussian hill of the 2D experiments), "expr:<formula>".
// Throws std::invalid_argument for an unknown scheme and propagates
// expr::ParseError for a malformed formula.
std::shared_ptr<const Surface> make_surface(std::string_view spec);

// First-order pointwise geometry: metric, wind, admissible-wind ingredients.
struct PointGeometry {
    double x1 = 0.0, x2 = 0.0;  // evaluation point (kept for diagnostics)
    Jet2 jet;                   // height jet at the point
    double q = 0.0;             // f_1^2 + f_2^2
    double h11 = 1.0, h12 = 0.0, h22 = 1.0;  // slope metric components
    Vec2 wind;                  // contravariant components w^i of G^T
    double windNorm = 0.0;      // ||G^T||_h = gbar*sqrt(q/(q+1))
    double gbar = 0.0;          // rescaled gravity
};

// Requires gbar >= 0 (throws std::invalid_argument otherwise); surface
// evaluation domain errors propagate.
PointGeometry point_geometry(const Surface& surface, double x1, double x2,
                             double gbar);

// Curvature-derived quantities feeding the spray. All of them are invariant
// under rescaling of gbar (the wind-strength powers cancel by definition), so
// they depend on the surface alone:
//   r00 form : r_ij = f_ij/(q+1)
//   r0       : r_i  = (f_1 f_{1i} + f_2 f_{2i})/(q+1)^2
//   r        :        (f_1^2 f_11 + 2 f_1 f_2 f_12 + f_2^2 f_22)/(q+1)^3
//   rup      : r^i = h^{ij} r_j, explicitly
//     r^1 = [ (1+f_2^2)(f_1 f_11 + f_2 f_12) - f_1 f_2 (f_1 f_12 + f_2 f_22) ]/(q+1)^3
//     r^2 = [ -f_1 f_2 (f_1 f_11 + f_2 f_12) + (1+f_1^2)(f_1 f_12 + f_2 f_22) ]/(q+1)^3
struct CurvatureData {
    double r00_11 = 0.0, r00_12 = 0.0, r00_22 = 0.0;  // quadratic form r_ij
    double r0_1 = 0.0, r0_2 = 0.0;                    // covector r_i
    double r = 0.0;                                   // scalar
    Vec2 rup;                                         // vector r^i
};

CurvatureData curvature_data(const Surface& surface, double x1, double x2,
                             double gbar);

// alpha = sqrt(h_ij y^i y^j), beta = f_1 y^1 + f_2 y^2 (= -h(y, G^T)/gbar).
struct AlphaBeta {
    double alpha = 0.0;
    double beta = 0.0;
};

AlphaBeta alpha_beta(const PointGeometry& geom, Vec2 y);

// h-inner product of two tangent vectors at the point.
double h_dot(const PointGeometry& geom, Vec2 a, Vec2 b);

}  // namespace slope_nav
