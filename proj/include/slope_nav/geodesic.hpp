// Time geodesics of the slope metric: spray coefficients and integration.
//
// The geodesic ODE is  x-ddot^i + 2 G^i(x, x-dot) = 0  with
//
//   G^i = G_alpha^i + [Theta (r00 + 2 alpha^2 R r) + alpha Omega r0] y^i/alpha
//       - [Psi (r00 + 2 alpha^2 R r) + alpha Pi r0] w^i/gbar
//       - alpha^2 R r^i,
//
// where G_alpha^i = (1/2) r00 f_i is the Riemannian spray of h (r00 and the
// other r-quantities come from CurvatureData), and
// w^i/gbar = -f_i/(q+1) stays finite as gbar -> 0. The coefficient functions
// Theta, Psi, Omega, Pi, R are rational in (alpha, beta, F) through the
// auxiliary quantities A, B, C, E; along time-parametrized geodesics F = 1
// and the restricted ("tilde") forms apply, which is the production path.

#pragma once

#include <string>
#include <vector>

#include "slope_nav/metric.hpp"
#include "slope_nav/params.hpp"
#include "slope_nav/surface.hpp"
#include "slope_nav/vec.hpp"

namespace slope_nav {

// Auxiliary scalars of the spray formulas at a state (x, y):
//   A = -(1/a2) { (1-eta)[1-(2-eta-etaTilde)(1-etaTilde)W^2] F^2
//                 - (2-eta-etaTilde)^2 gbar beta F - (2-eta-etaTilde) a2 }
//   B = -(1/a2) { [1-2(1-eta)(1-etaTilde)W^2] F^2
//                 - 2(2-eta-etaTilde) gbar beta F - 2 a2 }
//   C = (a2 B + gbar beta A F) / (alpha F)        (a2 = alpha^2)
//   E = a2^3 B C^2 + (W^2 a2 - gbar^2 beta^2)
//       [a2^2 A^2 B + (eta-etaTilde)^2 F^4]
// and the spray coefficients Theta, Psi, Omega, Pi, R built from them.
struct SprayTerms {
    double A = 0.0, B = 0.0, C = 0.0, E = 0.0;
    double Theta = 0.0, Psi = 0.0, Omega = 0.0, Pi = 0.0, R = 0.0;
};

// F must be the metric value at (geom, y); pass 1.0 for the restricted forms
// used along time-parametrized geodesics. Throws AdmissibilityError outside
// the admissible wind range and DegenerateDenominator if |B|, |C| or |E|
// degenerate (impossible inside the admissible set).
SprayTerms spray_terms(const PointGeometry& geom, Vec2 y,
                       const TractionParams& params, double F);

// Full spray vector G^i at a unit-time state (F(x,y) = 1 within the
// integration drift tolerance).
Vec2 spray(const PointGeometry& geom, const CurvatureData& curv, Vec2 y,
           const TractionParams& params);

// Resultant velocity u + G_active for heading theta: the unique initial
// velocity of unit travel time (F(x, y) = 1) in that heading. At q = 0
// returns the Euclidean (cos theta, sin theta).
Vec2 initial_velocity(const PointGeometry& geom, double theta,
                      const TractionParams& params);

struct GeodesicState {
    Vec2 x;         // position
    Vec2 y;         // velocity (time-normalized, F(x,y) = 1)
    double t = 0.0; // elapsed time
};

enum class PathStatus {
    complete,        // integrated to the requested horizon
    admissibility,   // wind bound violated mid-path; path truncated
    drift            // |F - 1| exceeded driftTol; path truncated
};

struct GeodesicPath {
    std::vector<GeodesicState> states;  // strictly increasing t, step 0 first
    double theta0 = 0.0;
    TractionParams params;
    std::string surface;  // spec string of the surface integrated on
    double gbar = 0.0;
    PathStatus status = PathStatus::complete;
    std::string message;  // failure detail when status != complete
};

struct IntegrateOptions {
    double driftTol = 1e-6;   // |F(x,y) - 1| ceiling along the path
    bool renormalize = false; // project y <- y/F(x,y) after each step
    bool adaptive = false;    // halve dt locally while drift/step too large
};

// Classical fixed-step RK4 on the first-order system (x, y). Requires T > 0,
// dt > 0 (std::invalid_argument otherwise). Mid-path failures return the
// partial path with status/message set instead of throwing, so fronts can
// record gaps.
GeodesicPath integrate(const Surface& surface, Vec2 x0, double theta,
                       const TractionParams& params, double gbar, double T,
                       double dt, const IntegrateOptions& options = {});

// Discrete travel time of a polyline: sum of F(midpoint, delta) over
// segments (a Riemann sum of the time functional, exact on straight rays of
// position-independent metrics). Throws AdmissibilityError if the wind bound
// fails at a midpoint.
double path_time(const Surface& surface, const std::vector<Vec2>& points,
                 const TractionParams& params, double gbar);

}  // namespace slope_nav
