// The (eta, etaTilde)-slope metric: time cost of moving through a tangent
// vector on a slippery gravity-fed slope.
//
// For admissible wind (||G^T||_h < b0) the travel-time norm F(x, y) is the
// smallest positive root of the quartic
//
//   (1-eta)^2 W^2 [1 - (1-etaTilde)^2 W^2] F^4
//   + 2 (1-eta) [1 - (2-eta-etaTilde)(1-etaTilde) W^2] gbar beta F^3
//   + { [1 - 2 (1-eta)(1-etaTilde) W^2] alpha^2
//       - (2-eta-etaTilde)^2 gbar^2 beta^2 } F^2
//   - 2 (2-eta-etaTilde) gbar alpha^2 beta F  -  alpha^4  =  0,
//
// where W = ||G^T||_h, and equivalently of the irrational equation
//
//   F sqrt(alpha^2 + 2(1-eta) gbar beta F + (1-eta)^2 W^2 F^2)
//     = alpha^2 + (2-eta-etaTilde) gbar beta F
//       + (1-eta)(1-etaTilde) W^2 F^2,
//
// whose residual we report as the evaluation certificate. Special parameter
// values short-circuit to closed forms: the diagonal eta == etaTilde is a
// Randers-type metric, the edge eta == 1 a Matsumoto-type one, and (1,1) or
// zero wind degenerate to the Riemannian slope metric alpha.

#pragma once

#include <vector>

#include "slope_nav/params.hpp"
#include "slope_nav/surface.hpp"
#include "slope_nav/vec.hpp"

namespace slope_nav {

enum class MetricBranch { quartic, quadraticRanders, quadraticMatsumoto, riemannian };

const char* to_string(MetricBranch b);

struct MetricEval {
    double alpha = 0.0;
    double beta = 0.0;
    double s = 0.0;         // beta/alpha
    double F = 0.0;         // the metric value
    double residual = 0.0;  // |lhs - rhs| of the irrational defining equation
    MetricBranch branch = MetricBranch::riemannian;
};

// Throws ConvexityViolation when ||G^T||_h >= b0 at this point, and
// RootCountError if the quartic has no positive root (cannot happen under
// the precondition; never silently guessed).  Squaring the defining
// equation adds roots above the genuine one for downhill headings, so the
// metric value is the smallest positive root; see the selection note in
// metric.cpp.  Requires y != 0.
MetricEval slope_metric(const PointGeometry& geom, Vec2 y,
                        const TractionParams& params);

// Closed-form Randers metric of the diagonal family with traction eta:
//   F = ( sqrt((1-eta)^2 gbar^2 beta^2 + lambda alpha^2) + (1-eta) gbar beta )
//       / lambda,     lambda = 1 - (1-eta)^2 W^2.
// Requires (1-eta) W < 1 (throws ConvexityViolation otherwise).
double randers_oracle(const PointGeometry& geom, Vec2 y, double eta);

// Closed-form Matsumoto metric of the eta == 1 edge with along-traction
// etaTilde:  F = alpha^2 / (alpha - (1-etaTilde) gbar beta).
// Requires (1-etaTilde) W < 1/2 (throws ConvexityViolation otherwise).
double matsumoto_oracle(const PointGeometry& geom, Vec2 y, double etaTilde);

// The navigation condition (1 - (1-etaTilde) W) / (1 - (eta-etaTilde) W) > 0,
// equivalent to F(x, -(1-eta) G^T) < 1: the craft can make headway against
// the active wind. Necessary for the metric to solve the navigation problem;
// strong convexity (the b0 bound) is the stricter constraint.
bool navigation_condition(const PointGeometry& geom,
                          const TractionParams& params);

// One point of the unit ball boundary F(x, y) = 1. (X, Y) are coordinates in
// the downhill-orthonormal frame {e1, e2}; y is the same vector in tangent
// coordinates. theta is the self-velocity heading:
//   X = [1 + (eta - etaTilde) W cos theta] cos theta + (1 - eta) W
//   Y = [1 + (eta - etaTilde) W cos theta] sin theta
struct IndicatrixPoint {
    double theta = 0.0;
    double X = 0.0, Y = 0.0;
    Vec2 y;
};

// Requires admissible wind (throws ConvexityViolation). At critical points
// (q = 0) the frame is undefined and the metric is Riemannian; the h-unit
// circle is returned with y = (cos theta, sin theta).
std::vector<IndicatrixPoint> indicatrix(const PointGeometry& geom,
                                        const TractionParams& params,
                                        const std::vector<double>& thetas);

}  // namespace slope_nav
