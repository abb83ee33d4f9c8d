// Strong-convexity certification sweeps.
//
// The admissibility bound at a surface point is gbar * A(x) < b0 with
// A(x) = sqrt(q/(q+1)) the steepness factor, so a whole region is certified
// by the single number  delta = b0 / max_region A  — any gbar below delta
// keeps the metric strongly convex everywhere in the region.

#pragma once

#include <vector>

#include "slope_nav/params.hpp"
#include "slope_nav/surface.hpp"
#include "slope_nav/vec.hpp"

namespace slope_nav {

struct Box {
    double x1min = 0.0, x2min = 0.0;
    double x1max = 0.0, x2max = 0.0;
};

struct SteepnessResult {
    double m = 0.0;  // max of sqrt(q/(q+1)) over the box
    Vec2 argmax;
};

// Coarse gridN x gridN scan of the steepness factor followed by Nelder-Mead
// refinement of the best cell to 1e-6 in position (clamped to the box).
// Requires gridN >= 32 and a finite, nonempty box.
SteepnessResult max_steepness(const Surface& surface, const Box& region,
                              int gridN);

// delta = b0(params)/m. Returns +inf at the Riemannian corner (or on a flat
// region where m = 0).
double gbar_bound(const Surface& surface, const Box& region,
                  const TractionParams& params, int gridN = 256);

// The wind-bound surface b0(eta, etaTilde) sampled on a uniform
// gridN x gridN grid of the unit square, clamped at `ceiling` for plotting
// (the unclamped value is classify(eta, etaTilde).windBound). Row-major in
// eta (outer) then etaTilde. Requires gridN >= 16.
struct BoundSample {
    double eta = 0.0;
    double etaTilde = 0.0;
    double bound = 0.0;  // min(b0, ceiling)
};

std::vector<BoundSample> bound_surface(int gridN, double ceiling = 5.0);

}  // namespace slope_nav
