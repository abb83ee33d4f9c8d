// Time fronts (isochrones) from geodesic fans, and the four-corner envelope.
//
// A front is the raw ordered fan of geodesic endpoints after time t — it is
// never untangled, because on steep terrain fronts may self-intersect past
// the cut locus and untangling is a global-optimality question this library
// does not address. Radius comparisons between fronts use the endpoint polar
// angle about the shared center, measured in the center's downhill
// orthonormal frame (angle 0 pointing straight downhill, radius the h-norm
// of the offset) with linear interpolation between adjacent fan samples.
// That frame matches the indicatrix parameterization, so on an incline the
// interpolated radii reproduce the closed-form corner speeds exactly.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slope_nav/geodesic.hpp"
#include "slope_nav/params.hpp"
#include "slope_nav/surface.hpp"
#include "slope_nav/vec.hpp"

namespace slope_nav {

struct FrontSample {
    double theta = 0.0;   // heading of the underlying geodesic
    Vec2 endpoint;        // position after time t
    bool ok = true;       // false when the ray failed mid-flight
    std::string message;  // failure detail for gaps
};

struct TimeFront {
    Vec2 center;
    double t = 0.0;
    std::vector<FrontSample> samples;  // ordered by theta in [0, 2pi)
    TractionParams params;
    double gbar = 0.0;
    // Dual covectors of the downhill orthonormal frame at the center: a
    // chart offset d has frame coordinates (dot(frameDual1, d),
    // dot(frameDual2, d)) = (downhill component, cross component). Defaults
    // are the chart axes, used when the center is flat (q = 0).
    Vec2 frameDual1{1.0, 0.0};
    Vec2 frameDual2{0.0, 1.0};
};

// Frame coordinates (X, Y) of a chart offset about the front's center:
// X along downhill, Y across, with X^2 + Y^2 the squared h-norm.
Vec2 frame_coords(const TimeFront& front, Vec2 chartOffset);

// Integrates n geodesics with headings theta_k = 2 pi k / n to time t.
// Per-ray failures are recorded as gaps; the front is still returned.
// Requires n >= 8, t > 0, dt > 0.
TimeFront time_front(const Surface& surface, Vec2 center,
                     const TractionParams& params, double gbar, double t,
                     int n, double dt = 1e-3,
                     const IntegrateOptions& options = {});

// The four corner problems bounding every (eta, etaTilde) front:
// per-direction inner envelope = min radius of {ZNP, RIEM}, outer envelope =
// max radius of {MAT, CROSS}. Requires ||G^T||_h < 1/2 on the swept region
// (the MAT/CROSS bound binds); throws ConvexityViolation otherwise.
struct EnvelopeBounds {
    TimeFront znp;    // (0,0)
    TimeFront riem;   // (1,1)
    TimeFront mat;    // (1,0)
    TimeFront cross;  // (0,1)
};

EnvelopeBounds envelope_bounds(const Surface& surface, Vec2 center,
                               double gbar, double t, int n,
                               double dt = 1e-3);

// Front radius at a polar angle about the front's center (angle and radius
// in the downhill frame, see frame_coords), linearly interpolated between
// the two fan samples whose endpoint angles bracket `angle`. Gap samples are
// skipped. Returns nullopt if no bracketing pair of valid samples exists.
std::optional<double> front_radius(const TimeFront& front, double angle);

// Pointwise envelope radii at a polar angle (nullopt if either constituent
// front has no valid bracket there).
std::optional<double> inner_radius(const EnvelopeBounds& env, double angle);
std::optional<double> outer_radius(const EnvelopeBounds& env, double angle);

}  // namespace slope_nav
