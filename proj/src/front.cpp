// Time fronts from geodesic fans, and the four-corner envelope
// (see front.hpp).

#include "slope_nav/front.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "slope_nav/errors.hpp"
#include "parallel.hpp"

namespace slope_nav {

TimeFront time_front(const Surface& surface, Vec2 center,
                     const TractionParams& params, double gbar, double t,
                     int n, double dt, const IntegrateOptions& options) {
    if (n < 8) throw std::invalid_argument("time_front requires n >= 8");
    if (!(t > 0.0)) throw std::invalid_argument("time_front requires t > 0");
    if (!(dt > 0.0)) {
        throw std::invalid_argument("time_front requires dt > 0");
    }

    TimeFront front;
    front.center = center;
    front.t = t;
    front.params = params;
    front.gbar = gbar;

    // Downhill orthonormal frame at the center: e1 = (-f1,-f2)/sqrt(q(1+q)),
    // e2 = (f2,-f1)/sqrt(q). The stored duals invert [e1 e2]; at a flat
    // center (q = 0, h = identity) the chart axes already are the frame.
    const PointGeometry geom =
        point_geometry(surface, center.x1, center.x2, gbar);
    if (geom.q > 0.0) {
        const double f1 = geom.jet.d1, f2 = geom.jet.d2, q = geom.q;
        const Vec2 e1{-f1 / std::sqrt(q * (1.0 + q)),
                      -f2 / std::sqrt(q * (1.0 + q))};
        const Vec2 e2{f2 / std::sqrt(q), -f1 / std::sqrt(q)};
        const double det = e1.x1 * e2.x2 - e2.x1 * e1.x2;
        front.frameDual1 = Vec2{e2.x2 / det, -e2.x1 / det};
        front.frameDual2 = Vec2{-e1.x2 / det, e1.x1 / det};
    }

    front.samples.resize(static_cast<std::size_t>(n));

    detail::parallel_for(static_cast<std::size_t>(n), [&](std::size_t k) {
        FrontSample& sample = front.samples[k];
        sample.theta = 2.0 * std::numbers::pi * static_cast<double>(k) /
                       static_cast<double>(n);
        try {
            const GeodesicPath path = integrate(surface, center, sample.theta,
                                                params, gbar, t, dt, options);
            if (path.status == PathStatus::complete) {
                sample.endpoint = path.states.back().x;
            } else {
                sample.ok = false;
                sample.message = path.message;
            }
        } catch (const AdmissibilityError& e) {
            sample.ok = false;  // inadmissible already at the center
            sample.message = e.what();
        }
    });
    return front;
}

EnvelopeBounds envelope_bounds(const Surface& surface, Vec2 center,
                               double gbar, double t, int n, double dt) {
    EnvelopeBounds env;
    env.znp = time_front(surface, center, classify(0.0, 0.0), gbar, t, n, dt);
    env.riem = time_front(surface, center, classify(1.0, 1.0), gbar, t, n, dt);
    env.mat = time_front(surface, center, classify(1.0, 0.0), gbar, t, n, dt);
    env.cross =
        time_front(surface, center, classify(0.0, 1.0), gbar, t, n, dt);

    for (const TimeFront* front : {&env.znp, &env.riem, &env.mat, &env.cross}) {
        for (const FrontSample& sample : front->samples) {
            if (!sample.ok) {
                throw ConvexityViolation(
                    "corner front (eta, etaTilde) = (" +
                    std::to_string(front->params.eta) + ", " +
                    std::to_string(front->params.etaTilde) +
                    ") failed at theta = " + std::to_string(sample.theta) +
                    ": " + sample.message);
            }
        }
    }
    return env;
}

Vec2 frame_coords(const TimeFront& front, Vec2 chartOffset) {
    return Vec2{dot(front.frameDual1, chartOffset),
                dot(front.frameDual2, chartOffset)};
}

namespace {

// Frame polar angle of a sample endpoint about the front center, in
// [0, 2pi).
double sample_angle(const TimeFront& front, const FrontSample& sample) {
    const Vec2 d = frame_coords(front, sample.endpoint - front.center);
    double a = std::atan2(d.x2, d.x1);
    if (a < 0.0) a += 2.0 * std::numbers::pi;
    return a;
}

}  // namespace

std::optional<double> front_radius(const TimeFront& front, double angle) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    angle = std::fmod(angle, two_pi);
    if (angle < 0.0) angle += two_pi;

    struct Polar {
        double angle, radius;
    };
    std::vector<Polar> polar;
    polar.reserve(front.samples.size());
    for (const FrontSample& sample : front.samples) {
        if (!sample.ok) continue;
        polar.push_back(
            Polar{sample_angle(front, sample),
                  norm(frame_coords(front, sample.endpoint - front.center))});
    }
    if (polar.size() < 2) return std::nullopt;

    // Adjacent fan samples (cyclically) whose endpoint angles straddle
    // `angle` along the short arc between them. Self-intersecting fronts may
    // yield several brackets; the smallest interpolated radius wins (the
    // conservative reachable-set reading).
    auto wrap_pi = [](double a) {
        a = std::fmod(a + std::numbers::pi, two_pi);
        if (a < 0.0) a += two_pi;
        return a - std::numbers::pi;
    };
    std::optional<double> best;
    const std::size_t m = polar.size();
    for (std::size_t i = 0; i < m; ++i) {
        const Polar& a = polar[i];
        const Polar& b = polar[(i + 1) % m];
        const double delta = wrap_pi(b.angle - a.angle);
        if (delta == 0.0) continue;
        const double dq = wrap_pi(angle - a.angle);
        if (delta > 0.0 ? (dq < 0.0 || dq > delta)
                        : (dq > 0.0 || dq < delta)) {
            continue;
        }
        const double w = dq / delta;
        const double r = a.radius + w * (b.radius - a.radius);
        if (!best || r < *best) best = r;
    }
    return best;
}

std::optional<double> inner_radius(const EnvelopeBounds& env, double angle) {
    const std::optional<double> znp = front_radius(env.znp, angle);
    const std::optional<double> riem = front_radius(env.riem, angle);
    if (!znp || !riem) return std::nullopt;
    return std::min(*znp, *riem);
}

std::optional<double> outer_radius(const EnvelopeBounds& env, double angle) {
    const std::optional<double> mat = front_radius(env.mat, angle);
    const std::optional<double> cross = front_radius(env.cross, angle);
    if (!mat || !cross) return std::nullopt;
    return std::max(*mat, *cross);
}

}  // namespace slope_nav
