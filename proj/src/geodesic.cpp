// Spray coefficients and RK4 integration of the time-geodesic ODE
// (see geodesic.hpp for the formulas).

#include "slope_nav/geodesic.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "slope_nav/errors.hpp"

namespace slope_nav {

namespace {

void require_admissible(const PointGeometry& geom,
                        const TractionParams& params) {
    if (!(geom.windNorm < params.windBound)) {
        std::ostringstream msg;
        msg << "wind norm " << geom.windNorm << " at (" << geom.x1 << ", "
            << geom.x2 << ") reaches the strong-convexity bound "
            << params.windBound << " for (eta, etaTilde) = (" << params.eta
            << ", " << params.etaTilde << ")";
        throw AdmissibilityError(msg.str());
    }
}

void require_nondegenerate(const char* name, double value, double scale) {
    if (std::fabs(value) < 1e-13 * scale) {
        std::ostringstream msg;
        msg << "spray denominator " << name << " = " << value
            << " degenerates (scale " << scale
            << "); the admissibility precondition was violated";
        throw DegenerateDenominator(msg.str());
    }
}

}  // namespace

SprayTerms spray_terms(const PointGeometry& geom, Vec2 y,
                       const TractionParams& params, double F) {
    if (y.x1 == 0.0 && y.x2 == 0.0) {
        throw std::invalid_argument("spray_terms requires y != 0");
    }
    require_admissible(geom, params);

    const AlphaBeta ab = alpha_beta(geom, y);
    const double alpha = ab.alpha;
    const double a2 = alpha * alpha;
    const double gb = geom.gbar * ab.beta;
    const double W2 = geom.windNorm * geom.windNorm;
    const double u = 1.0 - params.eta;        // cross slip
    const double v = 1.0 - params.etaTilde;   // along slip
    const double sum = u + v;                 // 2 - eta - etaTilde
    const double de = params.etaTilde - params.eta;
    const double F2 = F * F;

    SprayTerms t;
    t.A = -(u * (1.0 - sum * v * W2) * F2 - sum * sum * gb * F - sum * a2) /
          a2;
    t.B = -((1.0 - 2.0 * u * v * W2) * F2 - 2.0 * sum * gb * F - 2.0 * a2) /
          a2;
    // C is half the derivative of the defining quartic in F over alpha^3; on
    // the root it equals (a2 B + gb A F)/(alpha F), which tests verify.
    t.C = (2.0 * u * u * W2 * (1.0 - v * v * W2) * F2 * F +
           3.0 * u * (1.0 - sum * v * W2) * gb * F2 +
           ((1.0 - 2.0 * u * v * W2) * a2 - sum * sum * gb * gb) * F -
           sum * gb * a2) /
          (a2 * alpha);
    t.E = a2 * a2 * a2 * t.B * t.C * t.C +
          (W2 * a2 - gb * gb) *
              (a2 * a2 * t.A * t.A * t.B + de * de * F2 * F2);

    const double scaleB =
        (std::fabs(1.0 - 2.0 * u * v * W2) * F2 +
         2.0 * std::fabs(sum * gb) * F + 2.0 * a2) / a2;
    const double scaleC =
        (2.0 * u * u * W2 * std::fabs(1.0 - v * v * W2) * F2 * F +
         3.0 * u * std::fabs((1.0 - sum * v * W2) * gb) * F2 +
         (std::fabs(1.0 - 2.0 * u * v * W2) * a2 + sum * sum * gb * gb) * F +
         sum * std::fabs(gb) * a2) / (a2 * alpha);
    const double scaleE =
        a2 * a2 * a2 * std::fabs(t.B) * t.C * t.C +
        (W2 * a2 + gb * gb) *
            (a2 * a2 * t.A * t.A * std::fabs(t.B) + de * de * F2 * F2);
    require_nondegenerate("B", t.B, scaleB);
    require_nondegenerate("C", t.C, scaleC);
    require_nondegenerate("E", t.E, scaleE);

    const double g2 = geom.gbar * geom.gbar;
    const double bracketR = v * a2 * t.B - de * F2;  // recurs in R, Omega, Pi
    t.R = u * g2 * bracketR * F2 / (2.0 * a2 * a2 * t.B);
    t.Theta = geom.gbar * alpha *
              (a2 * a2 * a2 * t.A * t.B * t.B - de * de * gb * F2 * F2 * F) /
              (2.0 * t.E * F);
    t.Psi = g2 * a2 * (a2 * a2 * t.A * t.A * t.B + de * de * F2 * F2) /
            (2.0 * t.E);
    t.Omega = u * g2 *
              (bracketR * (a2 * a2 * a2 * t.B * t.B * t.B +
                           de * de * W2 * F2 * F2 * F2) -
               de * de * a2 * F2 * F2 * F * (gb * t.B + W2 * t.A * F)) /
              (a2 * t.B * t.E);
    t.Pi = u * g2 * geom.gbar * F *
           (bracketR * (2.0 * a2 * a2 * a2 * t.A * t.B * t.B -
                        de * de * gb * F2 * F2 * F) +
            de * de * a2 * t.B * F2 * F2 * (2.0 * a2 + u * gb * F)) /
           (2.0 * a2 * alpha * t.B * t.E);
    return t;
}

Vec2 spray(const PointGeometry& geom, const CurvatureData& curv, Vec2 y,
           const TractionParams& params) {
    const SprayTerms t = spray_terms(geom, y, params, 1.0);
    const AlphaBeta ab = alpha_beta(geom, y);
    const double alpha = ab.alpha;
    const double a2 = alpha * alpha;

    const double r00 = curv.r00_11 * y.x1 * y.x1 +
                       2.0 * curv.r00_12 * y.x1 * y.x2 +
                       curv.r00_22 * y.x2 * y.x2;
    const double r0 = curv.r0_1 * y.x1 + curv.r0_2 * y.x2;
    const double bracket = r00 + 2.0 * a2 * t.R * curv.r;

    const double f1 = geom.jet.d1, f2 = geom.jet.d2;
    const double coefY = (t.Theta * bracket + alpha * t.Omega * r0) / alpha;
    // -w^i/gbar = +f_i/(q+1), finite for every gbar including 0.
    const double coefW = (t.Psi * bracket + alpha * t.Pi * r0) /
                         (geom.q + 1.0);

    return Vec2{0.5 * r00 * f1 + coefY * y.x1 + coefW * f1 -
                    a2 * t.R * curv.rup.x1,
                0.5 * r00 * f2 + coefY * y.x2 + coefW * f2 -
                    a2 * t.R * curv.rup.x2};
}

Vec2 initial_velocity(const PointGeometry& geom, double theta,
                      const TractionParams& params) {
    require_admissible(geom, params);
    return wind_decomposition(geom, theta, params).resultant;
}

namespace {

struct Deriv {
    Vec2 dx;  // = y
    Vec2 dy;  // = -2 G(x, y)
};

Deriv ode_rhs(const Surface& surface, double gbar,
              const TractionParams& params, Vec2 x, Vec2 y) {
    const PointGeometry geom = point_geometry(surface, x.x1, x.x2, gbar);
    const CurvatureData curv = curvature_data(surface, x.x1, x.x2, gbar);
    const Vec2 g = spray(geom, curv, y, params);
    return Deriv{y, Vec2{-2.0 * g.x1, -2.0 * g.x2}};
}

// One classical RK4 step of size h on the state (x, y).
void rk4_step(const Surface& surface, double gbar,
              const TractionParams& params, double h, Vec2& x, Vec2& y) {
    const Deriv k1 = ode_rhs(surface, gbar, params, x, y);
    const Deriv k2 = ode_rhs(surface, gbar, params,
                             x + 0.5 * h * k1.dx, y + 0.5 * h * k1.dy);
    const Deriv k3 = ode_rhs(surface, gbar, params,
                             x + 0.5 * h * k2.dx, y + 0.5 * h * k2.dy);
    const Deriv k4 = ode_rhs(surface, gbar, params,
                             x + h * k3.dx, y + h * k3.dy);
    x = x + (h / 6.0) * (k1.dx + 2.0 * k2.dx + 2.0 * k3.dx + k4.dx);
    y = y + (h / 6.0) * (k1.dy + 2.0 * k2.dy + 2.0 * k3.dy + k4.dy);
}

}  // namespace

GeodesicPath integrate(const Surface& surface, Vec2 x0, double theta,
                       const TractionParams& params, double gbar, double T,
                       double dt, const IntegrateOptions& options) {
    if (!(T > 0.0)) throw std::invalid_argument("integrate requires T > 0");
    if (!(dt > 0.0)) throw std::invalid_argument("integrate requires dt > 0");

    GeodesicPath path;
    path.theta0 = theta;
    path.params = params;
    path.surface = surface.spec();
    path.gbar = gbar;

    // Initial-state admissibility is the caller's precondition and throws;
    // failures past the first state truncate the path instead.
    const PointGeometry geom0 = point_geometry(surface, x0.x1, x0.x2, gbar);
    Vec2 y = initial_velocity(geom0, theta, params);
    Vec2 x = x0;
    path.states.push_back(GeodesicState{x, y, 0.0});

    double t = 0.0;
    double h = dt;  // current (possibly halved) step size
    const double hMin = dt * 0x1p-20;
    while (t < T) {
        double step = std::min(h, T - t);
        Vec2 xNew = x, yNew = y;
        try {
            rk4_step(surface, gbar, params, step, xNew, yNew);
        } catch (const AdmissibilityError& e) {
            path.status = PathStatus::admissibility;
            path.message = e.what();
            return path;
        }

        double drift = 0.0;
        try {
            const PointGeometry geomNew =
                point_geometry(surface, xNew.x1, xNew.x2, gbar);
            const double F = slope_metric(geomNew, yNew, params).F;
            drift = std::fabs(F - 1.0);
            if (drift <= options.driftTol && options.renormalize) {
                yNew = (1.0 / F) * yNew;
            }
        } catch (const ConvexityViolation& e) {
            path.status = PathStatus::admissibility;
            path.message = e.what();
            return path;
        }

        if (drift > options.driftTol) {
            if (options.adaptive && step > hMin) {
                h = step / 2.0;  // retry the same stretch with a finer step
                continue;
            }
            path.status = PathStatus::drift;
            std::ostringstream msg;
            msg << "metric drift |F - 1| = " << drift << " exceeds tolerance "
                << options.driftTol << " at t = " << t + step
                << "; reduce dt";
            path.message = msg.str();
            return path;
        }

        x = xNew;
        y = yNew;
        t = (T - t <= h) ? T : t + step;
        path.states.push_back(GeodesicState{x, y, t});
        if (options.adaptive && h < dt) h = std::min(2.0 * h, dt);
    }
    return path;
}

double path_time(const Surface& surface, const std::vector<Vec2>& points,
                 const TractionParams& params, double gbar) {
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        const Vec2 delta = points[i + 1] - points[i];
        if (delta.x1 == 0.0 && delta.x2 == 0.0) continue;
        const Vec2 mid = 0.5 * (points[i] + points[i + 1]);
        const PointGeometry geom =
            point_geometry(surface, mid.x1, mid.x2, gbar);
        require_admissible(geom, params);
        total += slope_metric(geom, delta, params).F;
    }
    return total;
}

}  // namespace slope_nav
