// Slope-metric evaluation: quartic root, closed-form special cases,
// navigation condition and indicatrix generation (see metric.hpp).

#include "slope_nav/metric.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "slope_nav/errors.hpp"
#include "slope_nav/polynomial.hpp"

namespace slope_nav {

const char* to_string(MetricBranch b) {
    switch (b) {
        case MetricBranch::quartic: return "quartic";
        case MetricBranch::quadraticRanders: return "quadraticRanders";
        case MetricBranch::quadraticMatsumoto: return "quadraticMatsumoto";
        case MetricBranch::riemannian: return "riemannian";
    }
    return "?";
}

namespace {

void require_admissible(const PointGeometry& geom,
                        const TractionParams& params) {
    if (!(geom.windNorm < params.windBound)) {
        std::ostringstream msg;
        msg << "wind norm " << geom.windNorm << " at (" << geom.x1 << ", "
            << geom.x2 << ") reaches the strong-convexity bound "
            << params.windBound << " for (eta, etaTilde) = (" << params.eta
            << ", " << params.etaTilde << ")";
        throw ConvexityViolation(msg.str());
    }
}

double randers_value(double alpha, double beta, double gbar, double W,
                     double eta) {
    const double u = 1.0 - eta;
    const double lambda = 1.0 - u * u * W * W;
    const double ugb = u * gbar * beta;
    return (std::sqrt(ugb * ugb + lambda * alpha * alpha) + ugb) / lambda;
}

double matsumoto_value(double alpha, double beta, double gbar,
                       double etaTilde) {
    return alpha * alpha / (alpha - (1.0 - etaTilde) * gbar * beta);
}

// |lhs - rhs| of the irrational defining equation at the candidate F. The
// radicand is ||y - (1-eta) F G^T||_h^2, nonnegative in exact arithmetic.
double irrational_residual(double alpha, double beta, double gbar, double W,
                           double eta, double etaTilde, double F) {
    const double u = 1.0 - eta;
    const double v = 1.0 - etaTilde;
    const double a2 = alpha * alpha;
    const double rad =
        std::max(0.0, a2 + 2.0 * u * gbar * beta * F + u * u * W * W * F * F);
    const double lhs = F * std::sqrt(rad);
    const double rhs = a2 + (u + v) * gbar * beta * F + u * v * W * W * F * F;
    return std::fabs(lhs - rhs);
}

}  // namespace

MetricEval slope_metric(const PointGeometry& geom, Vec2 y,
                        const TractionParams& params) {
    if (y.x1 == 0.0 && y.x2 == 0.0) {
        throw std::invalid_argument("slope_metric requires y != 0");
    }
    require_admissible(geom, params);

    const AlphaBeta ab = alpha_beta(geom, y);
    MetricEval m;
    m.alpha = ab.alpha;
    m.beta = ab.beta;
    m.s = ab.beta / ab.alpha;

    const double eta = params.eta, etaTilde = params.etaTilde;
    const double gbar = geom.gbar, W = geom.windNorm;

    if (W == 0.0 || (eta == 1.0 && etaTilde == 1.0)) {
        m.branch = MetricBranch::riemannian;
        m.F = m.alpha;
    } else if (eta == etaTilde) {
        m.branch = MetricBranch::quadraticRanders;
        m.F = randers_value(m.alpha, m.beta, gbar, W, eta);
    } else if (eta == 1.0) {
        m.branch = MetricBranch::quadraticMatsumoto;
        m.F = matsumoto_value(m.alpha, m.beta, gbar, etaTilde);
    } else {
        m.branch = MetricBranch::quartic;
        const double u = 1.0 - eta;
        const double v = 1.0 - etaTilde;
        const double uv = u + v;  // 2 - eta - etaTilde
        const double W2 = W * W;
        const double a2 = m.alpha * m.alpha;
        const double gb = gbar * m.beta;
        const double c4 = u * u * W2 * (1.0 - v * v * W2);
        const double c3 = 2.0 * u * (1.0 - uv * v * W2) * gb;
        const double c2 = (1.0 - 2.0 * u * v * W2) * a2 - uv * uv * gb * gb;
        const double c1 = -2.0 * uv * a2 * gb;
        const double c0 = -a2 * a2;

        // Squaring the defining relation enlarges the root set.  Writing the
        // quartic as (lhs - rhs)(lhs + rhs) with lhs = F sqrt(rad) >= 0:
        //   * rhs < 0 on part of the downhill cone adds a pair of sign-flip
        //     roots inside that window, and
        //   * exactly downhill, rad and rhs share the root F = alpha/(u W)
        //     (zero self-speed), a phantom double root that nearby headings
        //     split into a close pair.
        // Both kinds sit strictly above the genuine root: lhs - rhs starts
        // at -alpha^2 and is positive wherever rhs <= 0, so its first
        // crossing precedes every window/phantom root (the phantom stays a
        // factor (1 + v W)/(u W) > 1 above it because (etaTilde - eta) W <
        // 1/2 for all admissible parameters).  The metric value is therefore
        // the smallest positive root.
        double genuine = 0.0;
        bool found = false;
        for (double root : real_roots_quartic(c4, c3, c2, c1, c0)) {
            if (root > 0.0) {
                genuine = root;
                found = true;
                break;
            }
        }
        if (!found) {
            std::ostringstream msg;
            msg << "defining quartic has no positive root at (" << geom.x1
                << ", " << geom.x2 << "), y = (" << y.x1 << ", " << y.x2
                << "), (eta, etaTilde) = (" << eta << ", " << etaTilde
                << "), wind " << W;
            throw RootCountError(msg.str());
        }
        m.F = genuine;
    }

    m.residual = irrational_residual(m.alpha, m.beta, gbar, W, eta, etaTilde,
                                     m.F);
    return m;
}

double randers_oracle(const PointGeometry& geom, Vec2 y, double eta) {
    const double W = geom.windNorm;
    if (!((1.0 - eta) * W < 1.0)) {
        std::ostringstream msg;
        msg << "Randers form requires (1-eta)*windNorm < 1; got "
            << (1.0 - eta) * W;
        throw ConvexityViolation(msg.str());
    }
    const AlphaBeta ab = alpha_beta(geom, y);
    return randers_value(ab.alpha, ab.beta, geom.gbar, W, eta);
}

double matsumoto_oracle(const PointGeometry& geom, Vec2 y, double etaTilde) {
    const double W = geom.windNorm;
    if (!((1.0 - etaTilde) * W < 0.5)) {
        std::ostringstream msg;
        msg << "Matsumoto form requires (1-etaTilde)*windNorm < 1/2; got "
            << (1.0 - etaTilde) * W;
        throw ConvexityViolation(msg.str());
    }
    const AlphaBeta ab = alpha_beta(geom, y);
    return matsumoto_value(ab.alpha, ab.beta, geom.gbar, etaTilde);
}

bool navigation_condition(const PointGeometry& geom,
                          const TractionParams& params) {
    const double W = geom.windNorm;
    const double num = 1.0 - (1.0 - params.etaTilde) * W;
    const double den = 1.0 - (params.eta - params.etaTilde) * W;
    if (den == 0.0) return false;
    return num / den > 0.0;
}

std::vector<IndicatrixPoint> indicatrix(const PointGeometry& geom,
                                        const TractionParams& params,
                                        const std::vector<double>& thetas) {
    require_admissible(geom, params);

    std::vector<IndicatrixPoint> points;
    points.reserve(thetas.size());

    const double W = geom.windNorm;
    const double d = params.eta - params.etaTilde;
    const double u = 1.0 - params.eta;
    const double f1 = geom.jet.d1, f2 = geom.jet.d2;
    const double q = geom.q;
    const bool singular = (q == 0.0);
    // Frame vectors in tangent coordinates (see wind_decomposition).
    const double sq = singular ? 1.0 : std::sqrt(q);
    const double sq1 = singular ? 1.0 : std::sqrt(q * (q + 1.0));

    for (double theta : thetas) {
        IndicatrixPoint p;
        p.theta = theta;
        const double ct = std::cos(theta), st = std::sin(theta);
        if (singular) {
            // Riemannian unit circle: h is Euclidean here.
            p.X = ct;
            p.Y = st;
            p.y = Vec2{ct, st};
        } else {
            const double k = 1.0 + d * W * ct;
            p.X = k * ct + u * W;
            p.Y = k * st;
            // y = X e1 + Y e2 with e1 = -(f1,f2)/sqrt(q(q+1)),
            // e2 = (f2,-f1)/sqrt(q).
            p.y = Vec2{-p.X * f1 / sq1 + p.Y * f2 / sq,
                       -p.X * f2 / sq1 - p.Y * f1 / sq};
        }
        points.push_back(p);
    }
    return points;
}

}  // namespace slope_nav
