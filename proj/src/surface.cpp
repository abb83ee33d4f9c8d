// Surface construction and pointwise geometry (metric, wind, curvature).

#include "slope_nav/surface.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "slope_nav/expr.hpp"

namespace slope_nav {

namespace {

// z = a * x1: the inclined plane. Hand-coded jet so the core experiments do
// not depend on the expression parser.
class InclineSurface final : public Surface {
  public:
    InclineSurface(double a, std::string spec) : a_(a), spec_(std::move(spec)) {}

    Jet2 height_jet(double x1, double /*x2*/) const override {
        Jet2 j;
        j.v = a_ * x1;
        j.d1 = a_;
        return j;
    }

    const std::string& spec() const override { return spec_; }

  private:
    double a_;
    std::string spec_;
};

// The triple Gaussian hill of the 2D experiments:
//   f = 1/2 e^{-rho1} + 3/4 e^{-rho2} + e^{-rho3}
//   rho1 = (x1-1)^2 + (x2+1)^2
//   rho2 = (x1+1)^2 + (x2+1)^2
//   rho3 = x1^2 + (x2-1)^2
class Gauss3Surface final : public Surface {
  public:
    Gauss3Surface() : spec_("gauss3") {}

    Jet2 height_jet(double x1, double x2) const override {
        Jet2 j;
        accumulate(j, 0.50, x1 - 1.0, x2 + 1.0);
        accumulate(j, 0.75, x1 + 1.0, x2 + 1.0);
        accumulate(j, 1.00, x1, x2 - 1.0);
        return j;
    }

    const std::string& spec() const override { return spec_; }

  private:
    // Adds a * e^{-(u^2 + v^2)} with u = x1 - p, v = x2 - r; derivatives of
    // the exponent are elementary, so the jet is exact.
    static void accumulate(Jet2& j, double a, double u, double v) {
        const double e = a * std::exp(-(u * u + v * v));
        j.v += e;
        j.d1 += -2.0 * u * e;
        j.d2 += -2.0 * v * e;
        j.d11 += (4.0 * u * u - 2.0) * e;
        j.d12 += 4.0 * u * v * e;
        j.d22 += (4.0 * v * v - 2.0) * e;
    }

    std::string spec_;
};

class ExprSurface final : public Surface {
  public:
    ExprSurface(expr::Expression e, std::string spec)
        : expr_(std::move(e)), spec_(std::move(spec)) {}

    Jet2 height_jet(double x1, double x2) const override {
        return expr_.eval_jet2(x1, x2);
    }

    const std::string& spec() const override { return spec_; }

  private:
    expr::Expression expr_;
    std::string spec_;
};

}  // namespace

std::shared_ptr<const Surface> make_surface(std::string_view spec) {
    if (spec == "gauss3") {
        return std::make_shared<Gauss3Surface>();
    }
    constexpr std::string_view incline_prefix = "incline:";
    if (spec.substr(0, incline_prefix.size()) == incline_prefix) {
        const std::string_view num = spec.substr(incline_prefix.size());
        double a = 0.0;
        const char* first = num.data();
        const char* last = num.data() + num.size();
        auto [ptr, ec] = std::from_chars(first, last, a);
        if (ec != std::errc{} || ptr != last || num.empty()) {
            throw std::invalid_argument(
                "invalid incline slope in surface spec '" + std::string(spec) +
                "' (expected incline:<number>)");
        }
        return std::make_shared<InclineSurface>(a, std::string(spec));
    }
    constexpr std::string_view expr_prefix = "expr:";
    if (spec.substr(0, expr_prefix.size()) == expr_prefix) {
        const std::string_view formula = spec.substr(expr_prefix.size());
        return std::make_shared<ExprSurface>(
            expr::Expression::parse(formula), std::string(spec));
    }
    throw std::invalid_argument(
        "unknown surface spec '" + std::string(spec) +
        "' (expected incline:<a>, gauss3, or expr:<formula>)");
}

PointGeometry point_geometry(const Surface& surface, double x1, double x2,
                             double gbar) {
    if (!(gbar >= 0.0)) {
        throw std::invalid_argument("gbar must be nonnegative");
    }
    PointGeometry g;
    g.x1 = x1;
    g.x2 = x2;
    g.jet = surface.height_jet(x1, x2);
    g.gbar = gbar;

    const double f1 = g.jet.d1, f2 = g.jet.d2;
    g.q = f1 * f1 + f2 * f2;
    g.h11 = 1.0 + f1 * f1;
    g.h12 = f1 * f2;
    g.h22 = 1.0 + f2 * f2;

    // Contravariant wind components w^i = -gbar f_i/(q+1); the covariant
    // ones are w_i = -gbar f_i.
    g.wind = Vec2{-gbar * f1 / (g.q + 1.0), -gbar * f2 / (g.q + 1.0)};
    g.windNorm = gbar * std::sqrt(g.q / (g.q + 1.0));
    return g;
}

CurvatureData curvature_data(const Surface& surface, double x1, double x2,
                             double gbar) {
    if (!(gbar >= 0.0)) {
        throw std::invalid_argument("gbar must be nonnegative");
    }
    const Jet2 j = surface.height_jet(x1, x2);
    const double f1 = j.d1, f2 = j.d2;
    const double f11 = j.d11, f12 = j.d12, f22 = j.d22;
    const double q1 = 1.0 + f1 * f1 + f2 * f2;  // q + 1 = det h
    const double q1_2 = q1 * q1;
    const double q1_3 = q1_2 * q1;

    // Gradient of f contracted with the Hessian: the covariant derivative of
    // the (normalized) wind reduces to these f-combinations because the
    // Christoffels of h are Gamma^k_ij = f_k f_ij/(q+1).
    const double g1 = f1 * f11 + f2 * f12;  // (grad f . Hess)_1
    const double g2 = f1 * f12 + f2 * f22;  // (grad f . Hess)_2

    CurvatureData c;
    c.r00_11 = f11 / q1;
    c.r00_12 = f12 / q1;
    c.r00_22 = f22 / q1;
    c.r0_1 = g1 / q1_2;
    c.r0_2 = g2 / q1_2;
    c.r = (f1 * f1 * f11 + 2.0 * f1 * f2 * f12 + f2 * f2 * f22) / q1_3;
    // Raised index through h^{ij} = [[1+f2^2, -f1 f2], [-f1 f2, 1+f1^2]]/(q+1).
    c.rup = Vec2{((1.0 + f2 * f2) * g1 - f1 * f2 * g2) / q1_3,
                 (-f1 * f2 * g1 + (1.0 + f1 * f1) * g2) / q1_3};
    return c;
}

AlphaBeta alpha_beta(const PointGeometry& geom, Vec2 y) {
    AlphaBeta ab;
    ab.alpha = std::sqrt(h_dot(geom, y, y));
    ab.beta = geom.jet.d1 * y.x1 + geom.jet.d2 * y.x2;
    return ab;
}

double h_dot(const PointGeometry& geom, Vec2 a, Vec2 b) {
    return geom.h11 * a.x1 * b.x1 + geom.h12 * (a.x1 * b.x2 + a.x2 * b.x1) +
           geom.h22 * a.x2 * b.x2;
}

}  // namespace slope_nav
