// Implementation of the independent test oracles (see oracles.hpp).

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace slope_nav::oracles {

std::vector<double> scan_positive_roots(double c4, double c3, double c2,
                                        double c1, double c0) {
    if (c4 == 0.0) {
        throw std::invalid_argument("scan_positive_roots requires c4 != 0");
    }
    const double bound =
        1.0 + std::max(std::max(std::fabs(c3), std::fabs(c2)),
                       std::max(std::fabs(c1), std::fabs(c0))) /
                  std::fabs(c4);
    auto p = [&](double x) {
        return (((c4 * x + c3) * x + c2) * x + c1) * x + c0;
    };

    std::vector<double> roots;
    const int n = 400000;
    double prev = p(0.0);
    for (int i = 1; i <= n; ++i) {
        const double x = bound * static_cast<double>(i) / n;
        const double cur = p(x);
        if ((prev < 0.0 && cur >= 0.0) || (prev > 0.0 && cur <= 0.0)) {
            double lo = bound * static_cast<double>(i - 1) / n, hi = x;
            double flo = prev;
            for (int it = 0; it < 80; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double fmid = p(mid);
                if ((flo < 0.0) == (fmid < 0.0)) {
                    lo = mid;
                    flo = fmid;
                } else {
                    hi = mid;
                }
            }
            roots.push_back(0.5 * (lo + hi));
        }
        prev = cur;
    }
    return roots;
}

long double phi_root_ld(long double b2, long double s, double eta,
                        double etaTilde, double gbar) {
    const long double u = 1.0L - static_cast<long double>(eta);
    const long double v = 1.0L - static_cast<long double>(etaTilde);
    const long double sum = u + v;
    const long double g = gbar;
    const long double W2 = g * g * b2;
    const long double gs = g * s;
    const long double c4 = u * u * W2 * (1.0L - v * v * W2);
    const long double c3 = 2.0L * u * (1.0L - sum * v * W2) * gs;
    const long double c2 = (1.0L - 2.0L * u * v * W2) - sum * sum * gs * gs;
    const long double c1 = -2.0L * sum * gs;

    auto value = [&](long double p) {
        return (((c4 * p + c3) * p + c2) * p + c1) * p - 1.0L;
    };
    auto slope = [&](long double p) {
        return ((4.0L * c4 * p + 3.0L * c3) * p + 2.0L * c2) * p + c1;
    };

    // Squaring the defining relation can add a pair of spurious positive
    // roots above the genuine one (they satisfy the equation with the
    // right-hand side negated), so march outward in small multiplicative
    // steps: the bracket then encloses the FIRST sign change, which is the
    // genuine root.
    long double lo = 0.0L, hi = 1.0L / 64.0L;
    while (value(hi) <= 0.0L) {
        lo = hi;
        hi *= 1.03125L;
        if (hi > 1e12L) {
            throw std::runtime_error("phi_root_ld: no positive root (state " +
                                     std::to_string(static_cast<double>(b2)) +
                                     ", " +
                                     std::to_string(static_cast<double>(s)) +
                                     " is inadmissible)");
        }
    }
    for (int i = 0; i < 120; ++i) {
        const long double mid = 0.5L * (lo + hi);
        if (value(mid) <= 0.0L) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    long double p = 0.5L * (lo + hi);
    for (int i = 0; i < 4; ++i) p -= value(p) / slope(p);
    const long double rhsCheck = 1.0L + sum * gs * p + u * v * W2 * p * p;
    if (rhsCheck < 0.0L) {
        throw std::runtime_error(
            "phi_root_ld: converged to a spurious squared-equation branch");
    }
    return p;
}

PhiJet phi_jet(double b2, double s, double eta, double etaTilde, double gbar,
               double h) {
    const long double hb = h, hs = h;
    const long double b = b2, t = s;
    auto phi = [&](long double bb, long double ss) {
        return phi_root_ld(bb, ss, eta, etaTilde, gbar);
    };

    // Fourth-order central stencils. Near the admissibility bound the
    // higher b2/s-derivatives of phi grow like powers of
    // (1 - (1 - etaTilde) W)^{-1}, and the O(h^2) three-point truncation
    // can reach ~1e-6 relative; the five-point (and Richardson-combined
    // cross) forms keep it below ~1e-10 at the same step.
    PhiJet j;
    const long double p0 = phi(b, t);
    const long double psp = phi(b, t + hs), psm = phi(b, t - hs);
    const long double psp2 = phi(b, t + 2.0L * hs), psm2 = phi(b, t - 2.0L * hs);
    const long double pbp = phi(b + hb, t), pbm = phi(b - hb, t);
    const long double pbp2 = phi(b + 2.0L * hb, t), pbm2 = phi(b - 2.0L * hb, t);
    j.phi = static_cast<double>(p0);
    j.phi2 = static_cast<double>(
        (-psp2 + 8.0L * psp - 8.0L * psm + psm2) / (12.0L * hs));
    j.phi22 = static_cast<double>(
        (-psp2 + 16.0L * psp - 30.0L * p0 + 16.0L * psm - psm2) /
        (12.0L * hs * hs));
    j.phi1 = static_cast<double>(
        (-pbp2 + 8.0L * pbp - 8.0L * pbm + pbm2) / (12.0L * hb));
    auto cross = [&](long double db, long double ds) {
        return (phi(b + db, t + ds) - phi(b + db, t - ds) -
                phi(b - db, t + ds) + phi(b - db, t - ds)) /
               (4.0L * db * ds);
    };
    j.phi12 = static_cast<double>(
        (4.0L * cross(hb, hs) - cross(2.0L * hb, 2.0L * hs)) / 3.0L);
    return j;
}

namespace {

Vec2 fd_spray_once(const MetricSq& F2, Vec2 x, Vec2 y, double h) {
    auto at = [&](double dx1, double dx2, double dy1, double dy2) {
        return F2(Vec2{x.x1 + dx1, x.x2 + dx2}, Vec2{y.x1 + dy1, y.x2 + dy2});
    };
    const double f0 = at(0, 0, 0, 0);
    const double h2 = h * h;

    // Fundamental tensor g_il = (1/2) d^2 F2 / dy_i dy_l.
    const double g11 = 0.5 * (at(0, 0, h, 0) - 2.0 * f0 + at(0, 0, -h, 0)) / h2;
    const double g22 = 0.5 * (at(0, 0, 0, h) - 2.0 * f0 + at(0, 0, 0, -h)) / h2;
    const double g12 = 0.5 *
                       (at(0, 0, h, h) - at(0, 0, h, -h) - at(0, 0, -h, h) +
                        at(0, 0, -h, -h)) /
                       (4.0 * h2);

    const double fx1 = (at(h, 0, 0, 0) - at(-h, 0, 0, 0)) / (2.0 * h);
    const double fx2 = (at(0, h, 0, 0) - at(0, -h, 0, 0)) / (2.0 * h);

    // Mixed derivatives m[k][l] = d^2 F2 / dx_k dy_l.
    double m[2][2];
    for (int k = 0; k < 2; ++k) {
        const double ex1 = k == 0 ? h : 0.0, ex2 = k == 0 ? 0.0 : h;
        for (int l = 0; l < 2; ++l) {
            const double ey1 = l == 0 ? h : 0.0, ey2 = l == 0 ? 0.0 : h;
            m[k][l] = (at(ex1, ex2, ey1, ey2) - at(ex1, ex2, -ey1, -ey2) -
                       at(-ex1, -ex2, ey1, ey2) + at(-ex1, -ex2, -ey1, -ey2)) /
                      (4.0 * h2);
        }
    }

    const double rhs1 = m[0][0] * y.x1 + m[1][0] * y.x2 - fx1;
    const double rhs2 = m[0][1] * y.x1 + m[1][1] * y.x2 - fx2;
    const double det = g11 * g22 - g12 * g12;
    return Vec2{0.25 * (g22 * rhs1 - g12 * rhs2) / det,
                0.25 * (-g12 * rhs1 + g11 * rhs2) / det};
}

}  // namespace

Vec2 fd_spray(const MetricSq& F2, Vec2 x, Vec2 y, double h) {
    const Vec2 coarse = fd_spray_once(F2, x, y, h);
    const Vec2 fine = fd_spray_once(F2, x, y, 0.5 * h);
    return (1.0 / 3.0) * (4.0 * fine - coarse);  // cancels the h^2 error term
}

Christoffels fd_christoffels(const Surface& surface, Vec2 x, double h) {
    // Metric components h_11, h_12, h_22 at a point.
    auto metric = [&](double x1, double x2) {
        const Jet2 jet = surface.height_jet(x1, x2);
        struct {
            double m11, m12, m22;
        } m{1.0 + jet.d1 * jet.d1, jet.d1 * jet.d2, 1.0 + jet.d2 * jet.d2};
        return m;
    };

    const auto at = metric(x.x1, x.x2);
    // dh[k][a][b]: derivative of h_ab along x_k.
    double dh[2][2][2];
    for (int k = 0; k < 2; ++k) {
        const double e1 = k == 0 ? h : 0.0, e2 = k == 0 ? 0.0 : h;
        const auto plus = metric(x.x1 + e1, x.x2 + e2);
        const auto minus = metric(x.x1 - e1, x.x2 - e2);
        dh[k][0][0] = (plus.m11 - minus.m11) / (2.0 * h);
        dh[k][0][1] = dh[k][1][0] = (plus.m12 - minus.m12) / (2.0 * h);
        dh[k][1][1] = (plus.m22 - minus.m22) / (2.0 * h);
    }

    const double det = at.m11 * at.m22 - at.m12 * at.m12;
    const double inv[2][2] = {{at.m22 / det, -at.m12 / det},
                              {-at.m12 / det, at.m11 / det}};

    Christoffels c;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
                double low = 0.0;  // Gamma_{m,jk} summed against h^{im}
                for (int m = 0; m < 2; ++m) {
                    const double gamma_mjk = 0.5 * (dh[j][m][k] + dh[k][m][j] -
                                                    dh[m][j][k]);
                    low += inv[i][m] * gamma_mjk;
                }
                c.G[i][j][k] = low;
            }
        }
    }
    return c;
}

Vec2 riemann_geodesic_endpoint(const Surface& surface, Vec2 x0, Vec2 y0,
                               double T, double dt) {
    auto accel = [&](Vec2 x, Vec2 y) {
        const Christoffels c = fd_christoffels(surface, x);
        Vec2 a;
        const double yy[2] = {y.x1, y.x2};
        double out[2] = {0.0, 0.0};
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                for (int k = 0; k < 2; ++k) {
                    out[i] -= c.G[i][j][k] * yy[j] * yy[k];
                }
            }
        }
        a.x1 = out[0];
        a.x2 = out[1];
        return a;
    };

    Vec2 x = x0, y = y0;
    double t = 0.0;
    while (t < T) {
        const double h = std::min(dt, T - t);
        const Vec2 k1x = y, k1y = accel(x, y);
        const Vec2 k2x = y + 0.5 * h * k1y,
                   k2y = accel(x + 0.5 * h * k1x, y + 0.5 * h * k1y);
        const Vec2 k3x = y + 0.5 * h * k2y,
                   k3y = accel(x + 0.5 * h * k2x, y + 0.5 * h * k2y);
        const Vec2 k4x = y + h * k3y, k4y = accel(x + h * k3x, y + h * k3y);
        x += (h / 6.0) * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
        y += (h / 6.0) * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
        t += h;
    }
    return x;
}

CurvatureData fd_curvature(const Surface& surface, double x1, double x2,
                           double gbar) {
    const Christoffels c = fd_christoffels(surface, Vec2{x1, x2});
    const double g = gbar;
    const double h = 1e-5;

    // Covariant components w_i = -gbar f_i and their partials by central
    // differences of the height gradient.
    auto w_at = [&](double a, double b, int i) {
        const Jet2 jet = surface.height_jet(a, b);
        return -g * (i == 0 ? jet.d1 : jet.d2);
    };
    const Jet2 jet = surface.height_jet(x1, x2);
    const double w[2] = {-g * jet.d1, -g * jet.d2};

    double cov[2][2];  // w_{i|j}
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const double e1 = j == 0 ? h : 0.0, e2 = j == 0 ? 0.0 : h;
            const double dwi = (w_at(x1 + e1, x2 + e2, i) -
                                w_at(x1 - e1, x2 - e2, i)) /
                               (2.0 * h);
            double gamma = 0.0;
            for (int k = 0; k < 2; ++k) gamma += c.G[k][i][j] * w[k];
            cov[i][j] = dwi - gamma;
        }
    }

    // Contravariant wind and inverse metric for the raised quantities.
    const double q = jet.d1 * jet.d1 + jet.d2 * jet.d2;
    const double det = 1.0 + q;
    const double inv[2][2] = {
        {(1.0 + jet.d2 * jet.d2) / det, -jet.d1 * jet.d2 / det},
        {-jet.d1 * jet.d2 / det, (1.0 + jet.d1 * jet.d1) / det}};
    double wup[2] = {0.0, 0.0};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) wup[i] += inv[i][j] * w[j];
    }

    CurvatureData d;
    d.r00_11 = -cov[0][0] / g;
    d.r00_12 = -0.5 * (cov[0][1] + cov[1][0]) / g;
    d.r00_22 = -cov[1][1] / g;
    d.r0_1 = (cov[0][0] * wup[0] + cov[0][1] * wup[1]) / (g * g);
    d.r0_2 = (cov[1][0] * wup[0] + cov[1][1] * wup[1]) / (g * g);
    d.r = -(cov[0][0] * wup[0] * wup[0] + cov[0][1] * wup[0] * wup[1] +
            cov[1][0] * wup[1] * wup[0] + cov[1][1] * wup[1] * wup[1]) /
          (g * g * g);
    const double rlow[2] = {d.r0_1, d.r0_2};
    d.rup.x1 = inv[0][0] * rlow[0] + inv[0][1] * rlow[1];
    d.rup.x2 = inv[1][0] * rlow[0] + inv[1][1] * rlow[1];
    return d;
}

AbTheoryTerms ab_theory_terms(double b2, double s, double eta,
                              double etaTilde, double gbar) {
    const PhiJet j = phi_jet(b2, s, eta, etaTilde, gbar);
    const double phi = j.phi;
    const double delta = phi - s * j.phi2 + (b2 - s * s) * j.phi22;
    AbTheoryTerms t;
    t.Theta = ((phi - s * j.phi2) * j.phi2 - s * phi * j.phi22) /
              (2.0 * phi * delta);
    t.Psi = j.phi22 / (2.0 * delta);
    t.Pi = ((phi - s * j.phi2) * j.phi12 - s * j.phi1 * j.phi22) /
           ((phi - s * j.phi2) * delta);
    t.Omega = 2.0 * j.phi1 / phi -
              (s * phi + (b2 - s * s) * j.phi2) * t.Pi / phi;
    t.R = j.phi1 / (phi - s * j.phi2);
    return t;
}

Vec2 ab_theory_spray(const Surface& surface, Vec2 x, Vec2 y,
                     const TractionParams& params, double gbar) {
    const PointGeometry geom = point_geometry(surface, x.x1, x.x2, gbar);
    const AlphaBeta ab = alpha_beta(geom, y);
    const double b2 = geom.q / (geom.q + 1.0);
    const double s = ab.beta / ab.alpha;
    const AbTheoryTerms t =
        ab_theory_terms(b2, s, params.eta, params.etaTilde, gbar);

    const CurvatureData curv = fd_curvature(surface, x.x1, x.x2, gbar);
    const double r00 = curv.r00_11 * y.x1 * y.x1 +
                       2.0 * curv.r00_12 * y.x1 * y.x2 +
                       curv.r00_22 * y.x2 * y.x2;
    const double r0 = curv.r0_1 * y.x1 + curv.r0_2 * y.x2;

    const Christoffels c = fd_christoffels(surface, x);
    const double yy[2] = {y.x1, y.x2};
    double galpha[2] = {0.0, 0.0};
    for (int i = 0; i < 2; ++i) {
        for (int jj = 0; jj < 2; ++jj) {
            for (int k = 0; k < 2; ++k) {
                galpha[i] += 0.5 * c.G[i][jj][k] * yy[jj] * yy[k];
            }
        }
    }

    const double alpha = ab.alpha;
    const double a2 = alpha * alpha;
    const double bracket = r00 + 2.0 * a2 * t.R * curv.r;
    const double coefY = (t.Theta * bracket + alpha * t.Omega * r0) / alpha;
    const double coefB = t.Psi * bracket + alpha * t.Pi * r0;
    const double bup1 = geom.jet.d1 / (geom.q + 1.0);
    const double bup2 = geom.jet.d2 / (geom.q + 1.0);
    return Vec2{galpha[0] + coefY * y.x1 + coefB * bup1 -
                    a2 * t.R * curv.rup.x1,
                galpha[1] + coefY * y.x2 + coefB * bup2 -
                    a2 * t.R * curv.rup.x2};
}

NormalizedState normalized_state(double b2, double s, double gbar) {
    if (!(b2 > 0.0 && b2 < 1.0) || !(s * s <= b2)) {
        throw std::invalid_argument(
            "normalized_state requires 0 < b2 < 1 and |s| <= sqrt(b2)");
    }
    const double q = b2 / (1.0 - b2);
    char spec[64];
    std::snprintf(spec, sizeof spec, "incline:%.17g", std::sqrt(q));

    NormalizedState st;
    st.surface = make_surface(spec);
    st.geom = point_geometry(*st.surface, 0.0, 0.0, gbar);
    st.y = Vec2{s / std::sqrt(q), std::sqrt(std::max(0.0, 1.0 - s * s / b2))};
    return st;
}

}  // namespace slope_nav::oracles
