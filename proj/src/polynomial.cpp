// Closed-form real-root solvers with extended-precision internals and
// Newton polishing (see polynomial.hpp).

#include "slope_nav/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace slope_nav {

namespace {

using ld = long double;

// Largest magnitude among coefficients: degeneracy decisions are relative to
// this scale so the solvers are invariant under uniform rescaling.
double coeff_scale(std::initializer_list<double> cs) {
    double m = 0.0;
    for (double c : cs) m = std::max(m, std::fabs(c));
    return m;
}

constexpr double kDegenerate = 1e-14;

// Three Newton iterations on the polynomial with coefficients
// c[0] + c[1] x + ... + c[degree] x^degree; restores double accuracy lost to
// cancellation in the closed-form path.
double polish(const double* c, int degree, double x0) {
    double x = x0;
    for (int it = 0; it < 3; ++it) {
        double p = c[degree], dp = 0.0;
        for (int k = degree - 1; k >= 0; --k) {
            dp = dp * x + p;
            p = p * x + c[k];
        }
        if (dp == 0.0 || !std::isfinite(p / dp)) break;
        x -= p / dp;
    }
    return x;
}

void sort_and_merge(std::vector<double>& roots) {
    std::sort(roots.begin(), roots.end());
    std::vector<double> merged;
    for (double r : roots) {
        if (!merged.empty() &&
            std::fabs(r - merged.back()) <= 1e-8 * std::max(1.0, std::fabs(r))) {
            // Keep the midpoint of a merged cluster (true multiple roots land
            // within ~sqrt(eps) of each other after the quadratic split).
            merged.back() = 0.5 * (merged.back() + r);
        } else {
            merged.push_back(r);
        }
    }
    roots = std::move(merged);
}

// Monic depressed cubic t^3 + p t + q = 0, all real roots.
std::vector<ld> depressed_cubic_roots(ld p, ld q) {
    std::vector<ld> roots;
    const ld half = q / 2.0L;
    const ld third = p / 3.0L;
    const ld disc = half * half + third * third * third;
    if (disc > 0.0L) {
        // One real root (Cardano).
        const ld sq = std::sqrt(disc);
        const ld u = std::cbrt(-half + sq);
        const ld v = std::cbrt(-half - sq);
        roots.push_back(u + v);
    } else if (disc == 0.0L) {
        const ld u = std::cbrt(-half);
        roots.push_back(2.0L * u);
        if (u != 0.0L) roots.push_back(-u);
    } else {
        // Three real roots (trigonometric form); p < 0 is implied here.
        const ld rho = std::sqrt(-third * third * third);
        const ld theta = std::acos(std::clamp(-half / rho, -1.0L, 1.0L)) / 3.0L;
        const ld mag = 2.0L * std::sqrt(-third);
        constexpr ld two_pi_3 = 2.0943951023931954923L;
        roots.push_back(mag * std::cos(theta));
        roots.push_back(mag * std::cos(theta - two_pi_3));
        roots.push_back(mag * std::cos(theta + two_pi_3));
    }
    return roots;
}

// Internal quadratic in long double; appends real roots.
void quadratic_ld(ld a, ld b, ld c, std::vector<ld>& out) {
    if (a == 0.0L) {
        if (b != 0.0L) out.push_back(-c / b);
        return;
    }
    const ld disc = b * b - 4.0L * a * c;
    if (disc < 0.0L) return;
    const ld sq = std::sqrt(disc);
    // Citardauq pairing avoids cancellation in the small-magnitude root.
    const ld qq = -0.5L * (b + (b >= 0.0L ? sq : -sq));
    if (qq != 0.0L) {
        out.push_back(qq / a);
        out.push_back(c / qq);
    } else {
        out.push_back(0.0L);
        out.push_back(-b / a);
    }
}

}  // namespace

std::vector<double> real_roots_quadratic(double a, double b, double c) {
    const double scale = coeff_scale({a, b, c});
    if (scale == 0.0) return {};
    if (std::fabs(a) < kDegenerate * scale) {
        if (std::fabs(b) < kDegenerate * scale) return {};
        return {-c / b};
    }
    std::vector<ld> rl;
    quadratic_ld(a, b, c, rl);
    const double cs[3] = {c, b, a};
    std::vector<double> roots;
    for (ld r : rl) roots.push_back(polish(cs, 2, static_cast<double>(r)));
    sort_and_merge(roots);
    return roots;
}

std::vector<double> real_roots_cubic(double a, double b, double c, double d) {
    const double scale = coeff_scale({a, b, c, d});
    if (scale == 0.0) return {};
    if (std::fabs(a) < kDegenerate * scale) {
        return real_roots_quadratic(b, c, d);
    }
    // Depress: x = t - b/(3a).
    const ld A = static_cast<ld>(b) / a;
    const ld B = static_cast<ld>(c) / a;
    const ld C = static_cast<ld>(d) / a;
    const ld shift = A / 3.0L;
    const ld p = B - A * A / 3.0L;
    const ld q = C + A * (2.0L * A * A - 9.0L * B) / 27.0L;
    const double cs[4] = {d, c, b, a};
    std::vector<double> roots;
    for (ld t : depressed_cubic_roots(p, q)) {
        roots.push_back(polish(cs, 3, static_cast<double>(t - shift)));
    }
    sort_and_merge(roots);
    return roots;
}

std::vector<double> real_roots_quartic(double c4, double c3, double c2,
                                       double c1, double c0) {
    const double scale = coeff_scale({c4, c3, c2, c1, c0});
    if (scale == 0.0) return {};
    if (std::fabs(c4) < kDegenerate * scale) {
        return real_roots_cubic(c3, c2, c1, c0);
    }

    // Monic and depressed: x = z - a/4.
    const ld a = static_cast<ld>(c3) / c4;
    const ld b = static_cast<ld>(c2) / c4;
    const ld c = static_cast<ld>(c1) / c4;
    const ld d = static_cast<ld>(c0) / c4;
    const ld shift = a / 4.0L;
    const ld p = b - 3.0L * a * a / 8.0L;
    const ld q = c - a * b / 2.0L + a * a * a / 8.0L;
    const ld r = d - a * c / 4.0L + a * a * b / 16.0L -
                 3.0L * a * a * a * a / 256.0L;

    // Natural magnitude of z, used to decide whether q is negligible (the
    // biquadratic case): q scales like z^3.
    const ld zs = std::max({std::sqrt(std::fabs(p)),
                            std::cbrt(std::fabs(q)),
                            std::sqrt(std::sqrt(std::fabs(r)))});
    const ld z3 = zs * zs * zs;

    std::vector<ld> zroots;
    bool biquadratic = (z3 == 0.0L) || (std::fabs(q) <= 1e-14L * z3);

    if (!biquadratic) {
        // Ferrari: pick the largest real root m of the resolvent cubic
        //   m^3 + p m^2 + (p^2/4 - r) m - q^2/8 = 0;
        // m > 0 whenever q != 0 (the cubic is negative at m = 0).
        // Depress the resolvent (m = t - p/3) and take the largest root.
        const ld rq = p * p / 4.0L - r;
        ld m = 0.0L;
        for (ld t : depressed_cubic_roots(
                 rq - p * p / 3.0L,
                 -q * q / 8.0L + p * (2.0L * p * p - 9.0L * rq) / 27.0L)) {
            m = std::max(m, t - p / 3.0L);
        }
        if (m <= 0.0L) {
            biquadratic = true;  // rounding pushed the resolvent root to 0
        } else {
            const ld s2m = std::sqrt(2.0L * m);
            const ld t1 = p / 2.0L + m;
            const ld qs = q / (2.0L * s2m);
            quadratic_ld(1.0L, -s2m, t1 + qs, zroots);
            quadratic_ld(1.0L, s2m, t1 - qs, zroots);
        }
    }
    if (biquadratic) {
        std::vector<ld> ws;
        quadratic_ld(1.0L, p, r, ws);
        for (ld w : ws) {
            if (w < 0.0L) continue;
            const ld sq = std::sqrt(w);
            zroots.push_back(sq);
            if (sq != 0.0L) zroots.push_back(-sq);
        }
    }

    const double cs[5] = {c0, c1, c2, c3, c4};
    std::vector<double> roots;
    for (ld z : zroots) {
        roots.push_back(polish(cs, 4, static_cast<double>(z - shift)));
    }
    sort_and_merge(roots);
    return roots;
}

}  // namespace slope_nav
