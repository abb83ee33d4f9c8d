// Strong-convexity certification sweeps (see convexity.hpp).

#include "slope_nav/convexity.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "parallel.hpp"

namespace slope_nav {

namespace {

double steepness(const Surface& surface, double x1, double x2) {
    const Jet2 jet = surface.height_jet(x1, x2);
    const double q = jet.d1 * jet.d1 + jet.d2 * jet.d2;
    return std::sqrt(q / (q + 1.0));
}

// Nelder-Mead maximization of the steepness factor, clamped to the box.
// The simplex is tiny (3 vertices in 2D); tolerance is on simplex diameter.
SteepnessResult nelder_mead(const Surface& surface, const Box& box,
                            Vec2 start, double scale) {
    auto clamp = [&box](Vec2 p) {
        return Vec2{std::clamp(p.x1, box.x1min, box.x1max),
                    std::clamp(p.x2, box.x2min, box.x2max)};
    };
    auto value = [&](Vec2 p) { return steepness(surface, p.x1, p.x2); };

    struct Vertex {
        Vec2 x;
        double f = 0.0;  // negated steepness (we minimize)
    };
    std::array<Vertex, 3> simplex;
    simplex[0].x = clamp(start);
    simplex[1].x = clamp(start + Vec2{scale, 0.0});
    simplex[2].x = clamp(start + Vec2{0.0, scale});
    for (Vertex& v : simplex) v.f = -value(v.x);

    for (int iter = 0; iter < 200; ++iter) {
        std::sort(simplex.begin(), simplex.end(),
                  [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
        const double diameter =
            std::max(norm(simplex[1].x - simplex[0].x),
                     norm(simplex[2].x - simplex[0].x));
        if (diameter < 1e-6) break;

        const Vec2 centroid = 0.5 * (simplex[0].x + simplex[1].x);
        Vertex& worst = simplex[2];

        const Vec2 xr = clamp(centroid + (centroid - worst.x));
        const double fr = -value(xr);
        if (fr < simplex[0].f) {
            const Vec2 xe = clamp(centroid + 2.0 * (centroid - worst.x));
            const double fe = -value(xe);
            worst = fe < fr ? Vertex{xe, fe} : Vertex{xr, fr};
        } else if (fr < simplex[1].f) {
            worst = Vertex{xr, fr};
        } else {
            const Vec2 xc = clamp(centroid + 0.5 * (worst.x - centroid));
            const double fc = -value(xc);
            if (fc < worst.f) {
                worst = Vertex{xc, fc};
            } else {
                for (int i = 1; i < 3; ++i) {
                    simplex[i].x = clamp(
                        simplex[0].x + 0.5 * (simplex[i].x - simplex[0].x));
                    simplex[i].f = -value(simplex[i].x);
                }
            }
        }
    }
    std::sort(simplex.begin(), simplex.end(),
              [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
    return SteepnessResult{-simplex[0].f, simplex[0].x};
}

}  // namespace

SteepnessResult max_steepness(const Surface& surface, const Box& region,
                              int gridN) {
    if (gridN < 32) {
        throw std::invalid_argument("max_steepness requires gridN >= 32");
    }
    if (!(region.x1min < region.x1max) || !(region.x2min < region.x2max) ||
        !std::isfinite(region.x1min) || !std::isfinite(region.x1max) ||
        !std::isfinite(region.x2min) || !std::isfinite(region.x2max)) {
        throw std::invalid_argument(
            "max_steepness requires a finite, nonempty box");
    }

    const std::size_t n = static_cast<std::size_t>(gridN);
    const double dx1 = (region.x1max - region.x1min) / (gridN - 1.0);
    const double dx2 = (region.x2max - region.x2min) / (gridN - 1.0);

    std::vector<double> rowBest(n, -1.0);
    std::vector<Vec2> rowArg(n);
    detail::parallel_for(n, [&](std::size_t i) {
        const double x1 = region.x1min + static_cast<double>(i) * dx1;
        for (std::size_t j = 0; j < n; ++j) {
            const double x2 = region.x2min + static_cast<double>(j) * dx2;
            const double a = steepness(surface, x1, x2);
            if (a > rowBest[i]) {
                rowBest[i] = a;
                rowArg[i] = Vec2{x1, x2};
            }
        }
    });

    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i) {
        if (rowBest[i] > rowBest[best]) best = i;
    }

    const double cell = std::max(dx1, dx2);
    const SteepnessResult refined =
        nelder_mead(surface, region, rowArg[best], cell);
    if (refined.m >= rowBest[best]) return refined;
    return SteepnessResult{rowBest[best], rowArg[best]};
}

double gbar_bound(const Surface& surface, const Box& region,
                  const TractionParams& params, int gridN) {
    if (std::isinf(params.windBound)) {
        return std::numeric_limits<double>::infinity();
    }
    const SteepnessResult peak = max_steepness(surface, region, gridN);
    if (peak.m == 0.0) return std::numeric_limits<double>::infinity();
    return params.windBound / peak.m;
}

std::vector<BoundSample> bound_surface(int gridN, double ceiling) {
    if (gridN < 16) {
        throw std::invalid_argument("bound_surface requires gridN >= 16");
    }
    std::vector<BoundSample> samples;
    samples.reserve(static_cast<std::size_t>(gridN) *
                    static_cast<std::size_t>(gridN));
    for (int i = 0; i < gridN; ++i) {
        const double eta = static_cast<double>(i) / (gridN - 1.0);
        for (int j = 0; j < gridN; ++j) {
            const double etaTilde = static_cast<double>(j) / (gridN - 1.0);
            const double b0 = classify(eta, etaTilde).windBound;
            samples.push_back(BoundSample{eta, etaTilde,
                                          std::min(b0, ceiling)});
        }
    }
    return samples;
}

}  // namespace slope_nav
