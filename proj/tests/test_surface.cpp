// Surface geometry tests: metric/wind examples, curvature closed forms vs
// hand substitution and the finite-difference covariant-derivative oracle.

#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "slope_nav/expr.hpp"
#include "slope_nav/surface.hpp"

using namespace slope_nav;

TEST_CASE("incline point geometry matches the hand values") {
    const auto s = make_surface("incline:0.5");
    const PointGeometry g = point_geometry(*s, 0.0, 0.0, 1.0);
    CHECK(g.q == 0.25);
    CHECK(g.h11 == 1.25);
    CHECK(g.h12 == 0.0);
    CHECK(g.h22 == 1.0);
    CHECK(g.wind.x1 == doctest::Approx(-0.4).epsilon(1e-15));
    CHECK(g.wind.x2 == 0.0);
    CHECK(g.windNorm == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-15));
}

TEST_CASE("flat surface has no wind") {
    const auto s = make_surface("expr:0");
    const PointGeometry g = point_geometry(*s, 3.7, -2.1, 2.5);
    CHECK(g.q == 0.0);
    CHECK(g.h11 == 1.0);
    CHECK(g.h12 == 0.0);
    CHECK(g.h22 == 1.0);
    CHECK(g.wind.x1 == 0.0);
    CHECK(g.wind.x2 == 0.0);
    CHECK(g.windNorm == 0.0);
}

TEST_CASE("triple-hill steepest point has windNorm about 0.653") {
    const auto s = make_surface("gauss3");
    const PointGeometry g = point_geometry(*s, 0.652, 1.272, 1.0);
    CHECK(g.windNorm == doctest::Approx(0.653).epsilon(2e-3));
}

TEST_CASE("point_geometry rejects negative gravity") {
    const auto s = make_surface("gauss3");
    CHECK_THROWS_AS(point_geometry(*s, 0.0, 0.0, -1.0),
                    std::invalid_argument);
}

TEST_CASE("surface spec strings round-trip and bad specs throw") {
    CHECK(make_surface("gauss3")->spec() == "gauss3");
    CHECK(make_surface("incline:0.5")->spec() == "incline:0.5");
    CHECK(make_surface("expr:x1/2")->spec() == "expr:x1/2");
    CHECK_THROWS_AS(make_surface("plane"), std::invalid_argument);
    CHECK_THROWS_AS(make_surface("incline:abc"), std::invalid_argument);
    CHECK_THROWS_AS(make_surface("expr:x3+1"), expr::ParseError);
}

TEST_CASE("incline curvature vanishes exactly") {
    const auto s = make_surface("incline:0.8");
    const CurvatureData d = curvature_data(*s, 1.3, -0.4, 2.0);
    CHECK(d.r00_11 == 0.0);
    CHECK(d.r00_12 == 0.0);
    CHECK(d.r00_22 == 0.0);
    CHECK(d.r0_1 == 0.0);
    CHECK(d.r0_2 == 0.0);
    CHECK(d.r == 0.0);
    CHECK(d.rup.x1 == 0.0);
    CHECK(d.rup.x2 == 0.0);
}

TEST_CASE("paraboloid curvature by hand substitution") {
    // f = (x1^2+x2^2)/2 at (1,0): f1 = 1, f2 = 0, Hessian = I, q = 1.
    const auto s = make_surface("expr:(x1^2+x2^2)/2");
    const CurvatureData d = curvature_data(*s, 1.0, 0.0, 1.0);
    CHECK(d.r00_11 == doctest::Approx(0.5).epsilon(1e-15));   // f11/(q+1)
    CHECK(d.r00_12 == doctest::Approx(0.0));
    CHECK(d.r00_22 == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(d.r0_1 == doctest::Approx(0.25).epsilon(1e-15));    // (q+1)^-2
    CHECK(d.r0_2 == doctest::Approx(0.0));
    CHECK(d.r == doctest::Approx(0.125).epsilon(1e-15));      // (q+1)^-3
    // rup = h^{ij} r_j with h^{-1} = [[1,0],[0,2]]/2.
    CHECK(d.rup.x1 == doctest::Approx(0.125).epsilon(1e-15));
    CHECK(d.rup.x2 == doctest::Approx(0.0));
}

TEST_CASE("curvature is independent of gbar") {
    const auto s = make_surface("gauss3");
    const CurvatureData a = curvature_data(*s, 0.3, -0.7, 0.5);
    const CurvatureData b = curvature_data(*s, 0.3, -0.7, 3.0);
    CHECK(a.r00_11 == b.r00_11);
    CHECK(a.r0_1 == b.r0_1);
    CHECK(a.r == b.r);
    CHECK(a.rup.x1 == b.rup.x1);
    CHECK(a.rup.x2 == b.rup.x2);
}

TEST_CASE("triple-hill curvature matches the covariant-derivative oracle") {
    const auto s = make_surface("gauss3");
    const double gbar = 0.7;
    int checked = 0;
    for (int i = 0; i < 10; ++i) {
        for (int j = 0; j < 10; ++j) {
            const double x1 = -2.0 + 4.0 * i / 9.0;
            const double x2 = -2.0 + 4.0 * j / 9.0;
            const CurvatureData got = curvature_data(*s, x1, x2, gbar);
            const CurvatureData want =
                oracles::fd_curvature(*s, x1, x2, gbar);
            const double tol = 1e-6;
            CAPTURE(x1);
            CAPTURE(x2);
            CHECK(std::fabs(got.r00_11 - want.r00_11) < tol);
            CHECK(std::fabs(got.r00_12 - want.r00_12) < tol);
            CHECK(std::fabs(got.r00_22 - want.r00_22) < tol);
            CHECK(std::fabs(got.r0_1 - want.r0_1) < tol);
            CHECK(std::fabs(got.r0_2 - want.r0_2) < tol);
            CHECK(std::fabs(got.r - want.r) < tol);
            CHECK(std::fabs(got.rup.x1 - want.rup.x1) < tol);
            CHECK(std::fabs(got.rup.x2 - want.rup.x2) < tol);
            ++checked;
        }
    }
    CHECK(checked == 100);
}

TEST_CASE("alpha_beta on the incline") {
    const auto s = make_surface("incline:0.5");
    const PointGeometry g = point_geometry(*s, 0.0, 0.0, 1.0);

    const AlphaBeta traverse = alpha_beta(g, Vec2{0.0, 1.0});
    CHECK(traverse.alpha == 1.0);
    CHECK(traverse.beta == 0.0);

    const AlphaBeta downhill = alpha_beta(g, Vec2{-1.0, 0.0});
    CHECK(downhill.alpha == doctest::Approx(std::sqrt(5.0) / 2.0).epsilon(1e-15));
    CHECK(downhill.beta == -0.5);
}

TEST_CASE("alpha_beta is 1-homogeneous") {
    const auto s = make_surface("gauss3");
    const PointGeometry g = point_geometry(*s, 0.4, -0.9, 1.0);
    const Vec2 y{0.3, -1.7};
    const AlphaBeta one = alpha_beta(g, y);
    const AlphaBeta two = alpha_beta(g, 2.0 * y);
    CHECK(two.alpha == doctest::Approx(2.0 * one.alpha).epsilon(1e-15));
    CHECK(two.beta == doctest::Approx(2.0 * one.beta).epsilon(1e-15));
}

TEST_CASE("beta agrees with -h(y, wind)/gbar") {
    const auto s = make_surface("gauss3");
    std::mt19937 rng(711);
    std::uniform_real_distribution<double> pos(-2.0, 2.0);
    std::uniform_real_distribution<double> dir(-1.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const double gbar = 0.5 + 0.5 * dir(rng) + 0.6;
        const PointGeometry g = point_geometry(*s, pos(rng), pos(rng), gbar);
        const Vec2 y{dir(rng), dir(rng)};
        if (y.x1 == 0.0 && y.x2 == 0.0) continue;
        const AlphaBeta ab = alpha_beta(g, y);
        const double viaWind = -h_dot(g, y, g.wind) / gbar;
        CHECK(std::fabs(ab.beta - viaWind) <
              1e-12 * std::max(1.0, std::fabs(ab.beta)));
    }
}

TEST_CASE("metric is positive definite at random points of every builtin") {
    std::mt19937 rng(90210);
    std::uniform_real_distribution<double> pos(-3.0, 3.0);
    for (const char* spec : {"incline:0.5", "gauss3", "expr:sin(x1)*cos(x2)"}) {
        const auto s = make_surface(spec);
        for (int i = 0; i < 10000; ++i) {
            const PointGeometry g =
                point_geometry(*s, pos(rng), pos(rng), 1.0);
            REQUIRE(g.h11 > 0.0);
            REQUIRE(g.h11 * g.h22 - g.h12 * g.h12 ==
                    doctest::Approx(1.0 + g.q).epsilon(1e-12));
            REQUIRE(g.h11 * g.h22 - g.h12 * g.h12 > 0.0);
        }
    }
}

TEST_CASE("wind norm computed two ways agrees to 1e-12") {
    std::mt19937 rng(5150);
    std::uniform_real_distribution<double> pos(-3.0, 3.0);
    const auto s = make_surface("gauss3");
    for (int i = 0; i < 1000; ++i) {
        const PointGeometry g = point_geometry(*s, pos(rng), pos(rng), 1.3);
        const double viaH = std::sqrt(h_dot(g, g.wind, g.wind));
        CHECK(std::fabs(g.windNorm - viaH) <=
              1e-12 * std::max(1.0, g.windNorm));
    }
}

TEST_CASE("the 1-form beta is closed (jet symmetry is structural)") {
    // d12 is stored once, so f12 == f21 by construction; spot-check that the
    // cross partial is consistent under variable swap of a symmetric height.
    const auto s = make_surface("expr:exp(-(x1^2+x2^2))");
    const Jet2 a = s->height_jet(0.37, 0.81);
    const Jet2 b = s->height_jet(0.81, 0.37);
    CHECK(a.d12 == doctest::Approx(b.d12).epsilon(1e-15));
}
