// Traction-pair classification and wind decomposition (see params.hpp).

#include "slope_nav/params.hpp"

#include <cmath>
#include <stdexcept>

namespace slope_nav {

const char* to_string(Region r) {
    switch (r) {
        case Region::D1: return "D1";
        case Region::D2: return "D2";
        case Region::D3: return "D3";
        case Region::D4: return "D4";
        case Region::RIEM: return "RIEM";
    }
    return "?";
}

const char* to_string(Subregion s) {
    switch (s) {
        case Subregion::R1: return "R1";
        case Subregion::R2: return "R2";
        case Subregion::R3: return "R3";
        case Subregion::R4: return "R4";
        case Subregion::L0: return "L0";
        case Subregion::L1: return "L1";
        case Subregion::L2: return "L2";
        case Subregion::interiorD3: return "interiorD3";
        case Subregion::interiorD4: return "interiorD4";
        case Subregion::none: return "none";
    }
    return "?";
}

TractionParams classify(double eta, double etaTilde) {
    if (!(eta >= 0.0 && eta <= 1.0)) {
        throw std::invalid_argument("eta must lie in [0, 1]");
    }
    if (!(etaTilde >= 0.0 && etaTilde <= 1.0)) {
        throw std::invalid_argument("etaTilde must lie in [0, 1]");
    }
    TractionParams p;
    p.eta = eta;
    p.etaTilde = etaTilde;

    if (eta == 1.0 && etaTilde == 1.0) {
        // Full traction: the wind never acts, the problem is Riemannian and
        // every wind strength is admissible.
        p.region = Region::RIEM;
        p.subregion = Subregion::none;
        p.windBound = std::numeric_limits<double>::infinity();
        return p;
    }

    // Boundary ties are deliberate strict/non-strict choices making the four
    // regions disjoint and exhaustive on the square minus (1,1).
    if (eta >= etaTilde && etaTilde > 2.0 * eta - 1.0) {
        p.region = Region::D1;
        p.windBound = 1.0 / (1.0 - etaTilde);
        p.subregion = (eta == etaTilde) ? Subregion::L0
                      : (eta < 0.5)     ? Subregion::R1
                                        : Subregion::R3;
        return p;
    }
    if (eta < etaTilde && eta > (3.0 * etaTilde - 1.0) / 2.0) {
        p.region = Region::D2;
        p.windBound = 1.0 / (1.0 - etaTilde);
        p.subregion = (etaTilde < 1.0 / 3.0) ? Subregion::R2 : Subregion::R4;
        return p;
    }
    if (eta >= 0.5 && etaTilde <= 2.0 * eta - 1.0) {
        p.region = Region::D3;
        p.windBound = 1.0 / (2.0 * (eta - etaTilde));
        p.subregion = (eta == 1.0) ? Subregion::L1 : Subregion::interiorD3;
        return p;
    }
    if (etaTilde >= 1.0 / 3.0 && eta <= (3.0 * etaTilde - 1.0) / 2.0) {
        p.region = Region::D4;
        p.windBound = 1.0 / (2.0 * (etaTilde - eta));
        p.subregion = (etaTilde == 1.0) ? Subregion::L2 : Subregion::interiorD4;
        return p;
    }
    // The four cases cover the square (checked property-wise in tests).
    throw std::logic_error("traction-square partition failed to match");
}

WindDecomposition wind_decomposition(const PointGeometry& geom, double theta,
                                     const TractionParams& params) {
    WindDecomposition d;
    const double ct = std::cos(theta), st = std::sin(theta);

    if (geom.q == 0.0) {
        // No downhill direction: theta is Euclidean, wind parts vanish.
        d.u = Vec2{ct, st};
        d.resultant = d.u;
        return d;
    }

    // Orthonormal frame of h: e1 points steepest-downhill, e2 along the
    // level line. theta turns from e1 toward e2.
    const double f1 = geom.jet.d1, f2 = geom.jet.d2;
    const double sq = std::sqrt(geom.q);
    const double sq1 = std::sqrt(geom.q * (geom.q + 1.0));
    const Vec2 e1{-f1 / sq1, -f2 / sq1};
    const Vec2 e2{f2 / sq, -f1 / sq};

    d.u = ct * e1 + st * e2;
    // Projection onto the unit vector u in the h-inner product.
    d.gMat = h_dot(geom, geom.wind, d.u) * d.u;
    d.gMatPerp = geom.wind - d.gMat;
    d.active = (params.eta - params.etaTilde) * d.gMat +
               (1.0 - params.eta) * geom.wind;
    d.dead = (params.etaTilde - params.eta) * d.gMat + params.eta * geom.wind;
    d.resultant = d.u + d.active;
    return d;
}

Reduction reduction_coefficients(double eta, double etaTilde) {
    if (!(eta >= 0.0 && eta <= 1.0 && etaTilde >= 0.0 && etaTilde <= 1.0)) {
        throw std::invalid_argument("traction coefficients must lie in [0, 1]");
    }
    if (eta == 1.0 && etaTilde == 1.0) {
        throw std::invalid_argument(
            "the Riemannian corner (1,1) has no single-coefficient reduction");
    }
    Reduction r;
    if (eta > etaTilde) {
        r.kind = ReductionKind::SLIPPERY;
        r.c = (eta - etaTilde) / (1.0 - etaTilde);
        r.scale = 1.0 - etaTilde;
    } else if (eta < etaTilde) {
        r.kind = ReductionKind::S_CROSS;
        r.c = (etaTilde - eta) / (1.0 - eta);
        r.scale = 1.0 - eta;
    } else {
        r.kind = ReductionKind::R_ZNP;
        r.c = 0.0;
        r.scale = 1.0 - eta;
    }
    return r;
}

}  // namespace slope_nav
