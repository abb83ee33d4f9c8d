// Traction parameters (eta, etaTilde) and their classification.
//
// eta is the cross-traction coefficient (fraction of the lateral wind
// component canceled by traction), etaTilde the along-traction coefficient.
// The unit square of pairs splits into four regions D1..D4 on which the
// strong-convexity wind bound b0 takes different closed forms:
//
//   D1: eta >= etaTilde > 2 eta - 1            b0 = 1/(1 - etaTilde)
//   D2: (3 etaTilde - 1)/2 < eta < etaTilde    b0 = 1/(1 - etaTilde)
//   D3: eta >= 1/2 and etaTilde <= 2 eta - 1   b0 = 1/(2 |eta - etaTilde|)
//   D4: etaTilde >= 1/3 and eta <= (3 etaTilde - 1)/2,  same b0 as D3
//
// The corner (1,1) is the Riemannian problem (no wind effect, b0 = +inf).
// Boundary ties follow the printed strict/non-strict choices exactly, so the
// partition is disjoint and exhaustive; the finer subregions R1..R4, L0..L2
// record which case of the convexity proof applies.

#pragma once

#include <limits>

#include "slope_nav/surface.hpp"
#include "slope_nav/vec.hpp"

namespace slope_nav {

enum class Region { D1, D2, D3, D4, RIEM };
enum class Subregion {
    R1,          // 0 <= etaTilde < eta < 1/2            (in D1)
    R2,          // 0 <= eta < etaTilde < 1/3            (in D2)
    R3,          // eta in [1/2,1), etaTilde in (2eta-1, eta)   (in D1)
    R4,          // etaTilde in [1/3,1), eta in ((3etaTilde-1)/2, etaTilde) (D2)
    L0,          // diagonal eta == etaTilde, except (1,1)      (in D1)
    L1,          // edge eta == 1, etaTilde < 1                 (in D3)
    L2,          // edge etaTilde == 1, eta < 1                 (in D4)
    interiorD3,  // D3 minus L1
    interiorD4,  // D4 minus L2
    none         // the Riemannian corner (1,1)
};

struct TractionParams {
    double eta = 1.0;
    double etaTilde = 1.0;
    Region region = Region::RIEM;
    Subregion subregion = Subregion::none;
    double windBound = std::numeric_limits<double>::infinity();  // b0
};

const char* to_string(Region r);
const char* to_string(Subregion s);

// Throws std::invalid_argument if either coefficient is outside [0,1].
TractionParams classify(double eta, double etaTilde);

// Decomposition of the gravitational wind relative to a self-velocity
// heading theta (measured from the steepest-downhill frame vector e1 toward
// e2): G^T = gMat + gMatPerp with gMat the projection onto u, and the
// traction coefficients split G^T into the motion-effective "active" wind
//   G_active = (eta - etaTilde) gMat + (1 - eta) G^T
//            = (1 - eta) gMatPerp + (1 - etaTilde) gMat
// and the canceled "dead" wind G^T - G_active. The resultant velocity is
// u + G_active.
struct WindDecomposition {
    Vec2 u;          // self-velocity, unit h-norm
    Vec2 gMat;       // projection of G^T onto u
    Vec2 gMatPerp;   // G^T - gMat
    Vec2 active;     // wind actually pushing the craft
    Vec2 dead;       // wind canceled by traction
    Vec2 resultant;  // u + active
};

// At critical points (q = 0) there is no downhill frame; theta is then taken
// in the Euclidean tangent basis and all wind parts are zero.
WindDecomposition wind_decomposition(const PointGeometry& geom, double theta,
                                     const TractionParams& params);

// Off-diagonal pairs reduce to a single-coefficient problem with a rescaled
// wind: eta > etaTilde is the slippery-slope family (coefficient
// c1 = (eta-etaTilde)/(1-etaTilde), wind scale 1-etaTilde), eta < etaTilde
// the cross-slippery family (c2 = (etaTilde-eta)/(1-eta), scale 1-eta), and
// the diagonal is Randers-type ZNP with scale 1-eta.
enum class ReductionKind { SLIPPERY, S_CROSS, R_ZNP };

struct Reduction {
    ReductionKind kind = ReductionKind::R_ZNP;
    double c = 0.0;      // the reduced traction coefficient (0 for R_ZNP)
    double scale = 0.0;  // wind rescaling factor
};

// Throws std::invalid_argument at the Riemannian corner (1,1).
Reduction reduction_coefficients(double eta, double etaTilde);

}  // namespace slope_nav
