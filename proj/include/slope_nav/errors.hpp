// Error taxonomy for the slope navigation library.
//
// Numeric-domain failures are distinct types so callers (CLI, tests) can map
// them to exit codes and messages without string matching. All of them carry
// a human-readable description of the offending state.

#pragma once

#include <stdexcept>
#include <string>

namespace slope_nav {

// The admissibility bound ||G^T|| < b0(eta, etaTilde) failed at some surface
// point: the traction metric is not defined (or not strongly convex) there.
struct AdmissibilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Strong convexity of the metric could not be certified where it was required
// (e.g. a requested wind strength at or above the certified bound).
struct ConvexityViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The defining quartic did not have exactly one positive root. This indicates
// an inadmissible state slipping past the precondition checks (or a genuinely
// degenerate polynomial); the metric value is never guessed in that case.
struct RootCountError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A structural denominator (B, C or E in the spray coefficient formulas) fell
// below tolerance; the geodesic coefficients would be meaningless.
struct DegenerateDenominator : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The along-path metric value drifted away from 1 beyond the configured
// tolerance during geodesic integration (unit-speed parametrization lost).
struct DriftError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace slope_nav
