#pragma once

#include <vector>

#include "zetascan/zeta.hpp"

namespace zetascan {

enum class Component { RealPart, ImagPart };

// Sign-change interval of one component of zeta(1/2 + y i).
struct Bracket {
    double y_lo = 0.0;
    double y_hi = 0.0;
    Component component = Component::RealPart;
    double value_lo = 0.0;  // component at the end points; opposite signs,
    double value_hi = 0.0;  // both nonzero
};

enum class ZeroKind { ZetaZero, ComponentZeroOnly };

struct ZeroRecord {
    double y = 0.0;
    Complex zeta_value;              // zeta(1/2 + y i) at the refined ordinate
    double zeta_residual = 0.0;      // |zeta_value|
    double reflection_residual = 0.0;  // |zeta(1 - s)| = |zeta(1/2 - y i)|
    ZeroKind kind = ZeroKind::ComponentZeroOnly;
};

// Samples the chosen component exactly at y_min + k step for every k with
// y_min + k step <= y_max and returns one bracket per adjacent pair with
// opposite signs. A sample that is exactly zero brackets its two neighbors
// against each other instead (so the crossing is kept without a zero end
// point); samples flagged by the error estimate split the range and pair
// with nothing. Throws std::invalid_argument unless y_min < y_max and
// step > 0.
std::vector<Bracket> bracket_sign_changes(double y_min, double y_max, double step,
                                          Component component,
                                          const EvalConfig& cfg = {});

// Bisection until the bracket is narrower than 1e-12. The end points are
// re-evaluated first; LostBracket if their signs no longer straddle zero.
// The refined record is a ZetaZero when |zeta| < 1e-8 there, otherwise
// ComponentZeroOnly.
ZeroRecord refine_zero(const Bracket& bracket, const EvalConfig& cfg = {});

// |zeta(-2k)| for k = 1..k_max. Throws std::invalid_argument unless
// 1 <= k_max <= 10.
std::vector<double> trivial_zero_residuals(int k_max, const EvalConfig& cfg = {});

// Whole-range pipeline: sample the line once, bracket both components,
// refine every bracket, sort by ordinate, and collapse the Re/Im pair a
// genuine zero produces (two ZetaZero records within 1e-8) into the one
// with the smaller residual.
std::vector<ZeroRecord> find_zero_records(double y_min, double y_max, double step,
                                          const EvalConfig& cfg = {}, int workers = 1);

}  // namespace zetascan
