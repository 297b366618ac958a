#pragma once

#include <vector>

#include "zetascan/zero_finder.hpp"
#include "zetascan/zeta.hpp"

namespace zetascan {

// The four points of the unit circle the reflection factor can reach while
// one of its components vanishes, and what each forces on
// a = Re zeta(1/2 + y i), b = Im zeta(1/2 + y i):
//   A: f = -1  (Re f = -1, Im f = 0)  forces a = 0
//   B: f = +1  (Re f = +1, Im f = 0)  forces b = 0
//   C: f = +i  (Re f = 0, Im f = +1)  forces a = b
//   D: f = -i  (Re f = 0, Im f = -1)  forces a = -b
enum class CaseId { A, B, C, D };

Complex case_target(CaseId c);
char case_letter(CaseId c);

// Unit-modulus reflection factor on the critical line,
//     f(y) = sqrt(2/pi) (2 pi)^(y i) sin(pi/4 + (y pi / 2) i) Gamma(1/2 - y i),
// assembled in log space so the huge sine and tiny Gamma never appear
// separately. |f(y)| = 1 for all real y; f(-y) is bitwise conj(f(y)).
Complex chi_factor(double y);

// |zeta(1/2 + y i) - f(y) zeta(1/2 - y i)|. Throws NearZeroInput when
// |zeta(1/2 + y i)| <= 1e-8: at a zero the identity holds vacuously and the
// residual measures nothing.
double ratio_identity_residual(double y, const EvalConfig& cfg = {});

struct CasePoint {
    double y = 0.0;
    CaseId case_id = CaseId::A;
    Complex f;                    // f(y) at the located ordinate
    double f_residual = 0.0;      // |f(y) - case target|
    double implied_residual = 0.0;  // |a|, |b|, |a-b| or |a+b| per case
};

// Scans [y_min, y_max] at step 0.01 for sign changes of the component the
// case pins to zero (Im f for A/B, Re f for C/D), bisects each crossing,
// and keeps the roots where the surviving component has the case's sign.
// Sorted ascending by y. Throws std::invalid_argument unless y_min < y_max.
std::vector<CasePoint> locate_case_points(double y_min, double y_max, CaseId case_id,
                                          const EvalConfig& cfg = {}, int workers = 1);

// Distance from f(z.y) to the nearest of the four case targets. Requires
// z.kind == ZetaZero (std::invalid_argument otherwise). Records where the
// factor sits when zeta actually vanishes; no claim is attached.
double classify_zero_against_cases(const ZeroRecord& z);

}  // namespace zetascan
