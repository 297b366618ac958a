#pragma once

#include <cstdint>

#include "zetascan/special_functions.hpp"

namespace zetascan {

// Knobs shared by the evaluator and everything built on top of it.
struct EvalConfig {
    int series_cutoff = 64;           // minimum main-sum length N
    int correction_order = 12;        // Bernoulli correction pairs
    double target_abs_error = 1e-12;  // AccuracyLoss above this estimate
    double derivative_step = 1e-6;    // step for finite-difference cross-checks
    double pole_exclusion_radius = 1e-3;  // PoleProximity within this of s = 1
};

// Throws std::invalid_argument unless series_cutoff >= 16,
// 4 <= correction_order <= 13, 0 < target_abs_error < 1e-6,
// 0 < derivative_step < 1e-3 and pole_exclusion_radius > 0.
void validate(const EvalConfig& cfg);

struct ZetaEval {
    Complex value;
    double abs_error = 0.0;  // internal estimate: truncation plus rounding floor
};

// Core evaluator. Euler-Maclaurin summation of the Dirichlet series with an
// adaptive main-sum length N >= max(cfg.series_cutoff, ceil(1.3 |Im s|)) and
// cfg.correction_order Bernoulli pairs; arguments left of the strip reflect
// through the functional equation with the prefactor assembled in log space.
// Never throws AccuracyLoss -- callers inspect abs_error -- but still throws
// PoleProximity inside the exclusion disc around s = 1. Conjugate symmetry
// holds bitwise (negative Im s evaluates as the conjugate at conj(s)).
ZetaEval zeta_with_error(Complex s, const EvalConfig& cfg = {});

// Analytically continued zeta. PoleProximity within
// cfg.pole_exclusion_radius of s = 1; AccuracyLoss (best-effort value
// attached) when the internal estimate exceeds cfg.target_abs_error.
Complex zeta(Complex s, const EvalConfig& cfg = {});

// Truncated Euler product over primes p <= p_max. DomainError unless
// Re(s) > 1; std::invalid_argument unless 2 <= p_max <= 10^7. The prime
// table is sieved once per process (thread-safe, grows monotonically) and
// is read-only afterward.
Complex euler_product(Complex s, long long p_max, const EvalConfig& cfg = {});

// Right-hand side of the reflection formula
//     2^s pi^(s-1) sin(pi s / 2) Gamma(1 - s) zeta(1 - s),
// prefactor combined in log space so one exponentiation produces it without
// overflow at large |Im s|. Returns an exact zero when the sine factor
// vanishes (the trivial zeros). PoleProximity when |s| is inside the
// exclusion radius (zeta(1 - s) at its pole); PoleError when 1 - s hits a
// Gamma pole.
Complex functional_rhs(Complex s, const EvalConfig& cfg = {});

// d zeta / ds, by term-differentiated Euler-Maclaurin or the differentiated
// reflection formula left of the strip. Same error contract as zeta.
Complex zeta_prime(Complex s, const EvalConfig& cfg = {});
ZetaEval zeta_prime_with_error(Complex s, const EvalConfig& cfg = {});

// Reflection-formula derivative for s inside the strip (0 < Re s < 1;
// std::invalid_argument otherwise), assembled literally as the five-term sum
//     - 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta'(1-s)
//     + 2^(s-1) pi^s cos(pi s/2) Gamma(1-s) zeta(1-s)
//     + 2^s ln(2) pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s)
//     + 2^s ln(pi) pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s)
//     - 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) psi0(1-s) zeta(1-s)
// and, separately, its factored equivalent
//     (2 pi)^(s-1) Gamma(1-s) [ zeta(1-s) (pi cos(pi s/2)
//         + 2 ln(2 pi) sin(pi s/2) - 2 sin(pi s/2) psi0(1-s))
//         - 2 sin(pi s/2) zeta'(1-s) ].
// The two agree to ~1e-10 and both match zeta_prime to ~1e-6 on the strip.
Complex functional_derivative_rhs(Complex s, const EvalConfig& cfg = {});
Complex functional_derivative_rhs_factored(Complex s, const EvalConfig& cfg = {});

// | (pi/2) cot(pi s/2) + ln(2 pi) - psi0(1-s) - zeta'(1-s)/zeta(1-s) |.
// DivisorVanishes when |sin(pi s/2)| < 1e-8 or |zeta(1-s)| < 1e-8.
double stationarity_residual(Complex s, const EvalConfig& cfg = {});

// |1/pi - zeta(s)|: the scanned landscape.
double critical_gap(Complex s, const EvalConfig& cfg = {});

}  // namespace zetascan
