#pragma once

#include <complex>

namespace zetascan {

using Complex = std::complex<double>;

// sin(pi z), cos(pi z) with argument reduction against the nearest integer,
// so integer (and half-integer-shifted) lattice points come out exactly:
// plain std::sin(pi * z) cannot return 0 at z = n because pi rounds.
Complex sin_pi(Complex z);
Complex cos_pi(Complex z);

// sin(pi s / 2), cos(pi s / 2), cos/sin with the same reduction. The
// cotangent is evaluated through scaled exponentials once |Im s| is large
// enough that forming sin and cos separately would overflow for nothing.
Complex sin_half_pi(Complex s);
Complex cos_half_pi(Complex s);
Complex cot_half_pi(Complex s);

// log(sin(pi z)) assembled without forming the sine itself, stable for
// large |Im z| where |sin(pi z)| ~ exp(pi |Im z|). Imaginary part reduced
// to (-pi, pi]. Throws ZeroArgument within 1e-12 of an integer.
Complex log_sin_pi(Complex z);

// log(sin(pi s / 2)); imaginary part in (-pi, pi]. Throws ZeroArgument
// within 1e-12 of an even integer.
Complex log_sin_half_pi(Complex s);

// log Gamma(z) through a fixed published Lanczos coefficient set
// (g = 607/128, 15 terms, evaluated in partial-fraction form) for
// Re(z) >= 1/2 and the reflection formula below that, with the sine's
// logarithm unwound so the result is the analytic continuation from the
// positive real axis (branch cut (-inf, 0], real inputs on the cut take
// the limit from above). exp(log_gamma(z)) reproduces Gamma(z) to ~1e-13
// relative over the working domain (|Im z| up to a few hundred); the
// result is real for real z > 0 and conjugate-symmetric bitwise. Throws
// PoleError within 1e-12 of a non-positive integer.
Complex log_gamma(Complex z);

// psi0(z) = Gamma'(z)/Gamma(z) via upward recurrence until Re(z) >= 10
// followed by the Bernoulli asymptotic series. Shares no code with
// log_gamma on purpose: the two cross-check each other by finite
// differences. Throws PoleError within 1e-12 of a non-positive integer.
Complex digamma(Complex z);

}  // namespace zetascan
