#include "zetascan/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "zetascan/errors.hpp"

namespace zetascan {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLnPi = 1.1447298858494001741;  // ln(pi)
constexpr double kNearTol = 1e-12;

// Lanczos coefficients, g = 607/128, 15 terms (Godfrey's set, widely
// published). Partial-fraction form: A(z) = c0 + sum_k c_k / (z - 1 + k),
// Gamma(z) = sqrt(2 pi) t^(z - 1/2) e^(-t) A(z) with t = z + g - 1/2.
// Delivers ~15 correct digits on the real axis, ~13-14 over the complex
// right half-plane, and stays stable at large |Im z| because no high-degree
// polynomial in z is ever formed.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczosC0 = 0.99999999999999709182;
constexpr double kLanczosC[14] = {
    57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,     -0.49191381609762019978,
    0.33994649984811888699e-4, 0.46523628927048575665e-4,
    -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3,
    -0.16431810653676389022e-3, 0.84418223983852743293e-4,
    -0.26190838401581408670e-4, 0.36899182659531622704e-5,
};

// Asymptotic digamma coefficients B(2k)/(2k), k = 1..8.
constexpr double kDigammaCoeff[8] = {
    8.33333333333333287074e-02, -8.33333333333333321769e-03,
    3.96825396825396803369e-03, -4.16666666666666660884e-03,
    7.57575757575757596785e-03, -2.10927960927960941873e-02,
    8.33333333333333287074e-02, -4.43259803921568606988e-01,
};

bool near_nonpositive_integer(Complex z, double tol) {
    double r = std::round(z.real());
    return r <= 0.0 && std::abs(z - Complex(r, 0.0)) <= tol;
}

std::string point_str(Complex z) {
    std::ostringstream os;
    os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
    return os.str();
}

// Reduce the imaginary part of a logarithm to (-pi, pi].
Complex reduce_log_branch(Complex w) {
    double im = std::remainder(w.imag(), 2.0 * kPi);
    if (im <= -kPi) im = kPi;  // remainder can land on -pi exactly
    return {w.real(), im};
}

// log(sin(w)) for reduced w (|Re w| <= pi/2) with Im w >= 0 possibly large:
//   sin(w) = (i/2) e^{-iw} (1 - e^{2iw}),  |e^{2iw}| = e^{-2 Im w} <= 1
// so log sin(w) = -ln 2 + i pi/2 - i w + log1p(-e^{2iw}).
Complex log_sin_reduced(Complex w) {
    if (w.imag() < 1.0) {
        return std::log(std::sin(w));  // moderate magnitude, direct is exact enough
    }
    Complex q = std::exp(Complex(0.0, 2.0) * w);
    return Complex(-std::numbers::ln2, kPi / 2.0) + Complex(0.0, -1.0) * w +
           std::log(1.0 - q);
}

Complex lanczos_log_gamma_right(Complex z) {
    // Re(z) >= 1/2: every partial-fraction denominator has positive real part.
    Complex a = kLanczosC0;
    for (int k = 0; k < 14; ++k) {
        a += kLanczosC[k] / (z + double(k));  // z - 1 + (k + 1)
    }
    Complex t = z + (kLanczosG - 0.5);
    return 0.5 * std::log(2.0 * kPi) + (z - 0.5) * std::log(t) - t + std::log(a);
}

// log(sin(pi z)) on the branch that makes the log-gamma reflection the
// analytic continuation of log-gamma, for Im z >= 0 and z not an integer.
// The value is the accurately reduced principal logarithm plus 2 pi i n,
// where n comes from the globally analytic form
//   log sin(pi z) = -ln 2 + i pi/2 - i pi z + log(1 - e^{2 i pi z}),
// whose last term stays in the closed right half-plane when Im z >= 0. The
// coarse form loses digits next to the zeros of the sine, but its error
// there (~1e-5 at the 1e-12 pole guard) never flips an integer rounding.
Complex log_sin_pi_unwound(Complex z) {
    double m = std::nearbyint(z.real());
    Complex w = kPi * Complex(z.real() - m, z.imag());
    Complex lg = log_sin_reduced(w);
    if (std::fmod(m, 2.0) != 0.0) lg += Complex(0.0, kPi);  // the (-1)^m factor
    lg = reduce_log_branch(lg);
    const double coarse = kPi / 2.0 - kPi * z.real() +
                          std::arg(1.0 - std::exp(Complex(0.0, 2.0 * kPi) * z));
    const double n = std::nearbyint((coarse - lg.imag()) / (2.0 * kPi));
    return lg + Complex(0.0, 2.0 * kPi * n);
}

}  // namespace

Complex sin_pi(Complex z) {
    double m = std::nearbyint(z.real());
    Complex r(z.real() - m, z.imag());
    Complex s = std::sin(kPi * r);
    return std::fmod(m, 2.0) != 0.0 ? -s : s;
}

Complex cos_pi(Complex z) {
    if (std::abs(z.real()) >= 0x1p50) {
        // Adding 1/2 could round at this magnitude; reduce directly.
        double m = std::nearbyint(z.real());
        Complex r(z.real() - m, z.imag());
        Complex c = std::cos(kPi * r);
        return std::fmod(m, 2.0) != 0.0 ? -c : c;
    }
    return sin_pi(z + 0.5);  // exact at half-integers, where cos vanishes
}

Complex sin_half_pi(Complex s) { return sin_pi(0.5 * s); }

Complex cos_half_pi(Complex s) { return cos_pi(0.5 * s); }

Complex cot_half_pi(Complex s) {
    if (s.imag() < 0.0) return std::conj(cot_half_pi(std::conj(s)));
    if (s.imag() < 1.0) return cos_half_pi(s) / sin_half_pi(s);
    // cot(w) = i (e^{2iw} + 1) / (e^{2iw} - 1) with w = pi s / 2, so
    // e^{2iw} = e^{i pi s}, which is tiny for Im s >= 1.
    Complex q = std::exp(Complex(0.0, kPi) * s);
    return Complex(0.0, 1.0) * (q + 1.0) / (q - 1.0);
}

Complex log_sin_pi(Complex z) {
    double m = std::nearbyint(z.real());
    if (std::abs(z - Complex(m, 0.0)) <= kNearTol) {
        throw ZeroArgument("sin(pi z) vanishes within 1e-12 at z = " + point_str(z));
    }
    if (z.imag() < 0.0) return std::conj(log_sin_pi(std::conj(z)));
    Complex w = kPi * Complex(z.real() - m, z.imag());
    Complex lg = log_sin_reduced(w);
    if (std::fmod(m, 2.0) != 0.0) lg += Complex(0.0, kPi);  // the (-1)^m factor
    return reduce_log_branch(lg);
}

Complex log_sin_half_pi(Complex s) {
    double e = 2.0 * std::nearbyint(0.5 * s.real());
    if (std::abs(s - Complex(e, 0.0)) <= kNearTol) {
        throw ZeroArgument("sin(pi s / 2) vanishes within 1e-12 at s = " + point_str(s));
    }
    return log_sin_pi(0.5 * s);
}

Complex log_gamma(Complex z) {
    if (near_nonpositive_integer(z, kNearTol)) {
        throw PoleError("Gamma pole within 1e-12 at z = " + point_str(z));
    }
    if (z.imag() < 0.0) return std::conj(log_gamma(std::conj(z)));
    if (z.real() >= 0.5) return lanczos_log_gamma_right(z);
    // Reflection: log Gamma(z) = ln pi - log sin(pi z) - log Gamma(1 - z),
    // with the sine's log unwound so the left half-plane values continue
    // the right half-plane ones analytically instead of jumping by 2 pi i.
    return Complex(kLnPi, 0.0) - log_sin_pi_unwound(z) - lanczos_log_gamma_right(1.0 - z);
}

Complex digamma(Complex z) {
    if (near_nonpositive_integer(z, kNearTol)) {
        throw PoleError("digamma pole within 1e-12 at z = " + point_str(z));
    }
    if (z.imag() < 0.0) return std::conj(digamma(std::conj(z)));
    // psi(z) = psi(z + n) - sum_{k=0}^{n-1} 1/(z + k): march right until the
    // asymptotic series is safe.
    Complex shift = 0.0;
    while (z.real() < 10.0) {
        shift += 1.0 / z;
        z += 1.0;
    }
    Complex inv = 1.0 / z;
    Complex inv2 = inv * inv;
    Complex series = 0.0;
    Complex p = inv2;
    for (double c : kDigammaCoeff) {
        series += c * p;
        p *= inv2;
    }
    return std::log(z) - 0.5 * inv - series - shift;
}

}  // namespace zetascan
