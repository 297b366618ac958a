#include "zetascan/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>
#include <vector>

#include "zetascan/errors.hpp"

namespace zetascan {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;
constexpr double kLnPi = 1.1447298858494001741;
constexpr double kLn2Pi = kLn2 + kLnPi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr long long kPrimeLimitCap = 10'000'000;

// B(2k)/(2k)! for k = 1..14. The sum uses correction_order of them; the
// remainder estimate uses one more, which caps correction_order at 13.
constexpr double kEmCoeff[14] = {
    8.33333333333333287074e-02,  -1.38888888888888894189e-03,
    3.30687830687830710131e-05,  -8.26719576719576754153e-07,
    2.08767569878681001866e-08,  -5.28419013868749322002e-10,
    1.33825365306846788611e-11,  -3.38968029632258271696e-13,
    8.58606205627784516939e-15,  -2.17486869855806192266e-16,
    5.50900282836022953019e-18,  -1.39544646858125223056e-19,
    3.53470703962946728227e-21,  -8.95351742703754627753e-23,
};

std::string point_str(Complex z) {
    std::ostringstream os;
    os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
    return os.str();
}

int main_sum_length(Complex s, const EvalConfig& cfg) {
    double adaptive = std::ceil(1.3 * std::abs(s.imag()));
    return std::max(cfg.series_cutoff, int(adaptive));
}

// Euler-Maclaurin for Re(s) > -1/2 (used for Re(s) >= 0 plus a small sliver
// left of the line where reflecting would bounce off the pole guard):
//   zeta(s) = sum_{n<N} n^-s + N^{1-s}/(s-1) + N^-s/2
//             + sum_{k=1}^{m} B_{2k}/(2k)! s(s+1)...(s+2k-2) N^{1-s-2k}.
// The remainder is bounded by the first omitted term scaled by
// |s + 2m + 1| / (Re s + 2m + 1).
ZetaEval euler_maclaurin(Complex s, const EvalConfig& cfg) {
    const int N = main_sum_length(s, cfg);
    const int m = cfg.correction_order;

    Complex sum = 1.0;  // n = 1
    for (int n = 2; n < N; ++n) {
        sum += std::exp(-s * std::log(double(n)));
    }
    const Complex n_pow_ms = std::exp(-s * std::log(double(N)));  // N^-s
    const Complex tail = n_pow_ms * double(N) / (s - 1.0) + 0.5 * n_pow_ms;

    Complex corr = 0.0;
    Complex rising = s;                          // s (s+1) ... (s+2k-2)
    Complex pw = n_pow_ms / double(N);           // N^{1-s-2k}
    const double inv_n2 = 1.0 / (double(N) * double(N));
    for (int k = 1; k <= m; ++k) {
        if (k > 1) rising *= (s + double(2 * k - 3)) * (s + double(2 * k - 2));
        corr += kEmCoeff[k - 1] * rising * pw;
        pw *= inv_n2;
    }

    const Complex next = kEmCoeff[m] * rising * (s + double(2 * m - 1)) *
                         (s + double(2 * m)) * pw;
    const double trunc = std::abs(next) * std::abs(s + double(2 * m + 1)) /
                         (s.real() + double(2 * m + 1));
    const double rounding = kEps * (double(N) + std::abs(sum) + std::abs(tail) + 1.0);
    return {sum + tail + corr, trunc + 4.0 * rounding};
}

// Same expansion differentiated term by term.
ZetaEval euler_maclaurin_prime(Complex s, const EvalConfig& cfg) {
    const int N = main_sum_length(s, cfg);
    const int m = cfg.correction_order;
    const double ln_n_max = std::log(double(N));

    Complex sum = 0.0;
    for (int n = 2; n < N; ++n) {
        const double ln_n = std::log(double(n));
        sum += -ln_n * std::exp(-s * ln_n);
    }
    const Complex n_pow_ms = std::exp(-s * ln_n_max);
    const Complex n_pow_1ms = n_pow_ms * double(N);
    const Complex tail = -ln_n_max * n_pow_1ms / (s - 1.0) -
                         n_pow_1ms / ((s - 1.0) * (s - 1.0)) -
                         0.5 * ln_n_max * n_pow_ms;

    Complex corr = 0.0;
    Complex rising = s;
    Complex rising_d = 1.0;  // d/ds of the rising product
    Complex pw = n_pow_ms / double(N);
    const double inv_n2 = 1.0 / (double(N) * double(N));
    for (int k = 1; k <= m; ++k) {
        if (k > 1) {
            const Complex u = s + double(2 * k - 3);
            const Complex v = s + double(2 * k - 2);
            rising_d = rising_d * u * v + rising * (u + v);
            rising *= u * v;
        }
        corr += kEmCoeff[k - 1] * (rising_d - ln_n_max * rising) * pw;
        pw *= inv_n2;
    }

    const Complex u = s + double(2 * m - 1);
    const Complex v = s + double(2 * m);
    const Complex next_rising = rising * u * v;
    const Complex next_rising_d = rising_d * u * v + rising * (u + v);
    const double trunc = std::abs(kEmCoeff[m] * (next_rising_d - ln_n_max * next_rising) * pw) *
                         std::abs(s + double(2 * m + 1)) / (s.real() + double(2 * m + 1));
    const double rounding =
        kEps * (double(N) * ln_n_max + std::abs(sum) + std::abs(tail) + 1.0);
    return {sum + tail + corr, trunc + 4.0 * rounding};
}

void check_pole(Complex s, const EvalConfig& cfg) {
    if (std::abs(s - 1.0) <= cfg.pole_exclusion_radius) {
        throw PoleProximity("zeta pole at s = 1: evaluation at " + point_str(s) +
                            " is inside the exclusion radius " +
                            std::to_string(cfg.pole_exclusion_radius));
    }
}

// Use Euler-Maclaurin directly right of the line Re(s) = 0 and on a small
// disc around the origin (the expansion continues past the line; reflecting
// there would evaluate zeta(1 - s) inside the pole guard).
bool use_direct_expansion(Complex s) {
    return s.real() >= 0.0 || std::abs(s) <= 0.5;
}

ZetaEval zeta_reflect(Complex s, const EvalConfig& cfg);

ZetaEval zeta_eval_canonical(Complex s, const EvalConfig& cfg) {
    check_pole(s, cfg);
    if (use_direct_expansion(s)) return euler_maclaurin(s, cfg);
    return zeta_reflect(s, cfg);
}

// zeta(s) = chi(s) zeta(1-s) with chi assembled in log space:
//   log chi = s ln 2 + (s-1) ln pi + log sin(pi s/2) + log Gamma(1-s).
// Near the trivial zeros the sine log has no finite value; there the sine
// factor is formed directly (its argument is essentially real, nothing can
// overflow) and multiplied by the exponential of the remaining logs.
ZetaEval zeta_reflect(Complex s, const EvalConfig& cfg) {
    const ZetaEval inner = euler_maclaurin(1.0 - s, cfg);
    const Complex log_rest = s * kLn2 + (s - 1.0) * kLnPi + log_gamma(1.0 - s);
    Complex chi;
    try {
        chi = std::exp(log_rest + log_sin_half_pi(s));
    } catch (const ZeroArgument&) {
        chi = std::exp(log_rest) * sin_half_pi(s);
    }
    const Complex value = chi * inner.value;
    const double err =
        std::abs(chi) * (inner.abs_error + 4.0 * kEps * std::abs(inner.value)) +
        8.0 * kEps * std::abs(value);
    return {value, err};
}

struct PrimeTable {
    std::shared_ptr<const std::vector<std::int64_t>> primes;
    long long limit = 0;
};

// Sieved once per process and only ever swapped for a strictly larger table;
// readers keep their shared_ptr, so the vector they see is immutable.
std::shared_ptr<const std::vector<std::int64_t>> primes_up_to(long long p_max) {
    static std::mutex mu;
    static PrimeTable table;

    std::lock_guard<std::mutex> lock(mu);
    if (table.limit >= p_max && table.primes) return table.primes;

    const long long limit = std::max<long long>(p_max, 1 << 16);
    std::vector<bool> composite(size_t(limit) + 1, false);
    auto primes = std::make_shared<std::vector<std::int64_t>>();
    for (long long i = 2; i <= limit; ++i) {
        if (composite[size_t(i)]) continue;
        primes->push_back(i);
        for (long long j = i * i; j <= limit; j += i) composite[size_t(j)] = true;
    }
    table = {primes, limit};
    return table.primes;
}

}  // namespace

void validate(const EvalConfig& cfg) {
    if (cfg.series_cutoff < 16) {
        throw std::invalid_argument("series_cutoff must be >= 16");
    }
    if (cfg.correction_order < 4 || cfg.correction_order > 13) {
        throw std::invalid_argument("correction_order must be in [4, 13]");
    }
    if (!(cfg.target_abs_error > 0.0) || cfg.target_abs_error >= 1e-6) {
        throw std::invalid_argument("target_abs_error must be in (0, 1e-6)");
    }
    if (!(cfg.derivative_step > 0.0) || cfg.derivative_step >= 1e-3) {
        throw std::invalid_argument("derivative_step must be in (0, 1e-3)");
    }
    if (!(cfg.pole_exclusion_radius > 0.0)) {
        throw std::invalid_argument("pole_exclusion_radius must be > 0");
    }
}

ZetaEval zeta_with_error(Complex s, const EvalConfig& cfg) {
    validate(cfg);
    if (s.imag() < 0.0) {
        ZetaEval w = zeta_eval_canonical(std::conj(s), cfg);
        return {std::conj(w.value), w.abs_error};
    }
    return zeta_eval_canonical(s, cfg);
}

Complex zeta(Complex s, const EvalConfig& cfg) {
    const ZetaEval w = zeta_with_error(s, cfg);
    if (w.abs_error > cfg.target_abs_error) {
        throw AccuracyLoss("zeta(" + point_str(s) + ") estimate " +
                               std::to_string(w.abs_error) + " exceeds target " +
                               std::to_string(cfg.target_abs_error),
                           w.value, w.abs_error);
    }
    return w.value;
}

Complex euler_product(Complex s, long long p_max, const EvalConfig& cfg) {
    validate(cfg);
    if (p_max < 2 || p_max > kPrimeLimitCap) {
        throw std::invalid_argument("p_max must be in [2, 1e7]");
    }
    if (!(s.real() > 1.0)) {
        throw DomainError("Euler product requires Re(s) > 1, got s = " + point_str(s));
    }
    auto primes = primes_up_to(p_max);
    Complex product = 1.0;
    for (std::int64_t p : *primes) {
        if (p > p_max) break;
        product *= 1.0 / (1.0 - std::exp(-s * std::log(double(p))));
    }
    return product;
}

Complex functional_rhs(Complex s, const EvalConfig& cfg) {
    validate(cfg);
    if (std::abs(s) <= cfg.pole_exclusion_radius) {
        throw PoleProximity("zeta(1 - s) pole: |s| = " + std::to_string(std::abs(s)) +
                            " is inside the exclusion radius");
    }
    const ZetaEval inner = zeta_with_error(1.0 - s, cfg);
    const Complex log_rest = s * kLn2 + (s - 1.0) * kLnPi + log_gamma(1.0 - s);
    Complex value;
    double chi_abs;
    try {
        const Complex chi = std::exp(log_rest + log_sin_half_pi(s));
        value = chi * inner.value;
        chi_abs = std::abs(chi);
    } catch (const ZeroArgument&) {
        const Complex chi = std::exp(log_rest) * sin_half_pi(s);
        value = chi * inner.value;
        chi_abs = std::abs(chi);
    }
    const double err = chi_abs * (inner.abs_error + 4.0 * kEps * std::abs(inner.value)) +
                       8.0 * kEps * std::abs(value);
    if (err > cfg.target_abs_error) {
        throw AccuracyLoss("functional_rhs(" + point_str(s) + ") estimate " +
                               std::to_string(err) + " exceeds target",
                           value, err);
    }
    return value;
}

ZetaEval zeta_prime_with_error(Complex s, const EvalConfig& cfg) {
    validate(cfg);
    if (s.imag() < 0.0) {
        ZetaEval w = zeta_prime_with_error(std::conj(s), cfg);
        return {std::conj(w.value), w.abs_error};
    }
    check_pole(s, cfg);
    if (use_direct_expansion(s)) return euler_maclaurin_prime(s, cfg);

    // Differentiate zeta(s) = A(s) sin(pi s/2) zeta(1-s) with
    // A = 2^s pi^(s-1) Gamma(1-s), A'/A = ln(2 pi) - psi0(1-s):
    //   zeta'(s) = A [ (ln 2pi - psi0(1-s)) sin zeta(1-s)
    //                  + (pi/2) cos zeta(1-s) - sin zeta'(1-s) ].
    // Grouped this way nothing overflows in the working domain: A carries
    // the decaying Gamma while sin and cos grow at the same rate.
    const ZetaEval z1 = euler_maclaurin(1.0 - s, cfg);
    const ZetaEval zp1 = euler_maclaurin_prime(1.0 - s, cfg);
    const Complex a = std::exp(s * kLn2 + (s - 1.0) * kLnPi + log_gamma(1.0 - s));
    const Complex sv = sin_half_pi(s);
    const Complex cv = cos_half_pi(s);
    const Complex psi = digamma(1.0 - s);
    const Complex value =
        a * ((kLn2Pi - psi) * sv * z1.value + 0.5 * kPi * cv * z1.value - sv * zp1.value);
    const double scale = std::abs(a) * (std::abs(sv) + std::abs(cv));
    const double err = scale * (z1.abs_error * (std::abs(kLn2Pi - psi) + kPi) +
                                zp1.abs_error + 8.0 * kEps * std::abs(z1.value)) +
                       8.0 * kEps * std::abs(value);
    return {value, err};
}

Complex zeta_prime(Complex s, const EvalConfig& cfg) {
    const ZetaEval w = zeta_prime_with_error(s, cfg);
    if (w.abs_error > cfg.target_abs_error) {
        throw AccuracyLoss("zeta_prime(" + point_str(s) + ") estimate " +
                               std::to_string(w.abs_error) + " exceeds target",
                           w.value, w.abs_error);
    }
    return w.value;
}

Complex functional_derivative_rhs(Complex s, const EvalConfig& cfg) {
    validate(cfg);
    if (!(s.real() > 0.0 && s.real() < 1.0)) {
        throw std::invalid_argument("functional_derivative_rhs requires 0 < Re(s) < 1");
    }
    const Complex two_s = std::exp(s * kLn2);
    const Complex pi_sm1 = std::exp((s - 1.0) * kLnPi);
    const Complex pi_s = pi_sm1 * kPi;
    const Complex g = std::exp(log_gamma(1.0 - s));
    const Complex sv = sin_half_pi(s);
    const Complex cv = cos_half_pi(s);
    const Complex z1 = zeta(1.0 - s, cfg);
    const Complex zp1 = zeta_prime(1.0 - s, cfg);
    const Complex psi = digamma(1.0 - s);

    const Complex t1 = -two_s * pi_sm1 * sv * g * zp1;
    const Complex t2 = 0.5 * two_s * pi_s * cv * g * z1;
    const Complex t3 = two_s * kLn2 * pi_sm1 * sv * g * z1;
    const Complex t4 = two_s * kLnPi * pi_sm1 * sv * g * z1;
    const Complex t5 = -two_s * pi_sm1 * sv * g * psi * z1;
    return t1 + t2 + t3 + t4 + t5;
}

Complex functional_derivative_rhs_factored(Complex s, const EvalConfig& cfg) {
    validate(cfg);
    if (!(s.real() > 0.0 && s.real() < 1.0)) {
        throw std::invalid_argument("functional_derivative_rhs requires 0 < Re(s) < 1");
    }
    const Complex two_pi_sm1 = std::exp((s - 1.0) * kLn2Pi);
    const Complex g = std::exp(log_gamma(1.0 - s));
    const Complex sv = sin_half_pi(s);
    const Complex cv = cos_half_pi(s);
    const Complex z1 = zeta(1.0 - s, cfg);
    const Complex zp1 = zeta_prime(1.0 - s, cfg);
    const Complex psi = digamma(1.0 - s);
    return two_pi_sm1 * g *
           (z1 * (kPi * cv + 2.0 * kLn2Pi * sv - 2.0 * sv * psi) - 2.0 * sv * zp1);
}

double stationarity_residual(Complex s, const EvalConfig& cfg) {
    validate(cfg);
    const Complex sv = sin_half_pi(s);
    if (std::abs(sv) < 1e-8) {
        throw DivisorVanishes("|sin(pi s/2)| = " + std::to_string(std::abs(sv)) +
                              " < 1e-8 at s = " + point_str(s));
    }
    const Complex z1 = zeta(1.0 - s, cfg);
    if (std::abs(z1) < 1e-8) {
        throw DivisorVanishes("|zeta(1-s)| = " + std::to_string(std::abs(z1)) +
                              " < 1e-8 at s = " + point_str(s));
    }
    const Complex zp1 = zeta_prime(1.0 - s, cfg);
    const Complex lhs = 0.5 * kPi * cot_half_pi(s) + kLn2Pi - digamma(1.0 - s);
    return std::abs(lhs - zp1 / z1);
}

double critical_gap(Complex s, const EvalConfig& cfg) {
    return std::abs(std::numbers::inv_pi - zeta(s, cfg));
}

}  // namespace zetascan
