#include "zetascan/constraint.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "zetascan/errors.hpp"
#include "zetascan/parallel.hpp"
#include "zetascan/special_functions.hpp"

namespace zetascan {
namespace {

constexpr double kScanStep = 0.01;
constexpr double kRootWidthTol = 1e-13;
constexpr int kMaxBisections = 200;

// Component of f the case forces to zero.
double pinned(const Complex& f, CaseId c) {
    return (c == CaseId::A || c == CaseId::B) ? f.imag() : f.real();
}

// Sign the case requires of the surviving component.
bool survivor_sign_ok(const Complex& f, CaseId c) {
    switch (c) {
        case CaseId::A: return f.real() < 0.0;
        case CaseId::B: return f.real() > 0.0;
        case CaseId::C: return f.imag() > 0.0;
        case CaseId::D: return f.imag() < 0.0;
    }
    return false;
}

double implied_residual_at(double y, CaseId c, const EvalConfig& cfg) {
    const Complex z = zeta_with_error(Complex(0.5, y), cfg).value;
    switch (c) {
        case CaseId::A: return std::abs(z.real());
        case CaseId::B: return std::abs(z.imag());
        case CaseId::C: return std::abs(z.real() - z.imag());
        case CaseId::D: return std::abs(z.real() + z.imag());
    }
    return 0.0;
}

}  // namespace

Complex case_target(CaseId c) {
    switch (c) {
        case CaseId::A: return {-1.0, 0.0};
        case CaseId::B: return {1.0, 0.0};
        case CaseId::C: return {0.0, 1.0};
        case CaseId::D: return {0.0, -1.0};
    }
    throw std::invalid_argument("unknown case");
}

char case_letter(CaseId c) {
    switch (c) {
        case CaseId::A: return 'A';
        case CaseId::B: return 'B';
        case CaseId::C: return 'C';
        case CaseId::D: return 'D';
    }
    throw std::invalid_argument("unknown case");
}

Complex chi_factor(double y) {
    if (y < 0.0) return std::conj(chi_factor(-y));
    // All four factors are assembled as logs: the sine grows like
    // exp(pi y / 2) and Gamma(1/2 - y i) decays at the same rate, so forming
    // either alone would overflow long before the product drifts off the
    // unit circle.
    const double ln_two_pi = std::log(2.0 * std::numbers::pi);
    const Complex log_f = Complex(0.5 * std::log(2.0 * std::numbers::inv_pi), y * ln_two_pi) +
                          log_sin_half_pi(Complex(0.5, y)) +
                          log_gamma(Complex(0.5, -y));
    return std::exp(log_f);
}

double ratio_identity_residual(double y, const EvalConfig& cfg) {
    validate(cfg);
    const Complex z_plus = zeta_with_error(Complex(0.5, y), cfg).value;
    if (std::abs(z_plus) <= 1e-8) {
        throw NearZeroInput("zeta(1/2 + y i) vanishes here; the identity holds vacuously");
    }
    const Complex z_minus = zeta_with_error(Complex(0.5, -y), cfg).value;
    return std::abs(z_plus - chi_factor(y) * z_minus);
}

std::vector<CasePoint> locate_case_points(double y_min, double y_max, CaseId case_id,
                                          const EvalConfig& cfg, int workers) {
    if (!(y_min < y_max) || !std::isfinite(y_min) || !std::isfinite(y_max)) {
        throw std::invalid_argument("need finite y_min < y_max");
    }
    validate(cfg);

    const auto k_max = std::uint64_t((y_max - y_min) / kScanStep + 1e-9);
    std::vector<double> g(k_max + 1);
    parallel_for_index(k_max + 1, workers, [&](std::uint64_t k) {
        g[k] = pinned(chi_factor(y_min + double(k) * kScanStep), case_id);
    });

    // Candidate ordinates: exact-zero samples plus one bisection bracket per
    // strict sign change. Pairs touching an exact zero are skipped so each
    // crossing is counted once.
    std::vector<double> candidates;
    std::vector<std::pair<double, double>> brackets;
    for (std::uint64_t k = 0; k <= k_max; ++k) {
        const double y_k = y_min + double(k) * kScanStep;
        if (g[k] == 0.0) {
            candidates.push_back(y_k);
            continue;
        }
        if (k == k_max || g[k + 1] == 0.0) continue;
        if (std::signbit(g[k]) != std::signbit(g[k + 1])) {
            brackets.push_back({y_k, y_min + double(k + 1) * kScanStep});
        }
    }

    const size_t n_exact = candidates.size();
    candidates.resize(n_exact + brackets.size());
    parallel_for_index(brackets.size(), workers, [&](std::uint64_t b) {
        double lo = brackets[b].first;
        double hi = brackets[b].second;
        const bool lo_negative = std::signbit(pinned(chi_factor(lo), case_id));
        for (int iter = 0; iter < kMaxBisections && hi - lo > kRootWidthTol; ++iter) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            const double gm = pinned(chi_factor(mid), case_id);
            if (gm == 0.0) {
                lo = hi = mid;
                break;
            }
            if (std::signbit(gm) == lo_negative) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        candidates[n_exact + b] = 0.5 * (lo + hi);
    });

    std::sort(candidates.begin(), candidates.end());

    std::vector<CasePoint> points(candidates.size());
    std::vector<char> keep(candidates.size(), 0);
    parallel_for_index(candidates.size(), workers, [&](std::uint64_t k) {
        const double y = candidates[k];
        const Complex f = chi_factor(y);
        if (!survivor_sign_ok(f, case_id)) return;  // the other case on this component
        CasePoint& pt = points[k];
        pt.y = y;
        pt.case_id = case_id;
        pt.f = f;
        pt.f_residual = std::abs(f - case_target(case_id));
        pt.implied_residual = implied_residual_at(y, case_id, cfg);
        keep[k] = 1;
    });

    std::vector<CasePoint> out;
    out.reserve(points.size());
    for (size_t k = 0; k < points.size(); ++k) {
        if (keep[k]) out.push_back(points[k]);
    }
    return out;
}

double classify_zero_against_cases(const ZeroRecord& z) {
    if (z.kind != ZeroKind::ZetaZero) {
        throw std::invalid_argument("record is not a zero of zeta");
    }
    const Complex f = chi_factor(z.y);
    double best = std::abs(f - case_target(CaseId::A));
    for (CaseId c : {CaseId::B, CaseId::C, CaseId::D}) {
        best = std::min(best, std::abs(f - case_target(c)));
    }
    return best;
}

}  // namespace zetascan
