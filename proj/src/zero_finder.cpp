#include "zetascan/zero_finder.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "zetascan/errors.hpp"
#include "zetascan/parallel.hpp"

namespace zetascan {
namespace {

constexpr double kBracketWidthTol = 1e-12;
constexpr double kZetaZeroTol = 1e-8;   // |zeta| below this marks a genuine zero
constexpr double kMergeTol = 1e-8;      // Re/Im records this close collapse
constexpr int kMaxBisections = 200;     // 2^-200 << any representable width

struct LineSample {
    double y = 0.0;
    Complex value;      // zeta(1/2 + y i)
    bool valid = false; // false when the error estimate exceeded the target
};

double component_of(const Complex& z, Component c) {
    return c == Component::RealPart ? z.real() : z.imag();
}

// Samples exactly at y_min + k step (never by repeated addition, so long
// ranges do not drift) for every k with y_min + k step <= y_max.
std::vector<LineSample> sample_line(double y_min, double y_max, double step,
                                    const EvalConfig& cfg, int workers) {
    if (!(step > 0.0) || !std::isfinite(step)) {
        throw std::invalid_argument("step must be positive and finite");
    }
    if (!(y_min < y_max) || !std::isfinite(y_min) || !std::isfinite(y_max)) {
        throw std::invalid_argument("need finite y_min < y_max");
    }
    validate(cfg);
    const auto k_max = std::uint64_t((y_max - y_min) / step + 1e-9);
    std::vector<LineSample> samples(k_max + 1);
    parallel_for_index(k_max + 1, workers, [&](std::uint64_t k) {
        LineSample& out = samples[k];
        out.y = y_min + double(k) * step;
        try {
            const ZetaEval w = zeta_with_error(Complex(0.5, out.y), cfg);
            out.value = w.value;
            out.valid = w.abs_error <= cfg.target_abs_error;
        } catch (const EvaluationError&) {
            out.valid = false;
        }
    });
    return samples;
}

std::vector<Bracket> brackets_from_samples(const std::vector<LineSample>& samples,
                                           Component component) {
    std::vector<Bracket> brackets;
    const size_t n = samples.size();
    for (size_t k = 0; k + 1 < n; ++k) {
        const LineSample& a = samples[k];
        const LineSample& b = samples[k + 1];
        if (!a.valid || !b.valid) continue;
        const double ga = component_of(a.value, component);
        const double gb = component_of(b.value, component);
        if (ga == 0.0) {
            // The crossing sits exactly on a sample; keep it by pairing the
            // two neighbors, whose values are nonzero on opposite sides.
            if (k == 0) continue;
            const LineSample& prev = samples[k - 1];
            if (!prev.valid) continue;
            const double gp = component_of(prev.value, component);
            if (gp != 0.0 && gb != 0.0 && std::signbit(gp) != std::signbit(gb)) {
                brackets.push_back({prev.y, b.y, component, gp, gb});
            }
            continue;
        }
        if (gb == 0.0) continue;  // handled as the zero sample of the next pair
        if (std::signbit(ga) != std::signbit(gb)) {
            brackets.push_back({a.y, b.y, component, ga, gb});
        }
    }
    return brackets;
}

ZeroRecord record_at(double y, const EvalConfig& cfg) {
    ZeroRecord rec;
    rec.y = y;
    rec.zeta_value = zeta_with_error(Complex(0.5, y), cfg).value;
    rec.zeta_residual = std::abs(rec.zeta_value);
    rec.reflection_residual = std::abs(zeta_with_error(Complex(0.5, -y), cfg).value);
    rec.kind = rec.zeta_residual < kZetaZeroTol ? ZeroKind::ZetaZero
                                                : ZeroKind::ComponentZeroOnly;
    return rec;
}

}  // namespace

std::vector<Bracket> bracket_sign_changes(double y_min, double y_max, double step,
                                          Component component, const EvalConfig& cfg) {
    return brackets_from_samples(sample_line(y_min, y_max, step, cfg, 1), component);
}

ZeroRecord refine_zero(const Bracket& bracket, const EvalConfig& cfg) {
    validate(cfg);
    if (!(bracket.y_lo < bracket.y_hi)) {
        throw std::invalid_argument("bracket must satisfy y_lo < y_hi");
    }
    auto eval = [&](double y) {
        return component_of(zeta_with_error(Complex(0.5, y), cfg).value, bracket.component);
    };

    double lo = bracket.y_lo;
    double hi = bracket.y_hi;
    const double flo = eval(lo);
    const double fhi = eval(hi);
    if (flo == 0.0) return record_at(lo, cfg);
    if (fhi == 0.0) return record_at(hi, cfg);
    if (std::signbit(flo) == std::signbit(fhi)) {
        throw LostBracket("end points of the bracket no longer have opposite signs");
    }

    const bool lo_negative = std::signbit(flo);
    for (int iter = 0; iter < kMaxBisections && hi - lo >= kBracketWidthTol; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // interval no longer splittable
        const double fm = eval(mid);
        if (fm == 0.0) return record_at(mid, cfg);
        if (std::signbit(fm) == lo_negative) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return record_at(0.5 * (lo + hi), cfg);
}

std::vector<double> trivial_zero_residuals(int k_max, const EvalConfig& cfg) {
    if (k_max < 1 || k_max > 10) {
        throw std::invalid_argument("k_max must be in [1, 10]");
    }
    validate(cfg);
    std::vector<double> residuals;
    residuals.reserve(size_t(k_max));
    for (int k = 1; k <= k_max; ++k) {
        residuals.push_back(std::abs(zeta_with_error(Complex(-2.0 * k, 0.0), cfg).value));
    }
    return residuals;
}

std::vector<ZeroRecord> find_zero_records(double y_min, double y_max, double step,
                                          const EvalConfig& cfg, int workers) {
    const std::vector<LineSample> samples = sample_line(y_min, y_max, step, cfg, workers);
    std::vector<Bracket> brackets = brackets_from_samples(samples, Component::RealPart);
    {
        std::vector<Bracket> im = brackets_from_samples(samples, Component::ImagPart);
        brackets.insert(brackets.end(), im.begin(), im.end());
    }

    std::vector<ZeroRecord> records(brackets.size());
    parallel_for_index(brackets.size(), workers,
                       [&](std::uint64_t k) { records[k] = refine_zero(brackets[k], cfg); });

    std::sort(records.begin(), records.end(),
              [](const ZeroRecord& a, const ZeroRecord& b) { return a.y < b.y; });

    // A genuine zero is found twice, once per component; keep the sharper of
    // the two records. Component-only crossings never merge.
    std::vector<ZeroRecord> merged;
    merged.reserve(records.size());
    for (const ZeroRecord& rec : records) {
        if (!merged.empty() && merged.back().kind == ZeroKind::ZetaZero &&
            rec.kind == ZeroKind::ZetaZero && rec.y - merged.back().y < kMergeTol) {
            if (rec.zeta_residual < merged.back().zeta_residual) merged.back() = rec;
            continue;
        }
        merged.push_back(rec);
    }
    return merged;
}

}  // namespace zetascan
