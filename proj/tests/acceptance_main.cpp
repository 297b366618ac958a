// Acceptance gate for the release: eight behavioral criteria, one
// [PASS]/[FAIL] line each, wall-clock budgets enforced. Exits nonzero if
// anything fails. The CLI binary path comes from ZETASCAN_BIN; the zero
// table from ZETASCAN_FIXTURE_DIR/nontrivial_zeros.csv.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "zetascan/constraint.hpp"
#include "zetascan/errors.hpp"
#include "zetascan/io.hpp"
#include "zetascan/scanner.hpp"
#include "zetascan/zero_finder.hpp"
#include "zetascan/zeta.hpp"

using zetascan::Complex;
using zetascan::EvalConfig;

namespace fs = std::filesystem;

namespace {

#ifndef ZETASCAN_FIXTURE_DIR
#define ZETASCAN_FIXTURE_DIR "tests/fixtures"
#endif

struct Failure {
    std::string reason;
};

void require(bool ok, const std::string& reason) {
    if (!ok) throw Failure{reason};
}

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// Deterministic uniform draw in [lo, hi).
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * ((gen() >> 11) * 0x1.0p-53);
    }
};

// ---- CLI helpers -------------------------------------------------------

struct RunResult {
    int exit_code = -1;
    std::string out;
    double seconds = 0.0;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("ZETASCAN_BIN");
    require(bin != nullptr, "ZETASCAN_BIN is not set");
    static int counter = 0;
    const fs::path out = fs::temp_directory_path() /
                         ("zetascan_accept_" + std::to_string(::getpid()) + "_" +
                          std::to_string(counter++) + ".txt");
    const std::string cmd =
        "\"" + std::string(bin) + "\" " + args + " >\"" + out.string() + "\" 2>/dev/null";
    const auto t0 = std::chrono::steady_clock::now();
    const int rc = std::system(cmd.c_str());
    const auto t1 = std::chrono::steady_clock::now();
    RunResult r;
    r.exit_code = (rc != -1 && WIFEXITED(rc)) ? WEXITSTATUS(rc) : -1;
    r.out = slurp(out);
    r.seconds = std::chrono::duration<double>(t1 - t0).count();
    std::error_code ec;
    fs::remove(out, ec);
    return r;
}

// Parses one "<re> <im>i" line.
Complex parse_value_line(const std::string& text) {
    std::istringstream in(text);
    double re = 0.0;
    std::string im_token;
    require(bool(in >> re >> im_token), "unparseable CLI output: " + text);
    require(!im_token.empty() && im_token.back() == 'i',
            "CLI output lacks the imaginary marker: " + text);
    im_token.pop_back();
    return {re, std::strtod(im_token.c_str(), nullptr)};
}

Complex eval_via_cli(const std::string& s_literal, bool derivative, double budget_s,
                     double& slowest) {
    const RunResult r =
        run_cli("eval --s=" + s_literal + (derivative ? " --derivative" : ""));
    require(r.exit_code == 0, "CLI eval --s=" + s_literal + " exited with " +
                                  std::to_string(r.exit_code));
    require(r.seconds < budget_s, "CLI eval --s=" + s_literal + " took " + num(r.seconds) +
                                      " s (budget " + num(budget_s) + " s)");
    slowest = std::max(slowest, r.seconds);
    return parse_value_line(r.out);
}

// ---- criteria ----------------------------------------------------------

// Classical values through the real CLI, each invocation in milliseconds.
bool criterion_classical_cli(std::string& detail) {
    double slowest = 0.0;
    const double budget = 1.0;  // seconds per invocation, spawn included

    const Complex half = eval_via_cli("0.5", false, budget, slowest);
    require(std::abs(half - Complex(-1.4603545088095868129, 0.0)) < 1e-9,
            "zeta(1/2) off: got " + num(half.real()));

    const Complex line5 = eval_via_cli("0.5+5i", false, budget, slowest);
    require(std::abs(line5 - Complex(0.70181237116568663, 0.23103800839141993)) < 1e-9,
            "zeta(1/2 + 5i) off");

    const Complex basel = eval_via_cli("2", false, budget, slowest);
    require(std::abs(basel - std::numbers::pi * std::numbers::pi / 6.0) < 1e-12,
            "zeta(2) != pi^2/6 to 1e-12");

    const Complex dzero = eval_via_cli("0", true, budget, slowest);
    require(std::abs(dzero - Complex(-0.5 * std::log(2.0 * std::numbers::pi), 0.0)) < 1e-10,
            "zeta'(0) != -ln(2 pi)/2 to 1e-10");

    detail = "4 CLI evaluations, slowest " + num(slowest) + " s";
    return true;
}

// The reflection identity and its derivative across the strip.
bool criterion_reflection(std::string& detail) {
    Rng rng(0x2f1e55);
    double worst = 0.0;
    int tested = 0;
    while (tested < 200) {
        const Complex s(rng.uniform(0.02, 0.98), rng.uniform(-49.0, 49.0));
        if (std::abs(s) <= 0.05) continue;
        const double diff = std::abs(zetascan::zeta(s) - zetascan::functional_rhs(s));
        worst = std::max(worst, diff);
        ++tested;
    }
    require(worst <= 1e-9, "identity residual " + num(worst) + " > 1e-9");

    double worst_deriv = 0.0;
    for (int i = 0; i < 10; ++i) {
        for (int j = 0; j < 10; ++j) {
            const Complex s(0.05 + 0.1 * i, 0.5 + j * (44.5 / 9.0));
            const double diff =
                std::abs(zetascan::functional_derivative_rhs(s) - zetascan::zeta_prime(s));
            worst_deriv = std::max(worst_deriv, diff);
        }
    }
    require(worst_deriv <= 1e-6, "derivative residual " + num(worst_deriv) + " > 1e-6");
    detail = "200 identity points (worst " + num(worst) + "), 10x10 derivative grid (worst " +
             num(worst_deriv) + ")";
    return true;
}

// Conjugate symmetry is bitwise; a mirrored scan is the rows-reversed scan.
bool criterion_symmetry(std::string& detail) {
    Rng rng(0xc0831c);
    int tested = 0;
    while (tested < 1000) {
        const Complex s(rng.uniform(-6.0, 4.0), rng.uniform(0.05, 80.0));
        if (std::abs(s - 1.0) <= 2e-3) continue;
        const zetascan::ZetaEval up = zetascan::zeta_with_error(s);
        const zetascan::ZetaEval dn = zetascan::zeta_with_error(std::conj(s));
        require(dn.value.real() == up.value.real() && dn.value.imag() == -up.value.imag(),
                "conjugate mismatch at re " + num(s.real()) + ", im " + num(s.imag()));
        ++tested;
    }

    const zetascan::ScanResult upper =
        zetascan::scan_strip({0.1, 0.9, 2.0, 42.0, 20, 40});
    const zetascan::ScanResult lower =
        zetascan::scan_strip({0.1, 0.9, -42.0, -2.0, 20, 40});
    for (std::uint32_t j = 0; j < 40; ++j) {
        for (std::uint32_t i = 0; i < 20; ++i) {
            require(lower.at(j, i) == upper.at(39 - j, i),
                    "mirror mismatch at row " + std::to_string(j));
        }
    }
    require(lower.min_value == upper.min_value, "mirrored minima differ");
    require(lower.min_location.real() == upper.min_location.real() &&
                lower.min_location.imag() == -upper.min_location.imag(),
            "mirrored argmin differs");
    detail = "1000 conjugate points bitwise, 20x40 scan mirror exact";
    return true;
}

std::vector<double> load_zero_fixture() {
    const fs::path path = fs::path(ZETASCAN_FIXTURE_DIR) / "nontrivial_zeros.csv";
    std::ifstream in(path);
    require(bool(in), "cannot open " + path.string());
    std::vector<double> ys;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("index", 0) == 0) continue;
        const auto comma = line.find(',');
        require(comma != std::string::npos, "bad fixture line: " + line);
        ys.push_back(std::strtod(line.c_str() + comma + 1, nullptr));
    }
    require(ys.size() == 10, "fixture must list ten ordinates");
    return ys;
}

// First ten critical-line zeros against the fixture, plus their mirrors.
bool criterion_zeros(std::string& detail) {
    const std::vector<double> fixture = load_zero_fixture();
    const auto records = zetascan::find_zero_records(0.05, 51.0, 0.05);
    std::vector<zetascan::ZeroRecord> zeros;
    for (const auto& r : records) {
        if (r.kind == zetascan::ZeroKind::ZetaZero) zeros.push_back(r);
    }
    require(zeros.size() == 10,
            "expected ten zeros below 51, found " + std::to_string(zeros.size()));
    double worst = 0.0, worst_refl = 0.0;
    for (std::size_t k = 0; k < 10; ++k) {
        worst = std::max(worst, std::abs(zeros[k].y - fixture[k]));
        worst_refl = std::max(worst_refl, zeros[k].reflection_residual);
    }
    require(worst <= 1e-8, "zero ordinate off by " + num(worst));
    require(worst_refl < 1e-8, "reflection residual " + num(worst_refl) + " >= 1e-8");

    const auto mirrored = zetascan::find_zero_records(-51.0, -0.05, 0.05);
    std::vector<double> neg;
    for (const auto& r : mirrored) {
        if (r.kind == zetascan::ZeroKind::ZetaZero) neg.push_back(r.y);
    }
    require(neg.size() == 10, "expected ten mirrored zeros");
    double worst_neg = 0.0;
    for (std::size_t k = 0; k < 10; ++k) {
        worst_neg = std::max(worst_neg, std::abs(neg[k] + fixture[9 - k]));
    }
    require(worst_neg <= 1e-8, "mirrored ordinate off by " + num(worst_neg));
    detail = "ten zeros matched to " + num(worst) + ", mirrors to " + num(worst_neg) +
             ", reflection residuals <= " + num(worst_refl);
    return true;
}

// Trivial zeros.
bool criterion_trivial(std::string& detail) {
    const auto residuals = zetascan::trivial_zero_residuals(5);
    double worst = 0.0;
    for (double r : residuals) worst = std::max(worst, r);
    require(worst < 1e-10, "trivial zero residual " + num(worst));
    detail = "|zeta(-2k)| <= " + num(worst) + " for k = 1..5";
    return true;
}

// Full-strip scan: 400x800 cell centers over (0,1) x (0,80), then refined
// descents from the sixteen lowest separated nodes, reported against the
// coarse reference minimum.
bool criterion_landscape(std::string& detail) {
    const zetascan::StripGrid grid{0.0, 1.0, 0.0, 80.0, 400, 800};
    const zetascan::ScanResult scan = zetascan::scan_strip(grid);
    std::uint64_t masked = 0;
    for (double v : scan.values) {
        if (zetascan::is_masked(v)) ++masked;
    }
    require(masked == 0, std::to_string(masked) + " masked nodes");
    require(scan.min_value > 0.0, "minimum is not strictly positive");

    const auto seeds = zetascan::lowest_nodes(scan, 16);
    require(seeds.size() == 16, "wanted 16 seeds, got " + std::to_string(seeds.size()));
    zetascan::RefineOptions ropts;
    ropts.edge_re = 1.0 / 400.0;
    ropts.edge_im = 80.0 / 800.0;
    zetascan::MinimumReport best;
    best.value = std::numeric_limits<double>::infinity();
    for (std::uint64_t flat : seeds) {
        const zetascan::MinimumReport rep =
            zetascan::refine_minimum(scan.node_location(flat), {}, ropts);
        require(rep.value <= scan.values[flat],
                "refinement worse than its seed at flat index " + std::to_string(flat));
        if (rep.value < best.value) best = rep;
    }

    const double reference = 3.93544e-9;
    const double ratio = best.value / reference;
    const char* label = ratio < 0.5 ? "smaller than the reference (discrepancy)"
                        : ratio > 2.0 ? "coarser than the reference (discrepancy)"
                                      : "in agreement with the reference";
    detail = "grid min " + num(scan.min_value) + " at (" +
             num(scan.min_location.real()) + ", " + num(scan.min_location.imag()) +
             "); refined best " + num(best.value) + " at (" + num(best.argmin.real()) +
             ", " + num(best.argmin.imag()) + "); reference " + num(reference) +
             ", ratio " + num(ratio) + ": " + label;
    return true;
}

// The unit-modulus factor and the four case constraints.
bool criterion_constraints(std::string& detail) {
    Rng rng(0xfeedface);
    double worst_mod = 0.0;
    for (int k = 0; k < 10000; ++k) {
        const Complex f = zetascan::chi_factor(rng.uniform(-25.0, 25.0));
        worst_mod = std::max(worst_mod, std::abs(std::abs(f) - 1.0));
        worst_mod = std::max(
            worst_mod, std::abs(f.real() * f.real() + f.imag() * f.imag() - 1.0));
    }
    require(worst_mod < 1e-10, "unit-modulus residual " + num(worst_mod));

    const Complex f0 = zetascan::chi_factor(0.0);
    require(std::abs(f0 - Complex(1.0, 0.0)) <= 5e-16 && f0.imag() == 0.0,
            "f(0) is not 1 to rounding");

    int admissible = 0;
    double worst_ratio = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const double y = rng.uniform(-25.0, 25.0);
        try {
            worst_ratio = std::max(worst_ratio, zetascan::ratio_identity_residual(y));
            ++admissible;
        } catch (const zetascan::NearZeroInput&) {
            // vacuous at a zero of zeta; skip
        }
    }
    require(admissible >= 990, "too few admissible ratio samples");
    require(worst_ratio < 1e-9, "ratio identity residual " + num(worst_ratio));

    int case_points = 0;
    double worst_implied = 0.0;
    for (auto c : {zetascan::CaseId::A, zetascan::CaseId::B, zetascan::CaseId::C,
                   zetascan::CaseId::D}) {
        for (const auto& pt : zetascan::locate_case_points(-50.0, 50.0, c)) {
            ++case_points;
            const Complex z = zetascan::zeta(Complex(0.5, pt.y));
            if (std::abs(z) > 1e-6) {
                require(pt.implied_residual < 1e-6,
                        std::string("case ") + zetascan::case_letter(c) + " at y = " +
                            num(pt.y) + " violates its constraint: " +
                            num(pt.implied_residual));
                worst_implied = std::max(worst_implied, pt.implied_residual);
            }
        }
    }
    require(case_points > 0, "no case points located");
    detail = "10^4 modulus samples (worst " + num(worst_mod) + "), " +
             std::to_string(admissible) + " ratio samples (worst " + num(worst_ratio) +
             "), " + std::to_string(case_points) + " case points (worst constraint " +
             num(worst_implied) + ")";
    return true;
}

// Interrupted-and-resumed scans and any worker count produce identical CSVs.
bool criterion_determinism(std::string& detail) {
    const zetascan::StripGrid grid{0.1, 0.9, 5.0, 13.0, 12, 16};
    const std::string clean = zetascan::scan_csv(zetascan::scan_strip(grid));

    const fs::path ck = fs::temp_directory_path() /
                        ("zetascan_accept_ck_" + std::to_string(::getpid()) + ".bin");
    zetascan::ScanOptions stop;
    stop.checkpoint_path = ck.string();
    stop.checkpoint_interval = 2;
    stop.stop_after_rows = 5;
    bool interrupted = false;
    try {
        zetascan::scan_strip(grid, {}, stop);
    } catch (const zetascan::ScanInterrupted&) {
        interrupted = true;
    }
    require(interrupted, "stop_after_rows did not interrupt");
    const std::string resumed = zetascan::scan_csv(zetascan::resume_scan(ck.string()));
    std::error_code ec;
    fs::remove(ck, ec);
    require(resumed == clean, "resumed CSV differs from the uninterrupted scan");

    zetascan::ScanOptions eight;
    eight.workers = 8;
    const std::string threaded = zetascan::scan_csv(zetascan::scan_strip(grid, {}, eight));
    require(threaded == clean, "8-worker CSV differs from the single-worker CSV");
    detail = "resume and 8-worker scans byte-identical (" +
             std::to_string(clean.size()) + " bytes)";
    return true;
}

struct Criterion {
    const char* name;
    double budget_seconds;
    std::function<bool(std::string&)> run;
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {"1. classical values through the CLI", 5.0, criterion_classical_cli},
        {"2. reflection identity and its derivative on the strip", 10.0,
         criterion_reflection},
        {"3. conjugate and mirror symmetry", 30.0, criterion_symmetry},
        {"4. first ten critical-line zeros and their mirrors", 60.0, criterion_zeros},
        {"5. trivial zeros", 1.0, criterion_trivial},
        {"6. full-strip landscape scan and refinement", 300.0, criterion_landscape},
        {"7. unit-modulus factor and case constraints", 60.0, criterion_constraints},
        {"8. deterministic artifacts under interruption and threading", 60.0,
         criterion_determinism},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::string detail;
        bool ok = false;
        std::string reason;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            ok = c.run(detail);
        } catch (const Failure& f) {
            reason = f.reason;
        } catch (const std::exception& e) {
            reason = std::string("unexpected exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (ok && elapsed >= c.budget_seconds) {
            ok = false;
            reason = "took " + num(elapsed) + " s, budget " + num(c.budget_seconds) + " s";
        }
        if (ok) {
            std::printf("[PASS] %s (%.2f s)\n", c.name, elapsed);
            if (!detail.empty()) std::printf("       %s\n", detail.c_str());
        } else {
            ++failures;
            std::printf("[FAIL] %s (%.2f s): %s\n", c.name, elapsed, reason.c_str());
        }
        std::fflush(stdout);
    }
    if (failures > 0) {
        std::printf("acceptance: %d of 8 criteria failed\n", failures);
        return 1;
    }
    std::printf("acceptance: 8/8 criteria passed\n");
    return 0;
}
