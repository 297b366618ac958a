// Command-line front end: eval / scan / minimize / zeros / constraints /
// selfcheck. Results go to stdout or CSV files; progress notes go to stderr.
// Exit codes: 0 success, 1 computational failure (error: <Name>: <message>
// on stderr), 2 usage error.
#include <unistd.h>

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zetascan/constraint.hpp"
#include "zetascan/errors.hpp"
#include "zetascan/io.hpp"
#include "zetascan/parse.hpp"
#include "zetascan/scanner.hpp"
#include "zetascan/zero_finder.hpp"
#include "zetascan/zeta.hpp"

namespace {

using namespace zetascan;

// Baseline the minimize verdict compares against.
constexpr double kReferenceMinimum = 3.93544e-9;

std::string complex_str(Complex z) {
    return fmt17(z.real()) + " " + fmt17(z.imag()) + "i";
}

// ---- selfcheck --------------------------------------------------------------

struct SelfCheck {
    int passed = 0;
    int failed = 0;

    void report(const char* name, bool ok, const std::string& detail = "") {
        if (ok) {
            ++passed;
            std::printf("[PASS] %s\n", name);
        } else {
            ++failed;
            std::printf("[FAIL] %s%s%s\n", name, detail.empty() ? "" : ": ",
                        detail.c_str());
        }
    }

    template <typename Fn>
    void run(const char* name, Fn&& fn) {
        try {
            fn(name);
        } catch (const std::exception& e) {
            report(name, false, e.what());
        }
    }
};

int run_selfcheck(const EvalConfig& cfg) {
    SelfCheck sc;

    sc.run("zeta(2) = pi^2/6", [&](const char* name) {
        const double want = std::numbers::pi * std::numbers::pi / 6.0;
        const double diff = std::abs(zeta({2.0, 0.0}, cfg) - want);
        sc.report(name, diff < 1e-13, "diff " + fmt17(diff));
    });

    sc.run("trivial zeros are exact", [&](const char* name) {
        double worst = 0.0;
        for (double r : trivial_zero_residuals(5, cfg)) worst = std::max(worst, r);
        sc.report(name, worst == 0.0, "worst residual " + fmt17(worst));
    });

    sc.run("conjugate symmetry is bitwise", [&](const char* name) {
        const Complex s{0.3, 7.2};
        const Complex a = zeta(std::conj(s), cfg);
        const Complex b = std::conj(zeta(s, cfg));
        sc.report(name, a == b,
                  "zeta(conj s) = " + complex_str(a) + " vs " + complex_str(b));
    });

    sc.run("reflection formula matches direct evaluation", [&](const char* name) {
        const double d1 = std::abs(functional_rhs({0.3, 7.0}, cfg) - zeta({0.3, 7.0}, cfg));
        const double d2 =
            std::abs(functional_rhs({0.8, 12.5}, cfg) - zeta({0.8, 12.5}, cfg));
        sc.report(name, d1 < 1e-11 && d2 < 1e-11,
                  "diffs " + fmt17(d1) + ", " + fmt17(d2));
    });

    sc.run("derivative matches central difference", [&](const char* name) {
        const Complex s{1.7, 3.0};
        const double h = cfg.derivative_step;
        const Complex fd =
            (zeta(s + Complex(h, 0.0), cfg) - zeta(s - Complex(h, 0.0), cfg)) / (2.0 * h);
        const double diff = std::abs(zeta_prime(s, cfg) - fd);
        sc.report(name, diff < 1e-8, "diff " + fmt17(diff));
    });

    sc.run("derivative identity term and factored forms agree", [&](const char* name) {
        const Complex s{0.4, 9.0};
        const double diff = std::abs(functional_derivative_rhs(s, cfg) -
                                     functional_derivative_rhs_factored(s, cfg));
        sc.report(name, diff < 1e-12, "diff " + fmt17(diff));
    });

    sc.run("euler product approaches zeta", [&](const char* name) {
        const Complex exact = zeta({2.0, 0.0}, cfg);
        const double coarse = std::abs(euler_product({2.0, 0.0}, 100, cfg) - exact);
        const double fine = std::abs(euler_product({2.0, 0.0}, 100000, cfg) - exact);
        sc.report(name, fine < 1e-5 && fine < coarse,
                  "gap " + fmt17(fine) + " (p<=100: " + fmt17(coarse) + ")");
    });

    sc.run("first zero ordinate", [&](const char* name) {
        const ZeroRecord rec =
            refine_zero({14.1, 14.2, Component::RealPart, 0.0, 0.0}, cfg);
        const double diff = std::abs(rec.y - 14.134725141734694);
        sc.report(name, rec.kind == ZeroKind::ZetaZero && diff < 1e-9,
                  "y = " + fmt17(rec.y));
    });

    sc.run("reflection factor has unit modulus", [&](const char* name) {
        double worst = 0.0;
        for (double y : {1.0, 5.0, 30.0, 80.0}) {
            worst = std::max(worst, std::abs(std::abs(chi_factor(y)) - 1.0));
        }
        sc.report(name, worst < 1e-12, "worst |f|-1 " + fmt17(worst));
    });

    sc.run("real reflection factor ordinate near 17.85", [&](const char* name) {
        const auto pts = locate_case_points(17.0, 19.0, CaseId::B, cfg, 1);
        const bool ok =
            pts.size() == 1 && std::abs(pts[0].y - 17.845599540410861) < 1e-9;
        sc.report(name, ok,
                  pts.empty() ? "no point found" : "y = " + fmt17(pts[0].y));
    });

    sc.run("scan symmetry and checkpoint roundtrip", [&](const char* name) {
        const StripGrid grid{0.0, 1.0, 0.0, 6.0, 8, 12};
        const ScanResult direct = scan_strip(grid, cfg, {});
        const ScanResult mirrored = scan_strip({0.0, 1.0, -6.0, 0.0, 8, 12}, cfg, {});
        bool symmetric = true;
        for (std::uint32_t j = 0; j < grid.n_im && symmetric; ++j) {
            for (std::uint32_t i = 0; i < grid.n_re; ++i) {
                if (direct.at(j, i) != mirrored.at(grid.n_im - 1 - j, i)) {
                    symmetric = false;
                    break;
                }
            }
        }
        const auto ckpt = std::filesystem::temp_directory_path() /
                          ("zetascan-selfcheck-" + std::to_string(::getpid()) + ".ckpt");
        ScanOptions opts;
        opts.checkpoint_path = ckpt.string();
        opts.checkpoint_interval = 2;
        opts.stop_after_rows = 4;
        bool resumed_equal = false;
        try {
            scan_strip(grid, cfg, opts);
        } catch (const ScanInterrupted&) {
            const ScanResult resumed = resume_scan(ckpt.string(), cfg, {});
            resumed_equal = resumed.values == direct.values;
        }
        std::error_code ec;
        std::filesystem::remove(ckpt, ec);
        sc.report(name, symmetric && resumed_equal,
                  symmetric ? "resume mismatch" : "mirror mismatch");
    });

    std::printf("selfcheck: %d/%d passed\n", sc.passed, sc.passed + sc.failed);
    return sc.failed == 0 ? 0 : 1;
}

// ---- entry ------------------------------------------------------------------

int cli_main(int argc, char** argv) {
    CLI::App app{"Analytically continued Riemann zeta: evaluation, landscape scans,\n"
                 "zero finding and unit-modulus constraint checks"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read options from a key = value file");

    EvalConfig cfg;
    int workers = 1;
    app.add_option("--workers", workers, "Worker threads for grid rows and line samples")
        ->envname("ZETASCAN_WORKERS")
        ->check(CLI::Range(1, 256));
    app.add_option("--series-cutoff", cfg.series_cutoff, "Minimum main-sum length")
        ->capture_default_str();
    app.add_option("--correction-order", cfg.correction_order,
                   "Bernoulli correction pairs (4..13)")
        ->capture_default_str();
    app.add_option("--target-abs-error", cfg.target_abs_error,
                   "Absolute error target per evaluation")
        ->capture_default_str();
    app.add_option("--derivative-step", cfg.derivative_step,
                   "Finite-difference step for cross-checks")
        ->capture_default_str();
    app.add_option("--pole-radius", cfg.pole_exclusion_radius,
                   "Exclusion radius around the pole at s = 1")
        ->capture_default_str();

    int exit_code = 0;

    // eval ---------------------------------------------------------------
    auto* eval_cmd =
        app.add_subcommand("eval", "Evaluate zeta (or zeta') at one point");
    eval_cmd->fallthrough();
    std::string eval_s;
    bool eval_derivative = false;
    eval_cmd->add_option("--s", eval_s, "Evaluation point, e.g. 0.5+14.13i")->required();
    eval_cmd->add_flag("--derivative", eval_derivative, "Evaluate the derivative instead");
    eval_cmd->callback([&] {
        const Complex s = parse_complex(eval_s);
        const Complex v = eval_derivative ? zeta_prime(s, cfg) : zeta(s, cfg);
        std::printf("%s\n", complex_str(v).c_str());
    });

    // scan ---------------------------------------------------------------
    auto* scan_cmd =
        app.add_subcommand("scan", "Tabulate |1/pi - zeta| on a rectangular grid");
    scan_cmd->fallthrough();
    std::string scan_re = "0:1", scan_im = "0:80", scan_n = "200x400";
    std::string scan_ckpt, scan_out = "scan.csv";
    std::uint32_t scan_interval = 16, scan_stop = 0;
    scan_cmd->add_option("--re", scan_re, "Real range lo:hi")->capture_default_str();
    scan_cmd->add_option("--im", scan_im, "Imaginary range lo:hi")->capture_default_str();
    scan_cmd->add_option("--n", scan_n, "Grid size NxM (N re columns, M im rows)")
        ->capture_default_str();
    scan_cmd->add_option("--checkpoint", scan_ckpt,
                         "Checkpoint file; resumes from it when it exists");
    scan_cmd->add_option("--checkpoint-interval", scan_interval,
                         "Rows between checkpoint flushes")
        ->capture_default_str()
        ->check(CLI::Range(1u, 1000000u));
    scan_cmd
        ->add_option("--stop-after-rows", scan_stop,
                     "Abort after this many rows are checkpointed (testing aid)")
        ->capture_default_str();
    scan_cmd->add_option("--out", scan_out, "Output CSV path")->capture_default_str();
    scan_cmd->callback([&] {
        const auto [re_lo, re_hi] = parse_range(scan_re);
        const auto [im_lo, im_hi] = parse_range(scan_im);
        const auto [n_re, n_im] = parse_dims(scan_n);
        ScanOptions opts;
        opts.workers = workers;
        opts.checkpoint_path = scan_ckpt;
        opts.checkpoint_interval = scan_interval;
        opts.stop_after_rows = scan_stop;
        ScanResult result;
        if (!scan_ckpt.empty() && std::filesystem::exists(scan_ckpt)) {
            std::fprintf(stderr, "resuming from %s (grid options are ignored)\n",
                         scan_ckpt.c_str());
            result = resume_scan(scan_ckpt, cfg, opts);
        } else {
            result = scan_strip({re_lo, re_hi, im_lo, im_hi, n_re, n_im}, cfg, opts);
        }
        atomic_write_file(scan_out, scan_csv(result));
        std::printf("min %s at %s\n", fmt17(result.min_value).c_str(),
                    complex_str(result.min_location).c_str());
        std::printf("evaluations %" PRIu64 "\n", result.evaluations);
        std::printf("wrote %s\n", scan_out.c_str());
    });

    // minimize -----------------------------------------------------------
    auto* min_cmd = app.add_subcommand(
        "minimize", "Scan, then descend from the lowest grid nodes");
    min_cmd->fallthrough();
    std::string min_re, min_im, min_n, min_out = "minimize.csv";
    int min_seeds = 16;
    bool min_unrestricted = false;
    min_cmd->add_option("--re", min_re, "Real range lo:hi (default 0:1; -16:6 unrestricted)");
    min_cmd->add_option("--im", min_im, "Imaginary range lo:hi (default 0:80)");
    min_cmd->add_option("--n", min_n,
                        "Grid size NxM (default 200x400; 440x400 unrestricted)");
    min_cmd->add_flag("--unrestricted", min_unrestricted,
                      "Allow descent to leave the 0 < Re(s) < 1 band");
    min_cmd->add_option("--seeds", min_seeds, "Lowest non-adjacent nodes to refine")
        ->capture_default_str()
        ->check(CLI::Range(1, 1024));
    min_cmd->add_option("--out", min_out, "Output CSV path")->capture_default_str();
    min_cmd->callback([&] {
        if (min_re.empty()) min_re = min_unrestricted ? "-16:6" : "0:1";
        if (min_im.empty()) min_im = "0:80";
        if (min_n.empty()) min_n = min_unrestricted ? "440x400" : "200x400";
        const auto [re_lo, re_hi] = parse_range(min_re);
        const auto [im_lo, im_hi] = parse_range(min_im);
        const auto [n_re, n_im] = parse_dims(min_n);
        ScanOptions sopts;
        sopts.workers = workers;
        const ScanResult scan =
            scan_strip({re_lo, re_hi, im_lo, im_hi, n_re, n_im}, cfg, sopts);

        RefineOptions ropts;
        ropts.unrestricted = min_unrestricted;
        ropts.re_lo = re_lo;
        ropts.re_hi = re_hi;
        ropts.edge_re = (re_hi - re_lo) / double(n_re);  // one grid cell
        ropts.edge_im = (im_hi - im_lo) / double(n_im);

        std::vector<MinimumReport> reports;
        for (std::uint64_t flat : lowest_nodes(scan, min_seeds)) {
            reports.push_back(refine_minimum(scan.node_location(flat), cfg, ropts));
        }
        atomic_write_file(min_out, minimize_csv(reports));

        const auto* best = &reports.front();
        for (const auto& rep : reports) {
            if (rep.value < best->value) best = &rep;
        }
        const double ratio = best->value / kReferenceMinimum;
        const char* verdict =
            ratio < 0.5 ? "smaller" : (ratio > 2.0 ? "coarser" : "agreement");
        std::printf("best %s at %s\n", fmt17(best->value).c_str(),
                    complex_str(best->argmin).c_str());
        std::printf("reference %s ratio %s\n", fmt17(kReferenceMinimum).c_str(),
                    fmt17(ratio).c_str());
        std::printf("comparison %s\n", verdict);
        std::printf("wrote %s\n", min_out.c_str());
    });

    // zeros ----------------------------------------------------------------
    auto* zeros_cmd = app.add_subcommand(
        "zeros", "Bracket and bisect component sign changes on the critical line");
    zeros_cmd->fallthrough();
    std::string zeros_range = "0:51", zeros_out = "zeros.csv";
    double zeros_step = 0.05;
    zeros_cmd->add_option("--range", zeros_range, "Ordinate range lo:hi")
        ->capture_default_str();
    zeros_cmd->add_option("--step", zeros_step, "Sampling step")->capture_default_str();
    zeros_cmd->add_option("--out", zeros_out, "Output CSV path")->capture_default_str();
    zeros_cmd->callback([&] {
        const auto [lo, hi] = parse_range(zeros_range);
        const auto records = find_zero_records(lo, hi, zeros_step, cfg, workers);
        atomic_write_file(zeros_out, zeros_csv(records));
        int zeros = 0;
        for (const auto& rec : records) {
            if (rec.kind != ZeroKind::ZetaZero) continue;
            ++zeros;
            std::printf("zero %s\n", fmt17(rec.y).c_str());
        }
        std::printf("zeta_zeros %d\n", zeros);
        std::printf("component_crossings %d\n", int(records.size()) - zeros);
        std::printf("wrote %s\n", zeros_out.c_str());
    });

    // constraints ----------------------------------------------------------
    auto* con_cmd = app.add_subcommand(
        "constraints", "Locate the ordinates where the reflection factor hits "
                       "-1, +1, +i or -i");
    con_cmd->fallthrough();
    std::string con_range = "-50:50", con_case = "all", con_out = "constraints.csv";
    con_cmd->add_option("--range", con_range, "Ordinate range lo:hi")->capture_default_str();
    con_cmd->add_option("--case", con_case, "Which case to locate")
        ->capture_default_str()
        ->check(CLI::IsMember({"all", "A", "B", "C", "D"}));
    con_cmd->add_option("--out", con_out, "Output CSV path")->capture_default_str();
    con_cmd->callback([&] {
        const auto [lo, hi] = parse_range(con_range);
        std::vector<CaseId> wanted;
        if (con_case == "all") {
            wanted = {CaseId::A, CaseId::B, CaseId::C, CaseId::D};
        } else {
            wanted = {CaseId(con_case[0] - 'A')};
        }
        std::vector<CasePoint> points;
        int counts[4] = {0, 0, 0, 0};
        for (CaseId c : wanted) {
            auto pts = locate_case_points(lo, hi, c, cfg, workers);
            counts[int(c)] = int(pts.size());
            points.insert(points.end(), pts.begin(), pts.end());
        }
        std::sort(points.begin(), points.end(), [](const CasePoint& a, const CasePoint& b) {
            return a.y != b.y ? a.y < b.y : int(a.case_id) < int(b.case_id);
        });
        double worst_f = 0.0, worst_implied = 0.0;
        for (const auto& pt : points) {
            worst_f = std::max(worst_f, pt.f_residual);
            worst_implied = std::max(worst_implied, pt.implied_residual);
        }
        atomic_write_file(con_out, constraints_csv(points));
        std::printf("case_points %zu\n", points.size());
        std::printf("A %d B %d C %d D %d\n", counts[0], counts[1], counts[2], counts[3]);
        std::printf("max_f_residual %s\n", fmt17(worst_f).c_str());
        std::printf("max_implied_residual %s\n", fmt17(worst_implied).c_str());
        std::printf("wrote %s\n", con_out.c_str());
    });

    // selfcheck --------------------------------------------------------------
    auto* self_cmd =
        app.add_subcommand("selfcheck", "Run the built-in consistency checks");
    self_cmd->fallthrough();
    self_cmd->callback([&] { exit_code = run_selfcheck(cfg); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return cli_main(argc, argv);
    } catch (const zetascan::EvaluationError& e) {
        std::fprintf(stderr, "error: %s: %s\n", e.name().c_str(), e.what());
        return 1;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: invalid argument: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
