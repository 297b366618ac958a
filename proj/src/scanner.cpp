#include "zetascan/scanner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>

#include "zetascan/errors.hpp"
#include "zetascan/parallel.hpp"

namespace zetascan {
namespace {

constexpr char kCheckpointMagic[4] = {'Z', 'S', 'C', 'N'};
constexpr std::uint32_t kCheckpointVersion = 1;

// ---- checkpoint serialization ----------------------------------------------
// Layout (all little-endian):
//   magic "ZSCN" | u32 version | grid (4 f64, 2 u32) | eval config
//   (u32 series_cutoff, u32 correction_order, f64 target, f64 pole radius)
//   | u32 rows_completed | u32 reserved(0) | u64 fnv1a checksum | row payload.
// The checksum covers the whole header (checksum field zeroed) plus the
// payload, so truncation, bit rot and config drift all surface as
// CorruptCheckpoint.

void put_u32(std::string& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(char((v >> (8 * i)) & 0xff));
}

void put_u64(std::string& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(char((v >> (8 * i)) & 0xff));
}

void put_f64(std::string& out, double d) {
    std::uint64_t bits;
    std::memcpy(&bits, &d, 8);
    put_u64(out, bits);
}

struct Reader {
    const std::string& buf;
    size_t pos = 0;

    bool have(size_t n) const { return buf.size() - pos >= n; }
    std::uint32_t u32() {
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= std::uint32_t(std::uint8_t(buf[pos++])) << (8 * i);
        return v;
    }
    std::uint64_t u64() {
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= std::uint64_t(std::uint8_t(buf[pos++])) << (8 * i);
        return v;
    }
    double f64() {
        std::uint64_t bits = u64();
        double d;
        std::memcpy(&d, &bits, 8);
        return d;
    }
};

std::uint64_t fnv1a(const std::string& a, const std::string& b) {
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&h](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
    };
    mix(a);
    mix(b);
    return h;
}

constexpr size_t kHeaderSize = 4 + 4 + 4 * 8 + 2 * 4 + (4 + 4 + 8 + 8) + 4 + 4 + 8;

std::string checkpoint_header(const StripGrid& grid, const EvalConfig& cfg,
                              std::uint32_t rows_completed) {
    std::string h;
    h.reserve(kHeaderSize);
    h.append(kCheckpointMagic, 4);
    put_u32(h, kCheckpointVersion);
    put_f64(h, grid.re_min);
    put_f64(h, grid.re_max);
    put_f64(h, grid.im_min);
    put_f64(h, grid.im_max);
    put_u32(h, grid.n_re);
    put_u32(h, grid.n_im);
    put_u32(h, std::uint32_t(cfg.series_cutoff));
    put_u32(h, std::uint32_t(cfg.correction_order));
    put_f64(h, cfg.target_abs_error);
    put_f64(h, cfg.pole_exclusion_radius);
    put_u32(h, rows_completed);
    put_u32(h, 0);     // reserved
    put_u64(h, 0);     // checksum placeholder
    return h;
}

void write_checkpoint(const std::string& path, const StripGrid& grid,
                      const EvalConfig& cfg, const std::vector<double>& values,
                      std::uint32_t rows_completed) {
    std::string header = checkpoint_header(grid, cfg, rows_completed);
    std::string payload;
    payload.reserve(size_t(rows_completed) * grid.n_re * 8);
    for (std::uint64_t k = 0; k < std::uint64_t(rows_completed) * grid.n_re; ++k) {
        put_f64(payload, values[k]);
    }
    const std::uint64_t checksum = fnv1a(header, payload);
    header.resize(header.size() - 8);
    put_u64(header, checksum);

    const std::filesystem::path target(path);
    const std::filesystem::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out.write(header.data(), std::streamsize(header.size()));
        out.write(payload.data(), std::streamsize(payload.size()));
        out.flush();
        if (!out) throw std::runtime_error("short write to " + tmp.string());
    }
    std::filesystem::rename(tmp, target);  // atomic replacement
}

struct CheckpointState {
    StripGrid grid;
    std::uint32_t rows_completed = 0;
    std::vector<double> values;  // full matrix, rows past rows_completed masked
};

CheckpointState read_checkpoint(const std::string& path, const EvalConfig& cfg) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CorruptCheckpoint("cannot open checkpoint " + path);
    std::string buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (buf.size() < kHeaderSize) throw CorruptCheckpoint("checkpoint shorter than header");

    Reader r{buf};
    if (std::memcmp(buf.data(), kCheckpointMagic, 4) != 0) {
        throw CorruptCheckpoint("bad magic");
    }
    r.pos = 4;
    if (r.u32() != kCheckpointVersion) throw CorruptCheckpoint("unsupported version");

    CheckpointState st;
    st.grid.re_min = r.f64();
    st.grid.re_max = r.f64();
    st.grid.im_min = r.f64();
    st.grid.im_max = r.f64();
    st.grid.n_re = r.u32();
    st.grid.n_im = r.u32();
    const auto series_cutoff = r.u32();
    const auto correction_order = r.u32();
    const double target = r.f64();
    const double pole_radius = r.f64();
    st.rows_completed = r.u32();
    r.u32();  // reserved
    const std::uint64_t stored_checksum = r.u64();

    validate(st.grid);
    if (st.rows_completed > st.grid.n_im) throw CorruptCheckpoint("row count exceeds grid");
    const size_t expect = kHeaderSize + size_t(st.rows_completed) * st.grid.n_re * 8;
    if (buf.size() != expect) throw CorruptCheckpoint("size mismatch (truncated or padded)");

    std::string header = buf.substr(0, kHeaderSize - 8);
    header.append(8, '\0');  // checksum field zeroed, as when it was computed
    if (fnv1a(header, buf.substr(kHeaderSize)) != stored_checksum) {
        throw CorruptCheckpoint("checksum mismatch");
    }
    if (series_cutoff != std::uint32_t(cfg.series_cutoff) ||
        correction_order != std::uint32_t(cfg.correction_order) ||
        target != cfg.target_abs_error || pole_radius != cfg.pole_exclusion_radius) {
        throw CorruptCheckpoint("evaluation config does not match the checkpoint");
    }

    st.values.assign(st.grid.node_count(), kMaskedNode);
    Reader pr{buf};
    pr.pos = kHeaderSize;
    for (std::uint64_t k = 0; k < std::uint64_t(st.rows_completed) * st.grid.n_re; ++k) {
        st.values[k] = pr.f64();
    }
    return st;
}

// ---- scanning ---------------------------------------------------------------

ScanResult finish_scan(const StripGrid& grid, std::vector<double>&& values,
                       std::uint64_t evaluations) {
    ScanResult result;
    result.grid = grid;
    result.values = std::move(values);
    result.evaluations = evaluations;

    bool found = false;
    double best = 0.0, best_re = 0.0, best_im = 0.0;
    for (std::uint32_t j = 0; j < grid.n_im; ++j) {
        for (std::uint32_t i = 0; i < grid.n_re; ++i) {
            const double v = result.at(j, i);
            if (is_masked(v)) continue;
            const double re = grid.re_node(i);
            const double im = grid.im_node(j);
            const bool better =
                !found || v < best ||
                (v == best && (re < best_re || (re == best_re && im < best_im)));
            if (better) {
                found = true;
                best = v;
                best_re = re;
                best_im = im;
            }
        }
    }
    if (!found) throw std::invalid_argument("every grid node is masked");
    result.min_value = best;
    result.min_location = {best_re, best_im};
    return result;
}

ScanResult run_scan(const StripGrid& grid, const EvalConfig& cfg, const ScanOptions& opts,
                    std::vector<double>&& values, std::uint32_t start_row) {
    validate(grid);
    validate(cfg);
    const int workers = std::max(1, opts.workers);
    std::atomic<std::uint64_t> evaluations{0};

    auto scan_row = [&](std::uint64_t j_rel, std::uint32_t row_base) {
        const std::uint32_t j = row_base + std::uint32_t(j_rel);
        const double im = grid.im_node(j);
        double* row = values.data() + std::uint64_t(j) * grid.n_re;
        for (std::uint32_t i = 0; i < grid.n_re; ++i) {
            const Complex s(grid.re_node(i), im);
            if (std::abs(s - 1.0) <= cfg.pole_exclusion_radius) {
                row[i] = kMaskedNode;  // pole-adjacent: not evaluated
                continue;
            }
            const ZetaEval w = zeta_with_error(s, cfg);
            evaluations.fetch_add(1, std::memory_order_relaxed);
            row[i] = w.abs_error > cfg.target_abs_error
                         ? kMaskedNode  // evaluated but flagged
                         : std::abs(std::numbers::inv_pi - w.value);
        }
    };

    // Rows are processed in fixed blocks; a checkpoint flush after each block
    // covers the contiguous prefix. Block boundaries depend only on the
    // interval, never on the worker count, so checkpoint files are
    // byte-identical for any number of workers.
    const bool checkpointing = !opts.checkpoint_path.empty();
    const std::uint32_t block =
        checkpointing ? std::max<std::uint32_t>(1, opts.checkpoint_interval) : grid.n_im;

    std::uint32_t row = start_row;
    while (row < grid.n_im) {
        const std::uint32_t row_end = std::min<std::uint64_t>(grid.n_im, std::uint64_t(row) + block);
        parallel_for_index(row_end - row, workers,
                           [&](std::uint64_t j_rel) { scan_row(j_rel, row); });
        row = row_end;
        if (checkpointing) {
            write_checkpoint(opts.checkpoint_path, grid, cfg, values, row);
        }
        if (opts.stop_after_rows > 0 && row < grid.n_im && row >= opts.stop_after_rows) {
            throw ScanInterrupted();
        }
    }
    return finish_scan(grid, std::move(values), evaluations.load());
}

}  // namespace

double StripGrid::re_node(std::uint32_t i) const {
    return (re_min * (double(n_re) - double(i) - 0.5) + re_max * (double(i) + 0.5)) /
           double(n_re);
}

double StripGrid::im_node(std::uint32_t j) const {
    return (im_min * (double(n_im) - double(j) - 0.5) + im_max * (double(j) + 0.5)) /
           double(n_im);
}

void validate(const StripGrid& grid) {
    if (!(grid.re_min < grid.re_max) || !(grid.im_min < grid.im_max)) {
        throw std::invalid_argument("grid bounds must satisfy re_min < re_max and im_min < im_max");
    }
    if (grid.n_re == 0 || grid.n_im == 0) {
        throw std::invalid_argument("grid must have at least one node per axis");
    }
    if (!std::isfinite(grid.re_min) || !std::isfinite(grid.re_max) ||
        !std::isfinite(grid.im_min) || !std::isfinite(grid.im_max)) {
        throw std::invalid_argument("grid bounds must be finite");
    }
    if (grid.node_count() > 100'000'000) {
        throw std::invalid_argument("grid exceeds 100 million nodes");
    }
}

ScanResult scan_strip(const StripGrid& grid, const EvalConfig& cfg, const ScanOptions& opts) {
    validate(grid);
    std::vector<double> values(grid.node_count(), kMaskedNode);
    return run_scan(grid, cfg, opts, std::move(values), 0);
}

ScanResult resume_scan(const std::string& checkpoint_path, const EvalConfig& cfg,
                       const ScanOptions& opts) {
    validate(cfg);
    CheckpointState st = read_checkpoint(checkpoint_path, cfg);
    if (st.rows_completed == st.grid.n_im) {
        return finish_scan(st.grid, std::move(st.values), 0);
    }
    ScanOptions continued = opts;
    continued.checkpoint_path = checkpoint_path;
    return run_scan(st.grid, cfg, continued, std::move(st.values), st.rows_completed);
}

MinimumReport refine_minimum(Complex seed, const EvalConfig& cfg, const RefineOptions& opts) {
    validate(cfg);
    if (!(opts.edge_re > 0.0) || !(opts.edge_im > 0.0)) {
        throw std::invalid_argument("simplex edges must be positive");
    }
    if (opts.max_iterations < 1 || !(opts.diameter_tol > 0.0)) {
        throw std::invalid_argument("max_iterations >= 1 and diameter_tol > 0 required");
    }
    constexpr double kInf = std::numeric_limits<double>::infinity();

    auto objective = [&](Complex s) -> double {
        if (!opts.unrestricted && !(s.real() > opts.re_lo && s.real() < opts.re_hi)) {
            return kInf;
        }
        if (std::abs(s - 1.0) <= cfg.pole_exclusion_radius) return kInf;
        const ZetaEval w = zeta_with_error(s, cfg);
        if (w.abs_error > cfg.target_abs_error) return kInf;
        return std::abs(std::numbers::inv_pi - w.value);
    };

    // Nelder-Mead, standard coefficients: reflection 1, expansion 2,
    // contraction 0.5, shrink 0.5.
    Complex p[3] = {seed, seed + Complex(opts.edge_re, 0.0), seed + Complex(0.0, opts.edge_im)};
    double f[3] = {objective(p[0]), objective(p[1]), objective(p[2])};

    auto order = [&] {
        // Insertion sort; stable so exact ties cannot flip vertices around.
        for (int i = 1; i < 3; ++i) {
            Complex pv = p[i];
            double fv = f[i];
            int k = i;
            while (k > 0 && f[k - 1] > fv) {
                p[k] = p[k - 1];
                f[k] = f[k - 1];
                --k;
            }
            p[k] = pv;
            f[k] = fv;
        }
    };
    auto diameter = [&] {
        return std::max({std::abs(p[0] - p[1]), std::abs(p[0] - p[2]), std::abs(p[1] - p[2])});
    };

    order();
    int iter = 0;
    bool converged = false;
    while (iter < opts.max_iterations) {
        if (diameter() < opts.diameter_tol) {
            converged = true;
            break;
        }
        ++iter;
        const Complex centroid = 0.5 * (p[0] + p[1]);
        const Complex reflected = centroid + (centroid - p[2]);
        const double fr = objective(reflected);
        if (fr < f[0]) {
            const Complex expanded = centroid + 2.0 * (centroid - p[2]);
            const double fe = objective(expanded);
            if (fe < fr) {
                p[2] = expanded;
                f[2] = fe;
            } else {
                p[2] = reflected;
                f[2] = fr;
            }
        } else if (fr < f[1]) {
            p[2] = reflected;
            f[2] = fr;
        } else {
            const bool outside = fr < f[2];
            const Complex base = outside ? reflected : p[2];
            const Complex contracted = centroid + 0.5 * (base - centroid);
            const double fc = objective(contracted);
            if (fc < (outside ? fr : f[2])) {
                p[2] = contracted;
                f[2] = fc;
            } else {
                for (int i = 1; i < 3; ++i) {  // shrink toward the best vertex
                    p[i] = p[0] + 0.5 * (p[i] - p[0]);
                    f[i] = objective(p[i]);
                }
            }
        }
        order();
    }

    MinimumReport report;
    report.seed = seed;
    report.argmin = p[0];
    report.value = f[0];
    report.iterations = iter;
    report.converged = converged;
    return report;
}

std::vector<std::uint64_t> lowest_nodes(const ScanResult& scan, int k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    struct Node {
        double value;
        std::uint32_t j, i;
    };
    std::vector<Node> nodes;
    nodes.reserve(scan.values.size());
    for (std::uint32_t j = 0; j < scan.grid.n_im; ++j) {
        for (std::uint32_t i = 0; i < scan.grid.n_re; ++i) {
            const double v = scan.at(j, i);
            if (!is_masked(v)) nodes.push_back({v, j, i});
        }
    }
    std::sort(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) {
        if (a.value != b.value) return a.value < b.value;
        if (a.j != b.j) return a.j < b.j;
        return a.i < b.i;
    });

    std::vector<Node> picked;
    std::vector<std::uint64_t> out;
    for (const Node& n : nodes) {
        if (int(out.size()) == k) break;
        bool adjacent = false;
        for (const Node& q : picked) {
            const std::uint32_t dj = n.j > q.j ? n.j - q.j : q.j - n.j;
            const std::uint32_t di = n.i > q.i ? n.i - q.i : q.i - n.i;
            if (dj <= 1 && di <= 1) {
                adjacent = true;
                break;
            }
        }
        if (adjacent) continue;
        picked.push_back(n);
        out.push_back(std::uint64_t(n.j) * scan.grid.n_re + n.i);
    }
    return out;
}

}  // namespace zetascan
