#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "zetascan/zeta.hpp"

namespace zetascan {

// Rectangular evaluation grid. Nodes sit at cell centers, computed in the
// symmetric lerp form
//     node(j) = (lo * (n - j - 0.5) + hi * (j + 0.5)) / n
// so every node lies strictly inside (lo, hi) -- a 0:1 scan never touches
// the strip boundary or the pole line -- and a grid mirrored about zero
// produces bitwise-negated node ordinates, which keeps the Im-mirror
// symmetry of the landscape exact.
struct StripGrid {
    double re_min = 0.0;
    double re_max = 1.0;
    double im_min = 0.0;
    double im_max = 80.0;
    std::uint32_t n_re = 0;
    std::uint32_t n_im = 0;

    double re_node(std::uint32_t i) const;
    double im_node(std::uint32_t j) const;
    std::uint64_t node_count() const { return std::uint64_t(n_re) * n_im; }
};

// Throws std::invalid_argument unless re_min < re_max, im_min < im_max,
// both counts are at least 1, and node_count() stays within 100 million
// (the values matrix is held in memory).
void validate(const StripGrid& grid);

// Sentinel stored for nodes that were not evaluated (inside the pole
// exclusion disc) or whose error estimate exceeded the target. The
// landscape value is a modulus, so a negative number cannot collide with
// real data; masked nodes are never serialized as 0.
inline constexpr double kMaskedNode = -1.0;
inline bool is_masked(double v) { return v < 0.0; }

struct ScanResult {
    StripGrid grid;
    // n_im rows of n_re columns, row-major, kMaskedNode where masked.
    std::vector<double> values;
    Complex min_location;  // node with the smallest unmasked value
    double min_value = 0.0;
    std::uint64_t evaluations = 0;  // zeta evaluations performed by this call

    double at(std::uint32_t j_im, std::uint32_t i_re) const {
        return values[std::uint64_t(j_im) * grid.n_re + i_re];
    }
    Complex node_location(std::uint64_t flat) const {
        return {grid.re_node(std::uint32_t(flat % grid.n_re)),
                grid.im_node(std::uint32_t(flat / grid.n_re))};
    }
};

struct ScanOptions {
    int workers = 1;
    std::string checkpoint_path;            // empty: no checkpointing
    std::uint32_t checkpoint_interval = 16; // rows between checkpoint flushes
    // Test hook emulating a killed process: abort (ScanInterrupted) once this
    // many rows are complete and checkpointed. 0 disables.
    std::uint32_t stop_after_rows = 0;
};

// Raised only by the stop_after_rows hook, after the checkpoint flush.
struct ScanInterrupted : std::runtime_error {
    ScanInterrupted() : std::runtime_error("scan interrupted by stop_after_rows") {}
};

// Evaluates |1/pi - zeta| on every grid node. Row-partitioned across
// opts.workers threads; per-node results do not depend on the partitioning,
// so the output is identical for any worker count. Pole-adjacent nodes are
// masked without evaluation; nodes whose error estimate exceeds the target
// are evaluated, counted, and masked. Ties for the minimum break toward
// smaller Re, then smaller Im.
ScanResult scan_strip(const StripGrid& grid, const EvalConfig& cfg = {},
                      const ScanOptions& opts = {});

// Continues an interrupted scan from its checkpoint. The stored grid and
// evaluation config must match cfg (mismatch reports CorruptCheckpoint, as
// do bad magic/version/size/checksum); the finished result is bit-identical
// to an uninterrupted run. A checkpoint that is already complete returns
// immediately with zero evaluations.
ScanResult resume_scan(const std::string& checkpoint_path, const EvalConfig& cfg = {},
                       const ScanOptions& opts = {});

struct MinimumReport {
    Complex seed;
    Complex argmin;
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
};

struct RefineOptions {
    double edge_re = 1e-3;  // initial simplex extents
    double edge_im = 1e-3;
    bool unrestricted = false;  // false: reject Re outside (re_lo, re_hi)
    double re_lo = 0.0;
    double re_hi = 1.0;
    int max_iterations = 10000;
    double diameter_tol = 1e-10;
};

// Nelder-Mead descent on critical_gap from seed: reflection 1, expansion 2,
// contraction 0.5, shrink 0.5; converged when the simplex diameter falls
// under diameter_tol. Points inside the pole disc, outside the allowed Re
// band (restricted mode), or with failing error estimates evaluate as +inf.
// Non-convergence is not an error: the report carries converged = false and
// the best point seen, which is never worse than the seed.
MinimumReport refine_minimum(Complex seed, const EvalConfig& cfg = {},
                             const RefineOptions& opts = {});

// Flat indices of the k smallest unmasked nodes that are pairwise
// non-adjacent (no two within Chebyshev distance 1 in grid indices),
// ascending by value. Fewer than k may exist.
std::vector<std::uint64_t> lowest_nodes(const ScanResult& scan, int k);

}  // namespace zetascan
