#pragma once

#include <string>
#include <vector>

#include "zetascan/constraint.hpp"
#include "zetascan/scanner.hpp"
#include "zetascan/zero_finder.hpp"

namespace zetascan {

// One float field: 17 significant digits, %g form, '.' decimal point
// (locale-independent), round-trips exactly through strtod.
std::string fmt17(double v);

// Writes content to path atomically: a temp file in the same directory,
// flushed and closed, then renamed over the target. Readers never observe
// a partial file. The parent directory must exist.
void atomic_write_file(const std::string& path, const std::string& content);

// CSV serializations. '\n' line endings, header row first, floats via fmt17.
// scan: re,im,gap -- one row per unmasked node, row-major (im rows ascending,
//       re ascending within a row); masked nodes are skipped, never written
//       as 0.
// zeros: y,re_zeta,im_zeta,abs_zeta,kind,reflection_residual with kind one of
//       zeta_zero | component_only.
// constraints: y,re_f,im_f,abs_f,case,f_residual,implied_residual with case
//       one of A B C D.
// minimize: seed_re,seed_im,argmin_re,argmin_im,value,iterations,converged.
std::string scan_csv(const ScanResult& scan);
std::string zeros_csv(const std::vector<ZeroRecord>& records);
std::string constraints_csv(const std::vector<CasePoint>& points);
std::string minimize_csv(const std::vector<MinimumReport>& reports);

}  // namespace zetascan
