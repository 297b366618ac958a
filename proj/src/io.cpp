#include "zetascan/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace zetascan {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    // snprintf honors the C locale's decimal point; normalize so the files
    // parse the same everywhere.
    for (char* p = buf; *p; ++p) {
        if (*p == ',') *p = '.';
    }
    return buf;
}

void atomic_write_file(const std::string& path, const std::string& content) {
    const std::filesystem::path target(path);
    const std::filesystem::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out.write(content.data(), std::streamsize(content.size()));
        out.flush();
        if (!out) throw std::runtime_error("short write to " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
}

std::string scan_csv(const ScanResult& scan) {
    std::string out = "re,im,gap\n";
    for (std::uint32_t j = 0; j < scan.grid.n_im; ++j) {
        for (std::uint32_t i = 0; i < scan.grid.n_re; ++i) {
            const double v = scan.at(j, i);
            if (is_masked(v)) continue;
            out += fmt17(scan.grid.re_node(i));
            out += ',';
            out += fmt17(scan.grid.im_node(j));
            out += ',';
            out += fmt17(v);
            out += '\n';
        }
    }
    return out;
}

std::string zeros_csv(const std::vector<ZeroRecord>& records) {
    std::string out = "y,re_zeta,im_zeta,abs_zeta,kind,reflection_residual\n";
    for (const ZeroRecord& rec : records) {
        out += fmt17(rec.y);
        out += ',';
        out += fmt17(rec.zeta_value.real());
        out += ',';
        out += fmt17(rec.zeta_value.imag());
        out += ',';
        out += fmt17(rec.zeta_residual);
        out += ',';
        out += rec.kind == ZeroKind::ZetaZero ? "zeta_zero" : "component_only";
        out += ',';
        out += fmt17(rec.reflection_residual);
        out += '\n';
    }
    return out;
}

std::string constraints_csv(const std::vector<CasePoint>& points) {
    std::string out = "y,re_f,im_f,abs_f,case,f_residual,implied_residual\n";
    for (const CasePoint& pt : points) {
        out += fmt17(pt.y);
        out += ',';
        out += fmt17(pt.f.real());
        out += ',';
        out += fmt17(pt.f.imag());
        out += ',';
        out += fmt17(std::abs(pt.f));
        out += ',';
        out += case_letter(pt.case_id);
        out += ',';
        out += fmt17(pt.f_residual);
        out += ',';
        out += fmt17(pt.implied_residual);
        out += '\n';
    }
    return out;
}

std::string minimize_csv(const std::vector<MinimumReport>& reports) {
    std::string out = "seed_re,seed_im,argmin_re,argmin_im,value,iterations,converged\n";
    for (const MinimumReport& rep : reports) {
        out += fmt17(rep.seed.real());
        out += ',';
        out += fmt17(rep.seed.imag());
        out += ',';
        out += fmt17(rep.argmin.real());
        out += ',';
        out += fmt17(rep.argmin.imag());
        out += ',';
        out += fmt17(rep.value);
        out += ',';
        out += std::to_string(rep.iterations);
        out += ',';
        out += rep.converged ? '1' : '0';
        out += '\n';
    }
    return out;
}

}  // namespace zetascan
