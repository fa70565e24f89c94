#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "besovclaw/besov.hpp"
#include "besovclaw/interaction.hpp"
#include "besovclaw/verify.hpp"

namespace besovclaw {

// Shortest round-trip decimal for a double (std::to_chars).
std::string format_double(double v);

// FNV-1a 64-bit of a byte string, as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);
std::string file_checksum(const std::string& path);

// Verdict CSV: tag,direction,h,lhs,rhs,margin,pass,erratum_flag
std::string verdicts_to_csv(const std::vector<TheoremVerdict>& verdicts);

// Besov report CSV: direction,p,h,value,slope,flag
std::string besov_report_to_csv(const std::vector<BesovReport>& reports);

// Identity report CSV: identity,nt,nx,lhs,rhs,residual
std::string identity_reports_to_csv(
    const std::vector<std::pair<std::pair<int, int>, IdentityReport>>& rows);

std::string ledger_to_json(const ConstantLedger& ledger);

// Deterministic log-log SVG: seminorm points, fitted line, optional
// linear-in-h bound line, slope annotation. Fixed viewport, no timestamps.
struct SvgSeries {
    std::string label;
    std::vector<std::pair<double, double>> points;  // (h, value), positive
    double slope = 0.0;
    double intercept = 0.0;  // natural-log intercept of the fit
    bool draw_fit = false;
};
std::string render_loglog_svg(const std::string& title, const std::vector<SvgSeries>& series);

// Run manifest: config echo, toolkit version, per-file checksums.
struct ManifestEntry {
    std::string name;
    std::string checksum;
};
std::string manifest_to_json(const std::string& config_echo,
                             const std::vector<ManifestEntry>& files);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace besovclaw
