#include "besovclaw/report_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "besovclaw/version.hpp"

namespace besovclaw {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    static const char* hex = "0123456789abcdef";
    for (int i = 15; i >= 0; --i) {
        buf[i] = hex[h & 0xf];
        h >>= 4;
    }
    buf[16] = '\0';
    return std::string(buf, 16);
}

std::string file_checksum(const std::string& path) { return fnv1a_hex(read_text_file(path)); }

std::string verdicts_to_csv(const std::vector<TheoremVerdict>& verdicts) {
    std::ostringstream os;
    os << "tag,direction,h,lhs,rhs,margin,pass,erratum_flag\n";
    for (const auto& v : verdicts)
        os << v.tag << ',' << direction_name(v.direction) << ',' << format_double(v.h) << ','
           << format_double(v.lhs) << ',' << format_double(v.rhs) << ','
           << format_double(v.margin) << ',' << (v.pass ? 1 : 0) << ','
           << (v.erratum_adjusted ? 1 : 0) << '\n';
    return os.str();
}

std::string besov_report_to_csv(const std::vector<BesovReport>& reports) {
    std::ostringstream os;
    os << "direction,p,h,value,slope,flag\n";
    for (const auto& r : reports)
        for (const auto& [h, value] : r.points)
            os << direction_name(r.direction) << ',' << format_double(r.p) << ','
               << format_double(h) << ',' << format_double(value) << ','
               << format_double(r.slope) << ',' << (r.membership_consistent ? 1 : 0) << '\n';
    return os.str();
}

std::string identity_reports_to_csv(
    const std::vector<std::pair<std::pair<int, int>, IdentityReport>>& rows) {
    std::ostringstream os;
    os << "identity,nt,nx,lhs,rhs,residual\n";
    for (const auto& [dims, r] : rows)
        os << r.identity << ',' << dims.first << ',' << dims.second << ','
           << format_double(r.lhs) << ',' << format_double(r.rhs) << ','
           << format_double(r.residual) << '\n';
    return os.str();
}

std::string ledger_to_json(const ConstantLedger& ledger) {
    nlohmann::ordered_json j;
    j["schema_version"] = kSchemaVersion;
    nlohmann::ordered_json entries = nlohmann::ordered_json::object();
    for (const auto& [name, value] : ledger.entries()) entries[name] = value;
    j["constants"] = entries;
    return j.dump(2);
}

namespace {

struct PlotFrame {
    static constexpr double width = 640.0, height = 480.0;
    static constexpr double ml = 70.0, mr = 20.0, mt = 40.0, mb = 50.0;
    double lxmin = 0.0, lxmax = 1.0, lymin = 0.0, lymax = 1.0;

    double px(double lx) const {
        return ml + (lx - lxmin) / (lxmax - lxmin) * (width - ml - mr);
    }
    double py(double ly) const {
        return height - mb - (ly - lymin) / (lymax - lymin) * (height - mt - mb);
    }
};

std::string fmt_coord(double v) {
    // Two decimals are enough for pixel coordinates and keep files tiny.
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

}  // namespace

std::string render_loglog_svg(const std::string& title, const std::vector<SvgSeries>& series) {
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 640 480\" "
          "width=\"640\" height=\"480\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"640\" height=\"480\" fill=\"white\"/>\n";
    os << "<text x=\"320\" y=\"24\" text-anchor=\"middle\" font-family=\"monospace\" "
          "font-size=\"14\">" << title << "</text>\n";

    bool any = false;
    PlotFrame f;
    f.lxmin = f.lymin = 1e300;
    f.lxmax = f.lymax = -1e300;
    for (const auto& s : series)
        for (const auto& [h, v] : s.points)
            if (h > 0.0 && v > 0.0) {
                any = true;
                f.lxmin = std::min(f.lxmin, std::log10(h));
                f.lxmax = std::max(f.lxmax, std::log10(h));
                f.lymin = std::min(f.lymin, std::log10(v));
                f.lymax = std::max(f.lymax, std::log10(v));
            }
    if (!any) {
        os << "<text x=\"320\" y=\"240\" text-anchor=\"middle\" font-family=\"monospace\" "
              "font-size=\"16\">no data</text>\n</svg>\n";
        return os.str();
    }
    if (f.lxmax - f.lxmin < 1e-9) { f.lxmin -= 0.5; f.lxmax += 0.5; }
    if (f.lymax - f.lymin < 1e-9) { f.lymin -= 0.5; f.lymax += 0.5; }
    const double padx = 0.05 * (f.lxmax - f.lxmin), pady = 0.08 * (f.lymax - f.lymin);
    f.lxmin -= padx; f.lxmax += padx; f.lymin -= pady; f.lymax += pady;

    os << "<rect x=\"" << fmt_coord(PlotFrame::ml) << "\" y=\"" << fmt_coord(PlotFrame::mt)
       << "\" width=\"" << fmt_coord(PlotFrame::width - PlotFrame::ml - PlotFrame::mr)
       << "\" height=\"" << fmt_coord(PlotFrame::height - PlotFrame::mt - PlotFrame::mb)
       << "\" fill=\"none\" stroke=\"black\"/>\n";
    os << "<text x=\"320\" y=\"470\" text-anchor=\"middle\" font-family=\"monospace\" "
          "font-size=\"12\">log10 h</text>\n";
    os << "<text x=\"16\" y=\"240\" text-anchor=\"middle\" font-family=\"monospace\" "
          "font-size=\"12\" transform=\"rotate(-90 16 240)\">log10 value</text>\n";

    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};
    int ci = 0;
    double legend_y = PlotFrame::mt + 16.0;
    for (const auto& s : series) {
        const char* color = colors[ci % 5];
        ++ci;
        for (const auto& [h, v] : s.points) {
            if (!(h > 0.0 && v > 0.0)) continue;
            os << "<circle cx=\"" << fmt_coord(f.px(std::log10(h))) << "\" cy=\""
               << fmt_coord(f.py(std::log10(v))) << "\" r=\"3\" fill=\"" << color << "\"/>\n";
        }
        if (s.draw_fit) {
            // Fit computed in natural logs; convert to log10 for plotting.
            const double y0 = (s.intercept + s.slope * (f.lxmin * std::numbers::ln10)) /
                              std::numbers::ln10;
            const double y1 = (s.intercept + s.slope * (f.lxmax * std::numbers::ln10)) /
                              std::numbers::ln10;
            os << "<line x1=\"" << fmt_coord(f.px(f.lxmin)) << "\" y1=\""
               << fmt_coord(f.py(y0)) << "\" x2=\"" << fmt_coord(f.px(f.lxmax)) << "\" y2=\""
               << fmt_coord(f.py(y1)) << "\" stroke=\"" << color
               << "\" stroke-dasharray=\"4 3\"/>\n";
        }
        os << "<text x=\"" << fmt_coord(PlotFrame::ml + 10.0) << "\" y=\""
           << fmt_coord(legend_y) << "\" font-family=\"monospace\" font-size=\"12\" fill=\""
           << color << "\">" << s.label;
        if (s.draw_fit) {
            char sl[48];
            std::snprintf(sl, sizeof(sl), " slope=%.3f", s.slope);
            os << sl;
        }
        os << "</text>\n";
        legend_y += 16.0;
    }
    os << "</svg>\n";
    return os.str();
}

std::string manifest_to_json(const std::string& config_echo,
                             const std::vector<ManifestEntry>& files) {
    nlohmann::ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["toolkit_version"] = kVersion;
    j["config"] = config_echo;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& f : files) arr.push_back({{"name", f.name}, {"fnv1a64", f.checksum}});
    j["files"] = arr;
    return j.dump(2);
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

}  // namespace besovclaw
