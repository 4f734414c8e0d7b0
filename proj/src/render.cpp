#include "storyline/render.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>

namespace storyline {

namespace {

constexpr std::array<const char*, 10> kPalette = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
};

std::string fmt(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.10g", value);
    return buf;
}

std::string escape_xml(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string render_svg(const Storyline& s, const WiringDiagram& d, const RenderConfig& cfg) {
    if (!(cfg.delta_sep > cfg.delta_group && cfg.delta_group > 0)) {
        throw ValidationError("render config requires delta_sep > delta_group > 0");
    }
    const VerifyResult check = verify_solution(s, d);
    if (!check.valid && !cfg.force) {
        throw ValidationError("refusing to render an invalid diagram (" +
                              std::to_string(check.violations.size()) + " contiguity violations)");
    }

    const int k = s.character_count();
    const int columns = static_cast<int>(d.times.size());

    // Per column, y by prefix-summing gaps; groups get delta_group.
    std::vector<std::vector<double>> ys(columns, std::vector<double>(k, 0.0));
    double max_y = 0;
    for (int c = 0; c < columns; ++c) {
        const auto& order = d.orders[c];
        double y = cfg.margin;
        ys[c][order[0]] = y;
        for (int r = 1; r < k; ++r) {
            const int above = order[r - 1];
            const int below = order[r];
            bool grouped = false;
            for (const auto& ev : s.events()) {
                if (!ev.active_at(d.times[c])) continue;
                const bool has_above = std::binary_search(ev.members.begin(), ev.members.end(), above);
                const bool has_below = std::binary_search(ev.members.begin(), ev.members.end(), below);
                if (has_above && has_below) {
                    grouped = true;
                    break;
                }
            }
            y += grouped ? cfg.delta_group : cfg.delta_sep;
            ys[c][below] = y;
        }
        max_y = std::max(max_y, y);
    }

    const double width = 2 * cfg.margin + (columns - 1) * cfg.column_width;
    const double height = max_y + cfg.margin;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(width)
        << "\" height=\"" << fmt(height) << "\">\n";
    for (int ch = 0; ch < k; ++ch) {
        const std::string color = ch < static_cast<int>(cfg.colors.size())
                                      ? cfg.colors[ch]
                                      : kPalette[ch % kPalette.size()];
        out << "  <polyline id=\"" << escape_xml(s.characters()[ch]) << "\" fill=\"none\" stroke=\""
            << escape_xml(color) << "\" stroke-width=\"" << fmt(cfg.stroke_width) << "\" points=\"";
        for (int c = 0; c < columns; ++c) {
            if (c > 0) out << ' ';
            out << fmt(cfg.margin + c * cfg.column_width) << ',' << fmt(ys[c][ch]);
        }
        out << "\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace storyline
