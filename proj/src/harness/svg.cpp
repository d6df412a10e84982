#include "dmocno/harness/svg.hpp"

#include <algorithm>
#include <cmath>

#include "dmocno/text.hpp"

namespace dmocno::harness {

namespace {

constexpr double kPanel = 360.0;
constexpr double kMargin = 56.0;
constexpr double kTitle = 44.0;

// Fixed two-decimal rendering keeps the output byte-stable.
auto num(double v) -> std::string
{
    return text::format_fixed(v, 2);
}

const std::array<const char*, 8> kPalette { "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                            "#9467bd", "#8c564b", "#e377c2", "#7f7f7f" };

} // namespace

auto xml_escape(const std::string& s) -> std::string
{
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&apos;"; break;
        default: out += c;
        }
    }
    return out;
}

auto scatter_svg(const std::vector<ScatterPanel>& panels) -> std::string
{
    const double cell = kPanel + 2 * kMargin;
    const double width = cell * static_cast<double>(std::max<std::size_t>(1, panels.size()));
    const double height = kTitle + kPanel + 2 * kMargin;
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" + num(height)
        + "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\" font-family=\"sans-serif\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (std::size_t p = 0; p < panels.size(); ++p) {
        const auto& panel = panels[p];
        double lo_x = 0.0;
        double hi_x = 1.0;
        double lo_y = 0.0;
        double hi_y = 1.0;
        for (const auto& pt : panel.points) {
            lo_x = std::min(lo_x, pt[0]);
            hi_x = std::max(hi_x, pt[0]);
            lo_y = std::min(lo_y, pt[1]);
            hi_y = std::max(hi_y, pt[1]);
        }
        const double pad_x = 0.04 * (hi_x - lo_x);
        const double pad_y = 0.04 * (hi_y - lo_y);
        lo_x -= pad_x;
        hi_x += pad_x;
        lo_y -= pad_y;
        hi_y += pad_y;
        const double ox = cell * static_cast<double>(p) + kMargin;
        const double oy = kTitle + kMargin;
        auto sx = [&](double v) { return ox + (v - lo_x) / (hi_x - lo_x) * kPanel; };
        auto sy = [&](double v) { return oy + kPanel - (v - lo_y) / (hi_y - lo_y) * kPanel; };

        out += "<g>\n";
        out += "<text x=\"" + num(ox + kPanel / 2) + "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">"
            + xml_escape(panel.title) + "</text>\n";
        if (!panel.note.empty()) {
            out += "<text x=\"" + num(ox + kPanel / 2) + "\" y=\"40\" text-anchor=\"middle\" font-size=\"11\" "
                   "fill=\"#555\">"
                + xml_escape(panel.note) + "</text>\n";
        }
        out += "<rect x=\"" + num(ox) + "\" y=\"" + num(oy) + "\" width=\"" + num(kPanel) + "\" height=\""
            + num(kPanel) + "\" fill=\"none\" stroke=\"black\"/>\n";
        for (int t = 0; t <= 4; ++t) {
            const double vx = lo_x + (hi_x - lo_x) * t / 4.0;
            const double vy = lo_y + (hi_y - lo_y) * t / 4.0;
            out += "<text x=\"" + num(sx(vx)) + "\" y=\"" + num(oy + kPanel + 16)
                + "\" text-anchor=\"middle\" font-size=\"10\">" + num(vx) + "</text>\n";
            out += "<text x=\"" + num(ox - 6) + "\" y=\"" + num(sy(vy) + 3)
                + "\" text-anchor=\"end\" font-size=\"10\">" + num(vy) + "</text>\n";
        }
        out += "<text x=\"" + num(ox + kPanel / 2) + "\" y=\"" + num(oy + kPanel + 36)
            + "\" text-anchor=\"middle\" font-size=\"13\">" + xml_escape(panel.x_label) + "</text>\n";
        out += "<text x=\"" + num(ox - 40) + "\" y=\"" + num(oy + kPanel / 2) + "\" text-anchor=\"middle\" "
               "font-size=\"13\" transform=\"rotate(-90 "
            + num(ox - 40) + " " + num(oy + kPanel / 2) + ")\">" + xml_escape(panel.y_label) + "</text>\n";
        const double radius = panel.points.size() > 2000 ? 1.2 : (panel.points.size() > 1 ? 2.0 : 4.0);
        for (const auto& pt : panel.points) {
            out += "<circle cx=\"" + num(sx(pt[0])) + "\" cy=\"" + num(sy(pt[1])) + "\" r=\"" + num(radius)
                + "\" fill=\"" + kPalette[p % kPalette.size()] + "\"/>\n";
        }
        out += "</g>\n";
    }
    out += "</svg>\n";
    return out;
}

auto bar_chart_svg(const std::string& title, const std::vector<std::string>& groups,
                   const std::vector<BarSeries>& series, const std::string& y_label) -> std::string
{
    const double bar = 26.0;
    const double gap = 24.0;
    const double group_width = bar * static_cast<double>(std::max<std::size_t>(1, series.size())) + gap;
    const double plot_w = std::max(300.0, group_width * static_cast<double>(groups.size()));
    const double plot_h = 300.0;
    const double legend_h = 18.0 * static_cast<double>(series.size()) + 10.0;
    const double width = plot_w + 2 * kMargin + 180.0;
    const double height = kTitle + plot_h + 2 * kMargin + std::max(0.0, legend_h - plot_h);
    double top = 0.0;
    for (const auto& s : series) {
        for (double v : s.values) {
            top = std::max(top, v);
        }
    }
    top = std::max(1.0, std::ceil(top));
    const double ox = kMargin;
    const double oy = kTitle + kMargin / 2;
    auto sy = [&](double v) { return oy + plot_h - v / top * plot_h; };

    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" + num(height)
        + "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\" font-family=\"sans-serif\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out += "<text x=\"" + num(ox + plot_w / 2) + "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">"
        + xml_escape(title) + "</text>\n";
    out += "<line x1=\"" + num(ox) + "\" y1=\"" + num(oy) + "\" x2=\"" + num(ox) + "\" y2=\"" + num(oy + plot_h)
        + "\" stroke=\"black\"/>\n";
    out += "<line x1=\"" + num(ox) + "\" y1=\"" + num(oy + plot_h) + "\" x2=\"" + num(ox + plot_w) + "\" y2=\""
        + num(oy + plot_h) + "\" stroke=\"black\"/>\n";
    const int ticks = static_cast<int>(top);
    for (int t = 0; t <= ticks; ++t) {
        out += "<text x=\"" + num(ox - 6) + "\" y=\"" + num(sy(t) + 3) + "\" text-anchor=\"end\" font-size=\"10\">"
            + std::to_string(t) + "</text>\n";
    }
    out += "<text x=\"" + num(ox - 34) + "\" y=\"" + num(oy + plot_h / 2) + "\" text-anchor=\"middle\" "
           "font-size=\"13\" transform=\"rotate(-90 "
        + num(ox - 34) + " " + num(oy + plot_h / 2) + ")\">" + xml_escape(y_label) + "</text>\n";
    for (std::size_t g = 0; g < groups.size(); ++g) {
        const double gx = ox + gap / 2 + group_width * static_cast<double>(g);
        for (std::size_t s = 0; s < series.size(); ++s) {
            const double v = g < series[s].values.size() ? series[s].values[g] : 0.0;
            const double x = gx + bar * static_cast<double>(s);
            out += "<rect x=\"" + num(x) + "\" y=\"" + num(sy(v)) + "\" width=\"" + num(bar - 2) + "\" height=\""
                + num(oy + plot_h - sy(v)) + "\" fill=\"" + kPalette[s % kPalette.size()] + "\"/>\n";
            out += "<text x=\"" + num(x + bar / 2 - 1) + "\" y=\"" + num(sy(v) - 3)
                + "\" text-anchor=\"middle\" font-size=\"9\">" + num(v) + "</text>\n";
        }
        out += "<text x=\"" + num(gx + bar * static_cast<double>(series.size()) / 2) + "\" y=\""
            + num(oy + plot_h + 16) + "\" text-anchor=\"middle\" font-size=\"12\">" + xml_escape(groups[g])
            + "</text>\n";
    }
    for (std::size_t s = 0; s < series.size(); ++s) {
        const double ly = oy + 18.0 * static_cast<double>(s);
        const double lx = ox + plot_w + 20;
        out += "<rect x=\"" + num(lx) + "\" y=\"" + num(ly) + "\" width=\"12\" height=\"12\" fill=\""
            + kPalette[s % kPalette.size()] + "\"/>\n";
        out += "<text x=\"" + num(lx + 18) + "\" y=\"" + num(ly + 10) + "\" font-size=\"12\">"
            + xml_escape(series[s].name) + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

} // namespace dmocno::harness
