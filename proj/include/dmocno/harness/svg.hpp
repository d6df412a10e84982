#ifndef DMOCNO_HARNESS_SVG_HPP
#define DMOCNO_HARNESS_SVG_HPP

#include <array>
#include <string>
#include <vector>

namespace dmocno::harness {

struct ScatterPanel {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<std::array<double, 2>> points;
    std::string note; // printed under the title
};

/// Panels side by side, each with axes covering [0, 1] (widened to fit the data).
[[nodiscard]] auto scatter_svg(const std::vector<ScatterPanel>& panels) -> std::string;

struct BarSeries {
    std::string name;
    std::vector<double> values; // one per group
};

/// Grouped vertical bars with a legend; the value is printed above each bar.
[[nodiscard]] auto bar_chart_svg(const std::string& title, const std::vector<std::string>& groups,
                                 const std::vector<BarSeries>& series, const std::string& y_label) -> std::string;

/// Escapes &, <, > and quotes.
[[nodiscard]] auto xml_escape(const std::string& s) -> std::string;

} // namespace dmocno::harness

#endif
