#pragma once

#include <string>
#include <vector>

namespace ccc {

/// One plotted curve. A non-empty `band` (same length as y) draws a shaded
/// region y ± band behind the line.
struct PlotSeries {
    std::vector<double> x;
    std::vector<double> y;
    std::vector<double> band;
    std::string label;
};

struct PlotSpec {
    std::vector<PlotSeries> series;
    bool identity = true;
    bool square = true;
    bool opposed = true;
    std::string title;
    std::size_t max_points = 2000;
};

/// Standalone SVG over the unit square. Series longer than max_points are
/// thinned to evenly spaced samples that keep both endpoints. Throws
/// InputError when there is nothing to plot or a series is malformed.
std::string emit_svg(const PlotSpec& spec);

}  // namespace ccc
