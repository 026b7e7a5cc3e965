#include "ccc/svg.hpp"

#include <algorithm>
#include <array>
#include <cstdio>

#include "ccc/error.hpp"

namespace ccc {

namespace {

constexpr double kWidth = 640, kHeight = 520;
constexpr double kLeft = 60, kTop = 40, kPlot = 420;

constexpr std::array<const char*, 8> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                                 "#8c564b", "#e377c2", "#17becf", "#7f7f7f"};
constexpr const char* kSquareColor = "#e6a700";

double px(double x) { return kLeft + std::clamp(x, 0.0, 1.0) * kPlot; }
double py(double y) { return kTop + (1.0 - std::clamp(y, 0.0, 1.0)) * kPlot; }

std::string coord(double x, double y) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.2f,%.2f", px(x), py(y));
    return buf;
}

std::string escape(const std::string& text) {
    std::string out;
    for (char ch : text) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

std::vector<std::size_t> sample_indices(std::size_t m, std::size_t cap) {
    std::vector<std::size_t> idx;
    if (m <= cap || cap < 2) {
        idx.resize(m);
        for (std::size_t i = 0; i < m; ++i) idx[i] = i;
        return idx;
    }
    idx.reserve(cap);
    for (std::size_t i = 0; i < cap; ++i) idx.push_back(i * (m - 1) / (cap - 1));
    return idx;
}

// Curves are 0 at x = 0; prepending the origin closes the line to the corner.
std::string polyline_points(const std::vector<double>& x, const std::vector<double>& y,
                            const std::vector<std::size_t>& idx) {
    std::string pts;
    if (!idx.empty() && x[idx.front()] > 0.0) pts = coord(0.0, 0.0);
    for (std::size_t i : idx) {
        if (!pts.empty()) pts += ' ';
        pts += coord(x[i], y[i]);
    }
    return pts;
}

}  // namespace

std::string emit_svg(const PlotSpec& spec) {
    if (spec.series.empty()) throw InputError("nothing to plot: no curves given");
    for (const auto& s : spec.series) {
        if (s.x.empty() || s.x.size() != s.y.size()) throw InputError("curve '" + s.label + "' is empty or ragged");
        if (!s.band.empty() && s.band.size() != s.y.size()) {
            throw InputError("curve '" + s.label + "' has a band of the wrong length");
        }
    }

    std::string svg;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" "
                  "viewBox=\"0 0 %.0f %.0f\" font-family=\"sans-serif\" font-size=\"12\">\n",
                  kWidth, kHeight, kWidth, kHeight);
    svg += buf;
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!spec.title.empty()) {
        std::snprintf(buf, sizeof buf, "<text x=\"%.1f\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">",
                      kLeft + kPlot / 2);
        svg += buf + escape(spec.title) + "</text>\n";
    }

    // Axes, ticks and grid.
    svg += "<g class=\"axes\" stroke=\"#000\" fill=\"none\">\n";
    std::snprintf(buf, sizeof buf, "<rect x=\"%.1f\" y=\"%.1f\" width=\"%.1f\" height=\"%.1f\"/>\n", kLeft, kTop,
                  kPlot, kPlot);
    svg += buf;
    svg += "</g>\n<g class=\"ticks\">\n";
    for (int t = 0; t <= 10; t += 2) {
        const double v = t / 10.0;
        std::snprintf(buf, sizeof buf,
                      "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"#ddd\"/>"
                      "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"#ddd\"/>\n",
                      px(v), kTop, px(v), kTop + kPlot, kLeft, py(v), kLeft + kPlot, py(v));
        svg += buf;
        std::snprintf(buf, sizeof buf,
                      "<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"middle\">%.1f</text>"
                      "<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"end\">%.1f</text>\n",
                      px(v), kTop + kPlot + 16, v, kLeft - 6, py(v) + 4, v);
        svg += buf;
    }
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"middle\">top share x</text>\n"
                  "<text x=\"16\" y=\"%.1f\" text-anchor=\"middle\" transform=\"rotate(-90 16 %.1f)\">CCC(x)</text>\n",
                  kLeft + kPlot / 2, kTop + kPlot + 34, kTop + kPlot / 2, kTop + kPlot / 2);
    svg += buf;
    svg += "</g>\n";

    struct LegendEntry {
        std::string label;
        std::string color;
        std::string dash;
    };
    std::vector<LegendEntry> legend;

    if (spec.identity) {
        svg += "<polyline class=\"reference identity\" fill=\"none\" stroke=\"#444\" stroke-width=\"1\" "
               "stroke-dasharray=\"6,4\" points=\"" +
               coord(0, 0) + ' ' + coord(1, 1) + "\"/>\n";
        legend.push_back({"identity x", "#444", "6,4"});
    }
    if (spec.square) {
        std::string pts;
        for (int i = 0; i <= 100; ++i) {
            const double x = i / 100.0;
            if (i) pts += ' ';
            pts += coord(x, x * x);
        }
        svg += std::string("<polyline class=\"reference square\" fill=\"none\" stroke=\"") + kSquareColor +
               "\" stroke-width=\"1.2\" points=\"" + pts + "\"/>\n";
        legend.push_back({"independent x²", kSquareColor, ""});
    }
    if (spec.opposed) {
        svg += "<polyline class=\"reference opposed\" fill=\"none\" stroke=\"#444\" stroke-width=\"1\" "
               "stroke-dasharray=\"1.5,3\" points=\"" +
               coord(0, 0) + ' ' + coord(0.5, 0) + ' ' + coord(1, 1) + "\"/>\n";
        legend.push_back({"opposed max(0, 2x-1)", "#444", "1.5,3"});
    }

    for (std::size_t c = 0; c < spec.series.size(); ++c) {
        const PlotSeries& s = spec.series[c];
        const std::string color = kPalette[c % kPalette.size()];
        const auto idx = sample_indices(s.x.size(), spec.max_points);
        if (!s.band.empty()) {
            std::string pts;
            for (std::size_t i : idx) {
                if (!pts.empty()) pts += ' ';
                pts += coord(s.x[i], s.y[i] + s.band[i]);
            }
            for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
                pts += ' ' + coord(s.x[*it], s.y[*it] - s.band[*it]);
            }
            svg += "<polygon class=\"band\" fill=\"" + color + "\" fill-opacity=\"0.2\" stroke=\"none\" points=\"" +
                   pts + "\"/>\n";
        }
        svg += "<polyline class=\"curve\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"1.8\" points=\"" +
               polyline_points(s.x, s.y, idx) + "\"/>\n";
        legend.push_back({s.label.empty() ? "curve " + std::to_string(c + 1) : s.label, color, ""});
    }

    svg += "<g class=\"legend\">\n";
    for (std::size_t i = 0; i < legend.size(); ++i) {
        const double y = kTop + 12 + 18.0 * static_cast<double>(i);
        const double x = kLeft + 12;
        std::snprintf(buf, sizeof buf, "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"", x, y,
                      x + 24, y);
        svg += buf + legend[i].color + "\" stroke-width=\"2\"";
        if (!legend[i].dash.empty()) svg += " stroke-dasharray=\"" + legend[i].dash + "\"";
        std::snprintf(buf, sizeof buf, "/><text x=\"%.1f\" y=\"%.1f\">", x + 30, y + 4);
        svg += buf + escape(legend[i].label) + "</text>\n";
    }
    svg += "</g>\n</svg>\n";
    return svg;
}

}  // namespace ccc
