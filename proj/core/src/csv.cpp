#include "ccc/csv.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>

#include "ccc/error.hpp"

namespace ccc {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (;;) {
        const auto comma = line.find(',', start);
        fields.push_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return fields;
}

}  // namespace

std::string format_g17(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

void write_scores_csv(const ScoreVector& scores, std::span<const OriginalId> labels, std::ostream& out) {
    if (labels.size() != scores.size()) throw InputError("label count does not match score count");
    out << "vertex,score\n";
    for (std::size_t v = 0; v < scores.size(); ++v) {
        out << labels[v] << ',' << format_g17(scores.scores[v]) << '\n';
    }
}

void write_curve_csv(const CccCurve& curve, std::ostream& out) {
    out << "x,ccc\n";
    const double n = static_cast<double>(curve.n);
    for (std::size_t k = 1; k <= curve.n; ++k) {
        out << format_g17(static_cast<double>(k) / n) << ',' << format_g17(curve.values[k - 1]) << '\n';
    }
}

void write_summary_csv(const EnsembleSummary& summary, std::ostream& out) {
    out << "x,mean,std\n";
    const double n = static_cast<double>(summary.n);
    for (std::size_t k = 1; k <= summary.n; ++k) {
        out << format_g17(static_cast<double>(k) / n) << ',' << format_g17(summary.mean[k - 1]) << ','
            << format_g17(summary.std[k - 1]) << '\n';
    }
}

CurveTable read_curve_csv(std::istream& in) {
    CurveTable table;
    std::string line;
    std::size_t line_no = 0;
    std::size_t columns = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view view = trim(line);
        if (view.empty()) continue;
        const auto fields = split(view);
        if (columns == 0) {
            if (fields.size() == 2 && fields[0] == "x" && fields[1] == "ccc") {
                columns = 2;
            } else if (fields.size() == 3 && fields[0] == "x" && fields[1] == "mean" && fields[2] == "std") {
                columns = 3;
            } else {
                throw ParseError(line_no, "expected header 'x,ccc' or 'x,mean,std'");
            }
            continue;
        }
        if (fields.size() != columns) {
            throw ParseError(line_no, "expected " + std::to_string(columns) + " fields");
        }
        double values[3] = {};
        for (std::size_t i = 0; i < columns; ++i) {
            auto [ptr, ec] = std::from_chars(fields[i].data(), fields[i].data() + fields[i].size(), values[i]);
            if (ec != std::errc() || ptr != fields[i].data() + fields[i].size()) {
                throw ParseError(line_no, "not a number: '" + std::string(fields[i]) + "'");
            }
        }
        table.x.push_back(values[0]);
        table.y.push_back(values[1]);
        if (columns == 3) table.band.push_back(values[2]);
    }
    if (columns == 0) throw ParseError(line_no, "empty curve file");
    return table;
}

}  // namespace ccc
