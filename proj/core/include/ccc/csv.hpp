#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ccc/curve.hpp"
#include "ccc/ensemble.hpp"
#include "ccc/graph.hpp"
#include "ccc/measure.hpp"

namespace ccc {

/// %.17g: enough digits to round-trip any double.
std::string format_g17(double value);

/// "vertex,score" with the given vertex labels (normally original ids).
void write_scores_csv(const ScoreVector& scores, std::span<const OriginalId> labels, std::ostream& out);

/// "x,ccc": one row per k = 1..n with x = k/n.
void write_curve_csv(const CccCurve& curve, std::ostream& out);

/// "x,mean,std" at full resolution.
void write_summary_csv(const EnsembleSummary& summary, std::ostream& out);

/// A curve read back from either CSV schema above. `band` is empty for a
/// plain curve and holds the std column for a summary.
struct CurveTable {
    std::vector<double> x;
    std::vector<double> y;
    std::vector<double> band;

    bool has_band() const noexcept { return !band.empty(); }
};

/// Accepts the "x,ccc" and "x,mean,std" schemas. Throws ParseError with a
/// line number on malformed rows or an unknown header.
CurveTable read_curve_csv(std::istream& in);

}  // namespace ccc
