#include "ccc/curve.hpp"

#include <algorithm>
#include <cmath>

#include "ccc/error.hpp"
#include "ccc/rng.hpp"

namespace ccc {

std::vector<std::uint32_t> top_k_overlaps(std::span<const VertexId> a, std::span<const VertexId> b) {
    if (a.size() != b.size()) throw InputError("orderings must have equal length");
    const std::size_t n = a.size();
    std::vector<char> in_a(n, 0), in_b(n, 0);
    std::vector<std::uint32_t> overlap(n);
    std::uint32_t common = 0;
    for (std::size_t k = 0; k < n; ++k) {
        const VertexId x = a[k];
        const VertexId y = b[k];
        if (x >= n || y >= n || in_a[x] || in_b[y]) throw InputError("orderings must be permutations");
        in_a[x] = 1;
        if (in_b[x]) ++common;
        in_b[y] = 1;
        if (in_a[y]) ++common;
        overlap[k] = common;
    }
    return overlap;
}

CccCurve ccc_scores(std::span<const double> r, std::span<const double> s, std::uint64_t seed,
                    TieRule rule) {
    if (r.size() != s.size()) {
        throw InputError("score vectors differ in length (" + std::to_string(r.size()) + " vs " +
                         std::to_string(s.size()) + ")");
    }
    const std::size_t n = r.size();
    const std::vector<double> u_rs = shared_uniforms(n, seed);
    const std::vector<double> u_sr = rule == TieRule::random_ties ? shared_uniforms(n, subseed(seed, 1)) : u_rs;

    const InducedOrder rs = induced_order_degenerate(r, s, u_rs, rule);
    const InducedOrder sr = induced_order_degenerate(s, r, u_sr, rule);
    const std::vector<std::uint32_t> overlap = top_k_overlaps(rs.permutation, sr.permutation);

    CccCurve curve;
    curve.n = n;
    curve.seed = seed;
    curve.rule = rule;
    curve.values.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        curve.values[k] = static_cast<double>(overlap[k]) / static_cast<double>(n);
    }
    return curve;
}

CccCurve ccc(const ScoreVector& r, const ScoreVector& s, std::uint64_t seed, TieRule rule) {
    if (r.graph_id != s.graph_id) {
        throw InputError("score vectors come from different graphs (" + r.graph_id + " vs " + s.graph_id + ")");
    }
    CccCurve curve = ccc_scores(r.scores, s.scores, seed, rule);
    curve.measure_a = r.measure;
    curve.measure_b = s.measure;
    curve.graph_id = r.graph_id;
    return curve;
}

std::size_t grid_index(double p, std::size_t n) {
    if (n == 0) throw InputError("curve is empty");
    if (!(p > 0.0 && p <= 1.0)) throw InputError("p must lie in (0, 1]");
    const double scaled = p * static_cast<double>(n);
    auto k = static_cast<std::size_t>(std::ceil(scaled - 1e-12 * scaled));
    return std::clamp<std::size_t>(k, 1, n);
}

double CccCurve::at(double x) const { return values[grid_index(x, n) - 1]; }

double ccco(const CccCurve& curve, double p) {
    const std::size_t k = grid_index(p, curve.n);
    return curve.values[k - 1] / (static_cast<double>(k) / static_cast<double>(curve.n));
}

std::vector<double> reference_curve(std::size_t n, Reference which) {
    std::vector<double> out(n);
    const double dn = static_cast<double>(n);
    for (std::size_t k = 1; k <= n; ++k) {
        const double x = static_cast<double>(k) / dn;
        switch (which) {
            case Reference::identity: out[k - 1] = x; break;
            case Reference::square: out[k - 1] = x * x; break;
            case Reference::opposed:
                out[k - 1] = 2 * k > n ? static_cast<double>(2 * k - n) / dn : 0.0;
                break;
        }
    }
    return out;
}

ReferenceCurves reference_curves(std::size_t n) {
    return {reference_curve(n, Reference::identity), reference_curve(n, Reference::square),
            reference_curve(n, Reference::opposed)};
}

double curve_distance(std::span<const double> values, Reference reference) {
    const std::vector<double> ref = reference_curve(values.size(), reference);
    double sup = 0.0;
    for (std::size_t k = 0; k < values.size(); ++k) sup = std::max(sup, std::abs(values[k] - ref[k]));
    return sup;
}

double curve_distance(const CccCurve& curve, Reference reference) {
    return curve_distance(curve.values, reference);
}

}  // namespace ccc
