#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ccc/measure.hpp"
#include "ccc/ordering.hpp"

namespace ccc {

/// Centrality comparison curve on the grid k/n, k = 1..n:
/// values[k-1] = |Top_k(R,S) ∩ Top_k(S,R)| / n.
struct CccCurve {
    std::size_t n = 0;
    std::vector<double> values;
    std::string measure_a;
    std::string measure_b;
    std::string graph_id;
    std::uint64_t seed = 0;
    TieRule rule = TieRule::hierarchical;

    /// Curve at arbitrary x in (0, 1]: values[ceil(x n) - 1].
    double at(double x) const;
};

/// Overlap counts |Top_k(a) ∩ Top_k(b)| for k = 1..n of two permutations of
/// the same vertex set, in one linear sweep.
std::vector<std::uint32_t> top_k_overlaps(std::span<const VertexId> a, std::span<const VertexId> b);

/// Curve from raw score arrays. Under the hierarchical rule both orderings
/// share shared_uniforms(n, seed); under random_ties each ordering draws its
/// own array (seed and subseed(seed, 1)); primary_only uses no uniforms.
CccCurve ccc_scores(std::span<const double> r, std::span<const double> s, std::uint64_t seed,
                    TieRule rule = TieRule::hierarchical);

/// Curve for two score vectors of the same graph. Throws InputError on a
/// length or graph mismatch.
CccCurve ccc(const ScoreVector& r, const ScoreVector& s, std::uint64_t seed,
             TieRule rule = TieRule::hierarchical);

/// k = ceil(p n) with a 1e-12 relative allowance for the representation
/// error of p (so 0.05 * 5000 is 250, not 251). Throws InputError unless
/// 0 < p <= 1 and n >= 1.
std::size_t grid_index(double p, std::size_t n);

/// CCCo(p) = CCC(p) / (k/n) with k = grid_index(p, n): the share of the top-k
/// cohort both measures agree on.
double ccco(const CccCurve& curve, double p);

enum class Reference { identity, square, opposed };

struct ReferenceCurves {
    std::vector<double> identity;  // k/n
    std::vector<double> square;    // (k/n)^2
    std::vector<double> opposed;   // max(0, (2k - n)/n)
};

ReferenceCurves reference_curves(std::size_t n);
std::vector<double> reference_curve(std::size_t n, Reference which);

/// max_k |values[k-1] - reference[k-1]|
double curve_distance(std::span<const double> values, Reference reference);
double curve_distance(const CccCurve& curve, Reference reference);

}  // namespace ccc
