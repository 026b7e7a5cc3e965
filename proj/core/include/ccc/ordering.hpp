#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ccc/graph.hpp"
#include "ccc/measure.hpp"

namespace ccc {

/// One Uniform(0,1) value per vertex, drawn in vertex order from
/// Rng(seed) (std::mt19937_64 seeded with `seed`, 53-bit open-interval
/// conversion). Both orderings of a pair share the same array.
std::vector<double> shared_uniforms(std::size_t n, std::uint64_t seed);

enum class TieRule {
    hierarchical,  // primary, then secondary, then uniforms, then vertex id
    random_ties,   // primary, then uniforms (secondary ignored)
    primary_only,  // primary, then vertex id
};

/// A total order of the vertices, most central first.
struct InducedOrder {
    std::vector<VertexId> permutation;
    std::string key_spec;     // which measure was primary
    std::uint64_t seed = 0;   // seed of the uniform array used for ties
    std::string uniforms_id;  // "u<seed>/n<n>"

    std::size_t size() const noexcept { return permutation.size(); }
};

/// Sorts vertices by descending (primary, secondary, uniform); exact
/// duplicates of the whole key go to the lower vertex id first. Scores may be
/// any non-NaN reals. Throws InputError on length mismatch or NaN.
InducedOrder induced_order(std::span<const double> primary, std::span<const double> secondary,
                           std::span<const double> uniforms);

/// Order of two score vectors of one graph under `rule`, with the metadata
/// filled in: key_spec names r's measure, uniforms come from
/// shared_uniforms(n, seed). Throws InputError on a graph mismatch.
InducedOrder induced_order(const ScoreVector& r, const ScoreVector& s, std::uint64_t seed,
                           TieRule rule = TieRule::hierarchical);

/// The alternative tie rules, kept to show how they distort the curve.
/// hierarchical delegates to induced_order.
InducedOrder induced_order_degenerate(std::span<const double> primary,
                                      std::span<const double> secondary,
                                      std::span<const double> uniforms, TieRule rule);

/// CSV "rank,vertex" with 1-based ranks and the given vertex labels.
void write_order_csv(const InducedOrder& order, std::span<const OriginalId> labels, std::ostream& out);

}  // namespace ccc
