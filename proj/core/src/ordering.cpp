#include "ccc/ordering.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include "ccc/error.hpp"
#include "ccc/rng.hpp"

namespace ccc {

namespace {

void check_inputs(std::span<const double> primary, std::span<const double> secondary,
                  std::span<const double> uniforms) {
    if (primary.size() != secondary.size() || primary.size() != uniforms.size()) {
        throw InputError("score vectors and uniforms must have equal length (" +
                         std::to_string(primary.size()) + ", " + std::to_string(secondary.size()) +
                         ", " + std::to_string(uniforms.size()) + ")");
    }
    auto has_nan = [](std::span<const double> values) {
        return std::any_of(values.begin(), values.end(), [](double x) { return std::isnan(x); });
    };
    if (has_nan(primary) || has_nan(secondary) || has_nan(uniforms)) {
        throw InputError("scores must not contain NaN");
    }
}

// Sorts ids descending by the given key columns, ascending id last.
template <typename... Columns>
std::vector<VertexId> sort_descending(std::size_t n, Columns... columns) {
    std::vector<VertexId> perm(n);
    std::iota(perm.begin(), perm.end(), VertexId{0});
    std::sort(perm.begin(), perm.end(), [&](VertexId a, VertexId b) {
        bool decided = false;
        bool before = false;
        (
            [&](std::span<const double> col) {
                if (decided || col[a] == col[b]) return;
                decided = true;
                before = col[a] > col[b];
            }(columns),
            ...);
        return decided ? before : a < b;
    });
    return perm;
}

}  // namespace

std::vector<double> shared_uniforms(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> u(n);
    for (double& x : u) x = rng.uniform01();
    return u;
}

InducedOrder induced_order(std::span<const double> primary, std::span<const double> secondary,
                           std::span<const double> uniforms) {
    check_inputs(primary, secondary, uniforms);
    InducedOrder order;
    order.permutation = sort_descending(primary.size(), primary, secondary, uniforms);
    return order;
}

InducedOrder induced_order_degenerate(std::span<const double> primary,
                                      std::span<const double> secondary,
                                      std::span<const double> uniforms, TieRule rule) {
    check_inputs(primary, secondary, uniforms);
    InducedOrder order;
    switch (rule) {
        case TieRule::hierarchical: return induced_order(primary, secondary, uniforms);
        case TieRule::random_ties:
            order.permutation = sort_descending(primary.size(), primary, uniforms);
            break;
        case TieRule::primary_only:
            order.permutation = sort_descending(primary.size(), primary);
            break;
    }
    return order;
}

InducedOrder induced_order(const ScoreVector& r, const ScoreVector& s, std::uint64_t seed, TieRule rule) {
    if (r.graph_id != s.graph_id) throw InputError("score vectors come from different graphs");
    const std::vector<double> u = shared_uniforms(r.size(), seed);
    InducedOrder order = induced_order_degenerate(r.scores, s.scores, u, rule);
    order.key_spec = r.measure;
    order.seed = seed;
    order.uniforms_id = "u" + std::to_string(seed) + "/n" + std::to_string(r.size());
    return order;
}

void write_order_csv(const InducedOrder& order, std::span<const OriginalId> labels, std::ostream& out) {
    if (labels.size() != order.size()) throw InputError("label count does not match order length");
    out << "rank,vertex\n";
    for (std::size_t r = 0; r < order.size(); ++r) {
        out << (r + 1) << ',' << labels[order.permutation[r]] << '\n';
    }
}

}  // namespace ccc
