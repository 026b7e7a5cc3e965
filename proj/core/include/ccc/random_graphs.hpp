#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ccc/graph.hpp"
#include "ccc/rng.hpp"

namespace ccc {

// ---------------------------------------------------------------------------
// Configuration models
// ---------------------------------------------------------------------------

/// floor(d_min + Y) with Y = (1 - u)^(-1/(alpha - 1)), i.e. Y is Pareto with
/// shape alpha - 1 and the degree tail P(D > x) ~ x^-(alpha-1): a power-law
/// degree distribution with exponent alpha. Throws GenerationError if the
/// draw does not fit in 32 bits.
std::uint32_t pareto_degree(double u, double alpha, double d_min);

std::vector<std::uint32_t> pareto_degree_sequence(std::size_t n, double alpha, double d_min, Rng& rng);

/// Uniform stub matching. An odd degree sum gets one extra stub on a
/// uniformly chosen vertex. Self-loops and multi-edges are kept.
Graph undirected_config_model(std::span<const std::uint32_t> degrees, Rng& rng);

/// Matches out-stubs to a uniform shuffle of in-stubs. Sums must agree.
Graph directed_config_model(std::span<const std::uint32_t> in_degrees,
                            std::span<const std::uint32_t> out_degrees, Rng& rng);

inline constexpr std::size_t kDirectedCmMaxAttempts = 1'000'000;

/// Samples the in-degree sequence once, then redraws the whole out-degree
/// sequence until both sums agree (at most kDirectedCmMaxAttempts draws,
/// GenerationError beyond), then matches stubs. A rejected redraw costs only
/// its level counts and tail values; the sequence is laid out once, on a match.
Graph directed_config_model(std::size_t n, double alpha, double d_min, Rng& rng);

// ---------------------------------------------------------------------------
// Graphons
// ---------------------------------------------------------------------------

/// Edge-probability kernel on latent coordinates in [0,1].
/// For a pair i < j with coordinates (x_i, x_j):
///   undirected: edge {i,j} with probability forward(x_i, x_j)
///   directed:   i -> j with forward(x_i, x_j), j -> i with backward(x_i, x_j),
///               independently
/// A symmetric kernel sets backward = forward.
struct Graphon {
    std::string name;
    bool symmetric = true;
    std::function<double(double, double)> forward;
    std::function<double(double, double)> backward;
};

enum class GraphonId { product, sum, directed_opposed, threshold };

struct GraphonConstants {
    double c = 0.5;  // product (< 1), sum (< 1/2), directed_opposed (< 1)
    double c_high = 0.9;
    double c_low = 0.05;
    double p = 0.15;
};

/// product:          W = c x y
/// sum:              W = c (x + y)
/// directed_opposed: i->j with c x_i x_j, j->i with c (1 - x_i)(1 - x_j)
/// threshold:        source -> target with c_high if x_target < p, else c_low
/// Throws InputError when the constants leave their valid range.
Graphon named_graphon(GraphonId id, const GraphonConstants& constants = {});

/// Draws x_v ~ Uniform(0,1) in vertex order, then one Bernoulli per pair (two
/// for directed graphs) in lexicographic pair order. Throws KernelError if the
/// kernel leaves [0,1]; InputError if an asymmetric kernel is asked for an
/// undirected graph.
Graph graphon_sample(std::size_t n, const Graphon& graphon, Directedness directedness, Rng& rng);

// ---------------------------------------------------------------------------
// Model specifications
// ---------------------------------------------------------------------------

enum class ModelKind { undirected_cm, directed_cm, graphon };

/// Text form: kind[:key=value,...]
///   undirected_cm   n, alpha (3), d_min (1)  or  degrees=500x3+400x4+300x5
///   directed_cm     n, alpha (3), d_min (1)
///   graphon         kernel (product|sum|directed_opposed|threshold), n,
///                   c, c_high, c_low, p
struct ModelSpec {
    ModelKind kind = ModelKind::directed_cm;
    std::size_t n = 0;
    double alpha = 3.0;
    double d_min = 1.0;
    std::vector<std::uint32_t> degrees;  // explicit sequence (undirected_cm)
    GraphonId graphon = GraphonId::product;
    GraphonConstants constants;

    static ModelSpec parse(std::string_view text);
    std::string to_string() const;

    /// Throws InputError when a parameter is out of range.
    void validate() const;

    Directedness directedness() const;
};

/// Deterministic in (spec, seed).
Graph generate(const ModelSpec& spec, std::uint64_t seed);

}  // namespace ccc
