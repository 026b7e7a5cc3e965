#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "ccc/graph.hpp"
#include "ccc/measure.hpp"

namespace ccc {

// Centrality kernels. All are pure functions of (graph, parameters) and
// produce bit-identical output for identical input, whatever the thread count.
//
// Multiplicity conventions: degree, PageRank, Katz and eigenvector use the
// multigraph adjacency (multiplicities, self-loops). Closeness, harmonic,
// betweenness and load run on the simple projection: multiplicities and
// self-loops are ignored.

ScoreVector degree_centrality(const Graph& graph, DegreeMode mode);

/// Iterates R(i) = c * sum_j e(j,i)/d+(j) * R(j) + (1 - c) from R = 1 until
/// the max-norm residual of the current iterate is <= tol. Dangling vertices
/// pass on nothing. Throws ConvergenceError after max_iter iterations.
ScoreVector pagerank(const Graph& graph, double damping = 0.85, double tol = 1e-10,
                     std::size_t max_iter = 10000);

/// Estimate of the spectral radius of the adjacency matrix. Exactly 0 when
/// the graph has no cycle (no edges, for undirected graphs); otherwise a
/// shifted power iteration on A^T + I.
double spectral_radius_estimate(const Graph& graph);

/// Katz: sum over k >= 1 of alpha^k times the number of length-k walks ending
/// at (incoming) or starting at (outgoing) each vertex. alpha = nullopt picks
/// 0.85 / spectral_radius_estimate; with a zero radius that returns zeros.
/// Throws DivergenceError when alpha * radius >= 1 or the iteration blows up.
ScoreVector katz(const Graph& graph, std::optional<double> alpha = std::nullopt,
                 Orientation orientation = Orientation::incoming);

/// Nonnegative unit-norm x with x^T A = lambda x^T. Power iteration on the
/// shifted matrix A^T + I, which has the same Perron vector and converges on
/// bipartite graphs too. Throws DegenerateSpectrumError for acyclic graphs
/// and ConvergenceError when the residual stays above tol.
ScoreVector eigenvector(const Graph& graph, double tol = 1e-10, std::size_t max_iter = 100000);

/// Wasserman-Faust closeness: with r vertices (self included) reaching v,
/// c(v) = ((r-1)/(n-1)) * ((r-1) / sum of their distances), 0 when r <= 1.
ScoreVector closeness(const Graph& graph, Orientation orientation = Orientation::incoming,
                      unsigned threads = 0);

/// h(v) = sum over u != v of 1/d(u,v), unreachable terms 0.
ScoreVector harmonic(const Graph& graph, Orientation orientation = Orientation::incoming,
                     unsigned threads = 0);

/// Betweenness over ordered pairs (i, j), i != j, both != v, sigma(i,j) > 0.
/// With `radius`, only pairs at distance <= radius count. Brandes
/// accumulation, depth-limited when truncated.
ScoreVector betweenness(const Graph& graph, std::optional<std::uint32_t> radius = std::nullopt,
                        unsigned threads = 0);

/// l(v) = sum_{i,j} sigma(i,j|v) / sum_{i,j} sigma(i,j) over the same pairs
/// as betweenness. All zeros when no pair is reachable.
ScoreVector load(const Graph& graph, std::optional<std::uint32_t> radius = std::nullopt,
                 unsigned threads = 0);

/// Independent Uniform(0,1) score per vertex; a baseline "measure" that is
/// unrelated to the graph structure.
ScoreVector random_scores(const Graph& graph, std::uint64_t seed);

}  // namespace ccc
