#pragma once

// Independent reference implementations for small graphs. Everything here
// works from the raw edge list and dense linear algebra or explicit path
// enumeration; nothing is shared with the library kernels.

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "ccc/graph.hpp"

namespace oracle {

struct SmallGraph {
    std::size_t n = 0;
    bool directed = false;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // may repeat, may loop

    ccc::Graph build() const;
};

/// n in [n_min, n_max], up to `max_edges_per_vertex * n` edges drawn with
/// replacement (loops and multi-edges included with the given chance).
SmallGraph random_small_graph(std::mt19937_64& gen, std::size_t n_min, std::size_t n_max,
                              double max_edges_per_vertex = 2.0, bool allow_loops = true);

/// Multigraph adjacency: A(u,v) counts u->v edges; undirected edges count in
/// both cells and an undirected loop counts 2 on the diagonal.
Eigen::MatrixXd adjacency(const SmallGraph& g);

/// Solves (I - c P^T) R = (1 - c) 1 with P(j,i) = A(j,i) / outdeg(j).
std::vector<double> pagerank(const SmallGraph& g, double c);

/// (I - alpha M)^{-1} alpha M 1 with M = A^T (incoming) or A (outgoing).
std::vector<double> katz(const SmallGraph& g, double alpha, bool incoming);

/// sum_{k=1..depth} alpha^k M^k 1 by repeated multiplication.
std::vector<double> katz_truncated(const SmallGraph& g, double alpha, int depth, bool incoming);

/// Largest real eigenvalue of A (0 if none positive).
double spectral_radius(const SmallGraph& g);

/// True when A^n = 0, i.e. the graph has no directed cycle. Exact in integers.
bool nilpotent(const SmallGraph& g);

/// Unit-norm nonnegative Perron vector of A^T, or nullopt when the spectral
/// radius is 0 or not a simple eigenvalue (the vector is then not unique).
std::optional<std::vector<double>> eigenvector(const SmallGraph& g);

inline constexpr int kUnreachable = -1;

/// d[u][v]: hops from u to v on the simple projection, kUnreachable if none.
std::vector<std::vector<int>> distances(const SmallGraph& g);

std::vector<double> closeness(const SmallGraph& g, bool incoming);
std::vector<double> harmonic(const SmallGraph& g, bool incoming);

/// Enumerates every shortest path of every ordered pair explicitly.
std::vector<double> betweenness(const SmallGraph& g, std::optional<int> radius);
std::vector<double> load(const SmallGraph& g, std::optional<int> radius);

}  // namespace oracle
