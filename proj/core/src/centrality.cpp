#include "ccc/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "ccc/error.hpp"
#include "ccc/parallel.hpp"
#include "ccc/rng.hpp"

namespace ccc {

namespace {

// Sources are split into this many contiguous chunks, each with its own
// accumulator, and chunks are reduced in index order. The decomposition is
// independent of the thread count, which keeps floating-point sums
// bit-identical between serial and parallel runs.
constexpr std::size_t kSourceChunks = 8;

struct ChunkRange {
    std::size_t begin;
    std::size_t end;
};

ChunkRange chunk_range(std::size_t n, std::size_t chunks, std::size_t index) {
    return {n * index / chunks, n * (index + 1) / chunks};
}

ScoreVector make_scores(const Graph& graph, const MeasureSpec& spec, std::vector<double> scores) {
    return {graph.fingerprint_hex(), spec.to_string(), std::move(scores)};
}

std::span<const Adjacent> neighbours(const Graph& graph, VertexId v, Orientation o) {
    return o == Orientation::incoming ? graph.in_adj(v) : graph.out_adj(v);
}

// Acyclic in the multigraph sense: a self-loop is a cycle. For undirected
// graphs every edge is a cycle (A and A^T share a nonzero entry).
bool has_cycle(const Graph& graph) {
    if (!graph.directed()) return graph.edge_count() > 0;
    const std::size_t n = graph.vertex_count();
    std::vector<std::size_t> indegree(n, 0);
    for (VertexId v = 0; v < n; ++v) indegree[v] = graph.in_adj(v).size();
    std::vector<VertexId> queue;
    for (VertexId v = 0; v < n; ++v) {
        if (indegree[v] == 0) queue.push_back(v);
    }
    std::size_t removed = 0;
    while (removed < queue.size()) {
        const VertexId u = queue[removed++];
        for (const Adjacent& a : graph.out_adj(u)) {
            if (--indegree[a.vertex] == 0) queue.push_back(a.vertex);
        }
    }
    return removed != n;
}

// Strongly connected components by an iterative Tarjan search; undirected
// graphs yield their connected components. Returns (id per vertex, count).
std::pair<std::vector<std::uint32_t>, std::uint32_t> strong_components(const Graph& graph) {
    const std::size_t n = graph.vertex_count();
    constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> index(n, kUnvisited), low(n, 0), component(n, kUnvisited);
    std::vector<VertexId> stack;
    std::vector<std::pair<VertexId, std::size_t>> calls;  // vertex, next edge
    std::uint32_t next_index = 0, count = 0;
    for (VertexId root = 0; root < n; ++root) {
        if (index[root] != kUnvisited) continue;
        calls.emplace_back(root, 0);
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        while (!calls.empty()) {
            auto& [v, edge] = calls.back();
            const auto out = graph.out_adj(v);
            if (edge < out.size()) {
                const VertexId w = out[edge++].vertex;
                if (index[w] == kUnvisited) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    calls.emplace_back(w, 0);
                } else if (component[w] == kUnvisited) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            const VertexId done = v;
            calls.pop_back();
            if (!calls.empty()) low[calls.back().first] = std::min(low[calls.back().first], low[done]);
            if (low[done] == index[done]) {
                VertexId w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    component[w] = count;
                } while (w != done);
                ++count;
            }
        }
    }
    return {std::move(component), count};
}

// y = A^T x (incoming) or y = A x (outgoing), with multiplicities.
void walk_step(const Graph& graph, Orientation o, std::span<const double> x, std::span<double> y) {
    for (VertexId i = 0; i < graph.vertex_count(); ++i) {
        double sum = 0.0;
        for (const Adjacent& a : neighbours(graph, i, o)) sum += a.multiplicity * x[a.vertex];
        y[i] = sum;
    }
}

// Per-source BFS state reused across sources within one chunk.
struct Bfs {
    explicit Bfs(std::size_t n) : dist(n, -1) { order.reserve(n); }

    // Visits vertices in BFS order from `source`, following out-edges when
    // `forward` and in-edges otherwise. Stops expanding at depth `limit`
    // (-1 = unbounded).
    template <typename Visit>
    void run(const Graph& graph, VertexId source, bool forward, std::int32_t limit, Visit&& visit) {
        for (VertexId v : order) dist[v] = -1;
        order.clear();
        dist[source] = 0;
        order.push_back(source);
        for (std::size_t head = 0; head < order.size(); ++head) {
            const VertexId u = order[head];
            visit(u, dist[u]);
            if (dist[u] == limit) continue;
            for (const Adjacent& a : forward ? graph.out_adj(u) : graph.in_adj(u)) {
                if (dist[a.vertex] < 0) {
                    dist[a.vertex] = dist[u] + 1;
                    order.push_back(a.vertex);
                }
            }
        }
    }

    std::vector<std::int32_t> dist;
    std::vector<VertexId> order;
};

// Distances into v (incoming orientation) come from a BFS over in-edges.
template <typename PerVertex>
std::vector<double> distance_kernel(const Graph& graph, Orientation o, unsigned threads,
                                    PerVertex&& per_vertex) {
    const std::size_t n = graph.vertex_count();
    std::vector<double> scores(n, 0.0);
    const bool forward = graph.directed() && o == Orientation::outgoing;
    const std::size_t chunks = std::min(n, kSourceChunks);
    parallel_tasks(chunks, threads, [&](std::size_t c) {
        Bfs bfs(n);
        std::vector<std::size_t> level_counts;
        const auto [begin, end] = chunk_range(n, chunks, c);
        for (std::size_t v = begin; v < end; ++v) {
            level_counts.clear();
            bfs.run(graph, static_cast<VertexId>(v), forward || !graph.directed(), -1,
                    [&](VertexId, std::int32_t d) {
                        if (level_counts.size() <= static_cast<std::size_t>(d)) level_counts.resize(d + 1, 0);
                        ++level_counts[d];
                    });
            scores[v] = per_vertex(level_counts);
        }
    });
    return scores;
}

// Shortest-path DAG from one source, depth-limited: distances, path counts
// sigma and the BFS order needed for reverse accumulation.
struct PathDag {
    explicit PathDag(std::size_t n) : dist(n, -1), sigma(n, 0.0), acc(n, 0.0) { order.reserve(n); }

    void run(const Graph& graph, VertexId source, std::int32_t limit) {
        for (VertexId v : order) {
            dist[v] = -1;
            sigma[v] = 0.0;
            acc[v] = 0.0;
        }
        order.clear();
        dist[source] = 0;
        sigma[source] = 1.0;
        order.push_back(source);
        for (std::size_t head = 0; head < order.size(); ++head) {
            const VertexId u = order[head];
            if (dist[u] == limit) continue;
            for (const Adjacent& a : graph.out_adj(u)) {
                const VertexId w = a.vertex;
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    order.push_back(w);
                }
                if (dist[w] == dist[u] + 1) sigma[w] += sigma[u];
            }
        }
    }

    std::vector<std::int32_t> dist;
    std::vector<double> sigma;
    std::vector<double> acc;
    std::vector<VertexId> order;
};

std::int32_t depth_limit(std::optional<std::uint32_t> radius) {
    if (!radius) return -1;
    if (*radius == 0) throw InputError("truncation radius must be >= 1");
    return static_cast<std::int32_t>(std::min<std::uint32_t>(*radius, std::numeric_limits<std::int32_t>::max()));
}

}  // namespace

ScoreVector degree_centrality(const Graph& graph, DegreeMode mode) {
    std::vector<double> scores(graph.vertex_count());
    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
        scores[v] = static_cast<double>(graph.degree(v, mode));
    }
    MeasureSpec spec = mode == DegreeMode::in    ? MeasureSpec::in_degree()
                       : mode == DegreeMode::out ? MeasureSpec::out_degree()
                                                 : MeasureSpec::total_degree();
    return make_scores(graph, spec, std::move(scores));
}

ScoreVector pagerank(const Graph& graph, double damping, double tol, std::size_t max_iter) {
    if (!(damping > 0.0 && damping < 1.0)) throw InputError("pagerank damping must lie in (0,1)");
    if (!(tol > 0.0)) throw InputError("pagerank tol must be positive");
    if (max_iter == 0) throw InputError("pagerank max_iter must be positive");

    const std::size_t n = graph.vertex_count();
    std::vector<double> inv_out(n, 0.0);
    for (VertexId v = 0; v < n; ++v) {
        const auto d = graph.degree(v, DegreeMode::out);
        inv_out[v] = d == 0 ? 0.0 : 1.0 / static_cast<double>(d);
    }

    std::vector<double> rank(n, 1.0), next(n), share(n);
    double residual = std::numeric_limits<double>::infinity();
    for (std::size_t iter = 0; iter < max_iter; ++iter) {
        for (VertexId j = 0; j < n; ++j) share[j] = rank[j] * inv_out[j];
        residual = 0.0;
        for (VertexId i = 0; i < n; ++i) {
            double sum = 0.0;
            for (const Adjacent& a : graph.in_adj(i)) sum += a.multiplicity * share[a.vertex];
            next[i] = damping * sum + (1.0 - damping);
            residual = std::max(residual, std::abs(next[i] - rank[i]));
        }
        // `residual` belongs to `rank`, which is what gets returned.
        if (residual <= tol) {
            return make_scores(graph, MeasureSpec::pagerank(damping, tol, max_iter), std::move(rank));
        }
        rank.swap(next);
    }
    throw ConvergenceError("pagerank did not converge in " + std::to_string(max_iter) + " iterations",
                           residual);
}

double spectral_radius_estimate(const Graph& graph) {
    if (!has_cycle(graph)) return 0.0;
    const std::size_t n = graph.vertex_count();
    const auto [component, components] = strong_components(graph);

    std::vector<std::vector<VertexId>> members(components);
    for (VertexId v = 0; v < n; ++v) members[component[v]].push_back(v);

    // The radius is the largest radius of an irreducible diagonal block. Each
    // block is handled alone: there A^T + I is primitive, so the iteration
    // converges geometrically even where the whole matrix has a Jordan block
    // at its top eigenvalue.
    constexpr std::size_t kMaxIter = 20000;
    constexpr int kStableRounds = 5;
    std::vector<std::uint32_t> local(n, 0);
    double radius = 0.0;
    for (std::uint32_t c = 0; c < components; ++c) {
        const auto& vs = members[c];
        bool internal = false;
        for (VertexId v : vs) {
            for (const Adjacent& a : graph.in_adj(v)) internal = internal || component[a.vertex] == c;
        }
        if (!internal) continue;
        for (std::uint32_t i = 0; i < vs.size(); ++i) local[vs[i]] = i;

        const std::size_t m = vs.size();
        std::vector<double> x(m, 1.0 / static_cast<double>(m)), y(m);
        double estimate = 0.0;
        int stable = 0;
        for (std::size_t iter = 0; iter < kMaxIter && stable < kStableRounds; ++iter) {
            double norm = 0.0;
            for (std::size_t i = 0; i < m; ++i) {
                double sum = x[i];
                for (const Adjacent& a : graph.in_adj(vs[i])) {
                    if (component[a.vertex] == c) sum += a.multiplicity * x[local[a.vertex]];
                }
                y[i] = sum;
                norm += sum;
            }
            // x sums to one, so the l1 growth is the shifted eigenvalue.
            const double current = norm - 1.0;
            for (std::size_t i = 0; i < m; ++i) x[i] = y[i] / norm;
            stable = std::abs(current - estimate) <= 1e-13 * std::max(1.0, current) ? stable + 1 : 0;
            estimate = current;
        }
        radius = std::max(radius, estimate);
    }
    return radius;
}

ScoreVector katz(const Graph& graph, std::optional<double> alpha, Orientation orientation) {
    const std::size_t n = graph.vertex_count();
    const MeasureSpec spec = MeasureSpec::katz(alpha, orientation);
    const double radius = spectral_radius_estimate(graph);

    double a = 0.0;
    if (alpha) {
        a = *alpha;
        if (!(a > 0.0 && std::isfinite(a))) throw InputError("katz alpha must be positive");
        if (a * radius >= 1.0) {
            throw DivergenceError("katz alpha " + std::to_string(a) + " times spectral radius " +
                                  std::to_string(radius) + " is >= 1");
        }
    } else {
        // No cycle, no radius to scale by: auto mode reports all zeros.
        if (radius == 0.0) return make_scores(graph, spec, std::vector<double>(n, 0.0));
        a = 0.85 / radius;
    }

    // K <- alpha * M (K + 1), M = A^T (incoming) or A (outgoing), from K = 0;
    // after t steps K holds the walk sum truncated at length t.
    const Orientation o = graph.directed() ? orientation : Orientation::incoming;
    std::vector<double> k(n, 0.0), shifted(n), next(n);
    constexpr double kTol = 1e-12;
    constexpr std::size_t kMaxIter = 1000000;
    double change = 0.0;
    for (std::size_t iter = 0; iter < kMaxIter; ++iter) {
        for (std::size_t i = 0; i < n; ++i) shifted[i] = k[i] + 1.0;
        walk_step(graph, o, shifted, next);
        change = 0.0;
        double scale = 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            next[i] *= a;
            change = std::max(change, std::abs(next[i] - k[i]));
            scale = std::max(scale, next[i]);
        }
        k.swap(next);
        if (!std::isfinite(scale) || scale > 1e300) {
            throw DivergenceError("katz iteration diverged; alpha too large for this graph");
        }
        if (change <= kTol * scale) return make_scores(graph, spec, std::move(k));
    }
    throw ConvergenceError("katz did not converge", change);
}

ScoreVector eigenvector(const Graph& graph, double tol, std::size_t max_iter) {
    if (!(tol > 0.0)) throw InputError("eigenvector tol must be positive");
    if (!has_cycle(graph)) {
        throw DegenerateSpectrumError("adjacency matrix is nilpotent; eigenvector centrality undefined");
    }
    const std::size_t n = graph.vertex_count();
    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n))), z(n);
    double residual = std::numeric_limits<double>::infinity();
    for (std::size_t iter = 0; iter < max_iter; ++iter) {
        walk_step(graph, Orientation::incoming, x, z);
        double lambda = 0.0;
        for (std::size_t i = 0; i < n; ++i) lambda += x[i] * z[i];
        residual = 0.0;
        for (std::size_t i = 0; i < n; ++i) residual = std::max(residual, std::abs(z[i] - lambda * x[i]));
        if (residual <= tol) {
            return make_scores(graph, MeasureSpec::eigenvector(tol, max_iter), std::move(x));
        }
        double norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            z[i] += x[i];
            norm += z[i] * z[i];
        }
        norm = std::sqrt(norm);
        for (std::size_t i = 0; i < n; ++i) x[i] = z[i] / norm;
    }
    throw ConvergenceError("eigenvector did not converge in " + std::to_string(max_iter) + " iterations",
                           residual);
}

ScoreVector closeness(const Graph& graph, Orientation orientation, unsigned threads) {
    const std::size_t n = graph.vertex_count();
    auto scores = distance_kernel(graph, orientation, threads, [n](const std::vector<std::size_t>& levels) {
        std::size_t reached = 0;
        double total = 0.0;
        for (std::size_t d = 0; d < levels.size(); ++d) {
            reached += levels[d];
            total += static_cast<double>(d) * static_cast<double>(levels[d]);
        }
        if (reached <= 1) return 0.0;
        const double others = static_cast<double>(reached - 1);
        return (others / static_cast<double>(n - 1)) * (others / total);
    });
    return make_scores(graph, MeasureSpec::closeness(orientation), std::move(scores));
}

ScoreVector harmonic(const Graph& graph, Orientation orientation, unsigned threads) {
    auto scores = distance_kernel(graph, orientation, threads, [](const std::vector<std::size_t>& levels) {
        double h = 0.0;
        for (std::size_t d = 1; d < levels.size(); ++d) h += static_cast<double>(levels[d]) / static_cast<double>(d);
        return h;
    });
    return make_scores(graph, MeasureSpec::harmonic(orientation), std::move(scores));
}

ScoreVector betweenness(const Graph& graph, std::optional<std::uint32_t> radius, unsigned threads) {
    const std::size_t n = graph.vertex_count();
    const std::int32_t limit = depth_limit(radius);
    const std::size_t chunks = std::min(n, kSourceChunks);
    std::vector<std::vector<double>> partial(chunks);

    parallel_tasks(chunks, threads, [&](std::size_t c) {
        std::vector<double>& sum = partial[c];
        sum.assign(n, 0.0);
        PathDag dag(n);
        const auto [begin, end] = chunk_range(n, chunks, c);
        for (std::size_t s = begin; s < end; ++s) {
            dag.run(graph, static_cast<VertexId>(s), limit);
            // delta(v) = sum over DAG children w of sigma(v)/sigma(w) * (1 + delta(w))
            for (std::size_t idx = dag.order.size(); idx-- > 1;) {
                const VertexId v = dag.order[idx];
                double delta = 0.0;
                for (const Adjacent& a : graph.out_adj(v)) {
                    const VertexId w = a.vertex;
                    if (dag.dist[w] == dag.dist[v] + 1) delta += (1.0 + dag.acc[w]) / dag.sigma[w];
                }
                dag.acc[v] = dag.sigma[v] * delta;
                sum[v] += dag.acc[v];
            }
        }
    });

    std::vector<double> scores(n, 0.0);
    for (const auto& sum : partial) {
        for (std::size_t v = 0; v < n; ++v) scores[v] += sum[v];
    }
    return make_scores(graph, MeasureSpec::betweenness(radius), std::move(scores));
}

ScoreVector load(const Graph& graph, std::optional<std::uint32_t> radius, unsigned threads) {
    const std::size_t n = graph.vertex_count();
    const std::int32_t limit = depth_limit(radius);
    const std::size_t chunks = std::min(n, kSourceChunks);
    std::vector<std::vector<double>> partial(chunks);
    std::vector<double> partial_paths(chunks, 0.0);

    parallel_tasks(chunks, threads, [&](std::size_t c) {
        std::vector<double>& sum = partial[c];
        sum.assign(n, 0.0);
        PathDag dag(n);
        const auto [begin, end] = chunk_range(n, chunks, c);
        for (std::size_t s = begin; s < end; ++s) {
            dag.run(graph, static_cast<VertexId>(s), limit);
            // acc(v) = number of DAG paths starting at v (including the empty
            // one); sigma(s,j|v) summed over targets j is sigma(v) * (acc(v) - 1).
            for (std::size_t idx = dag.order.size(); idx-- > 1;) {
                const VertexId v = dag.order[idx];
                double paths = 1.0;
                for (const Adjacent& a : graph.out_adj(v)) {
                    if (dag.dist[a.vertex] == dag.dist[v] + 1) paths += dag.acc[a.vertex];
                }
                dag.acc[v] = paths;
                sum[v] += dag.sigma[v] * (paths - 1.0);
                partial_paths[c] += dag.sigma[v];
            }
        }
    });

    double total_paths = 0.0;
    for (double p : partial_paths) total_paths += p;
    std::vector<double> scores(n, 0.0);
    for (const auto& sum : partial) {
        for (std::size_t v = 0; v < n; ++v) scores[v] += sum[v];
    }
    if (total_paths > 0.0) {
        for (double& s : scores) s /= total_paths;
    }
    return make_scores(graph, MeasureSpec::load(radius), std::move(scores));
}

ScoreVector random_scores(const Graph& graph, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> scores(graph.vertex_count());
    for (double& s : scores) s = rng.uniform01();
    return make_scores(graph, MeasureSpec::random(seed), std::move(scores));
}

}  // namespace ccc
