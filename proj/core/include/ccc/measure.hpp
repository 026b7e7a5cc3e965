#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ccc {

class Graph;

enum class MeasureKind {
    in_degree,
    out_degree,
    degree,
    pagerank,
    katz,
    eigenvector,
    closeness,
    harmonic,
    betweenness,
    load,
    random,
};

/// Which way paths or walks are followed on a directed graph.
///   incoming: a vertex collects from paths/walks that end at it
///   outgoing: a vertex collects from paths/walks that start at it
/// Ignored on undirected graphs.
enum class Orientation { incoming, outgoing };

/// A fully parameterised centrality measure. Only the fields relevant to
/// `kind` are meaningful; to_string() prints exactly those, and two specs with
/// equal to_string() compute bit-identical scores on the same graph.
///
/// Text form: name[:key=value,...]; parse() also takes the tagged form
/// name(key=value,...) that to_string() prints.
///   indegree | outdegree | degree
///   pagerank     c (0.85), tol (1e-10), max_iter (10000)
///   katz         alpha (auto | number), direction (in | out)
///   eigenvector  tol (1e-10), max_iter (100000)
///   closeness    direction (in | out)
///   harmonic     direction (in | out)
///   betweenness  k (radius; absent = unbounded)
///   load         k
///   random       seed (0)
struct MeasureSpec {
    MeasureKind kind = MeasureKind::degree;
    double damping = 0.85;
    double tol = 1e-10;
    std::size_t max_iter = 10000;
    std::optional<double> alpha;  // katz; nullopt = auto
    Orientation orientation = Orientation::incoming;
    std::optional<std::uint32_t> radius;
    std::uint64_t seed = 0;

    static MeasureSpec parse(std::string_view text);
    std::string to_string() const;

    static MeasureSpec in_degree() { MeasureSpec s; s.kind = MeasureKind::in_degree; return s; }
    static MeasureSpec out_degree() { MeasureSpec s; s.kind = MeasureKind::out_degree; return s; }
    static MeasureSpec total_degree() { MeasureSpec s; s.kind = MeasureKind::degree; return s; }
    static MeasureSpec pagerank(double c = 0.85, double tol = 1e-10, std::size_t max_iter = 10000) {
        MeasureSpec s; s.kind = MeasureKind::pagerank; s.damping = c; s.tol = tol; s.max_iter = max_iter; return s;
    }
    static MeasureSpec katz(std::optional<double> alpha = std::nullopt,
                            Orientation orientation = Orientation::incoming) {
        MeasureSpec s; s.kind = MeasureKind::katz; s.alpha = alpha; s.orientation = orientation; return s;
    }
    static MeasureSpec eigenvector(double tol = 1e-10, std::size_t max_iter = 100000) {
        MeasureSpec s; s.kind = MeasureKind::eigenvector; s.tol = tol; s.max_iter = max_iter; return s;
    }
    static MeasureSpec closeness(Orientation o = Orientation::incoming) {
        MeasureSpec s; s.kind = MeasureKind::closeness; s.orientation = o; return s;
    }
    static MeasureSpec harmonic(Orientation o = Orientation::incoming) {
        MeasureSpec s; s.kind = MeasureKind::harmonic; s.orientation = o; return s;
    }
    static MeasureSpec betweenness(std::optional<std::uint32_t> k = std::nullopt) {
        MeasureSpec s; s.kind = MeasureKind::betweenness; s.radius = k; return s;
    }
    static MeasureSpec load(std::optional<std::uint32_t> k = std::nullopt) {
        MeasureSpec s; s.kind = MeasureKind::load; s.radius = k; return s;
    }
    static MeasureSpec random(std::uint64_t seed) {
        MeasureSpec s; s.kind = MeasureKind::random; s.seed = seed; return s;
    }
};

/// Per-vertex centrality scores of one measure on one graph.
struct ScoreVector {
    std::string graph_id;  // Graph::fingerprint_hex() of the source graph
    std::string measure;   // MeasureSpec::to_string()
    std::vector<double> scores;

    std::size_t size() const noexcept { return scores.size(); }
};

/// Every measure kind with default parameters; used to sweep "all measures".
std::vector<MeasureSpec> all_measures();

/// Dispatches to the kernel for spec.kind. `threads` applies to the
/// traversal kernels (0 = hardware concurrency); results do not depend on it.
ScoreVector compute(const Graph& graph, const MeasureSpec& spec, unsigned threads = 0);

}  // namespace ccc
