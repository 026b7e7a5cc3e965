#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ccc {

using VertexId = std::uint32_t;

/// Identifier as it appeared in the input (SNAP ids are sparse and may exceed
/// 32 bits).
using OriginalId = std::int64_t;

enum class Directedness { undirected, directed };

enum class DegreeMode { in, out, total };

/// One entry of an adjacency list: neighbour plus edge multiplicity.
struct Adjacent {
    VertexId vertex;
    std::uint32_t multiplicity;

    friend bool operator==(const Adjacent&, const Adjacent&) = default;
};

/// Immutable multigraph in compressed adjacency form.
///
/// Vertices are dense ids 0..n-1; the id each vertex had in the input is kept
/// in original_ids(). Adjacency lists are sorted by neighbour and carry
/// multiplicities >= 1.
///
/// Undirected graphs store each edge {u, v} in both lists. A self-loop {v, v}
/// is stored once in v's list with multiplicity 2 per loop, so list sums are
/// degrees (a loop adds 2) and the adjacency matrix has A[v][v] = 2 per loop.
/// in_adj() aliases out_adj() for undirected graphs.
///
/// Directed graphs store out- and in-lists separately; a self-loop adds 1 to
/// both the in- and out-degree of its vertex.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from raw (u, v) pairs. Ids are remapped densely in order
    /// of first appearance (u before v within a pair); duplicate pairs add
    /// multiplicity. Throws InputError on negative ids.
    static Graph from_edge_list(std::span<const std::pair<OriginalId, OriginalId>> pairs,
                                Directedness directedness);

    /// Same as from_edge_list but also appends vertices that carry no edge.
    /// Ids in `isolated` that already occur in `pairs` are ignored.
    static Graph from_edge_list(std::span<const std::pair<OriginalId, OriginalId>> pairs,
                                std::span<const OriginalId> isolated,
                                Directedness directedness);

    /// Builds a graph over dense ids 0..n-1 directly; original ids are the
    /// dense ids. Used by the generators, which must keep isolated vertices.
    static Graph from_dense_edges(std::size_t n,
                                  std::span<const std::pair<VertexId, VertexId>> edges,
                                  Directedness directedness);

    /// Rebuilds a graph from its compressed out-adjacency. Validates every
    /// structural invariant and throws InputError when one fails.
    static Graph from_out_adjacency(Directedness directedness,
                                    std::vector<OriginalId> original_ids,
                                    std::vector<std::size_t> offsets,
                                    std::vector<Adjacent> entries);

    std::size_t vertex_count() const noexcept { return original_ids_.size(); }

    /// Total number of edges counting multiplicity (each undirected edge and
    /// each undirected self-loop counts once).
    std::size_t edge_count() const noexcept { return edge_count_; }

    bool directed() const noexcept { return directedness_ == Directedness::directed; }
    Directedness directedness() const noexcept { return directedness_; }

    std::span<const Adjacent> out_adj(VertexId v) const noexcept {
        return {out_entries_.data() + out_offsets_[v], out_entries_.data() + out_offsets_[v + 1]};
    }

    std::span<const Adjacent> in_adj(VertexId v) const noexcept {
        if (!directed()) return out_adj(v);
        return {in_entries_.data() + in_offsets_[v], in_entries_.data() + in_offsets_[v + 1]};
    }

    /// Multiplicity-weighted degree. Throws InputError if v is out of range.
    std::uint64_t degree(VertexId v, DegreeMode mode) const;

    const std::vector<OriginalId>& original_ids() const noexcept { return original_ids_; }
    const std::vector<std::size_t>& out_offsets() const noexcept { return out_offsets_; }
    const std::vector<Adjacent>& out_entries() const noexcept { return out_entries_; }

    /// Edge multiset as dense (u, v) pairs, one per unit of multiplicity.
    /// Undirected edges appear once with u <= v.
    std::vector<std::pair<VertexId, VertexId>> edges() const;

    /// 64-bit FNV-1a digest of the structure (directedness, original ids,
    /// adjacency). Stable across platforms; printed as 16 hex digits.
    std::uint64_t fingerprint() const;
    std::string fingerprint_hex() const;

    /// Digest of the labelled graph alone: vertices and edges keyed by
    /// original id, so it survives re-ingestion under a different dense
    /// numbering. Two graphs with equal fingerprints have equal canonical
    /// hashes, not conversely.
    std::uint64_t canonical_hash() const;
    std::string canonical_hash_hex() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    static Graph build(std::size_t n, std::vector<OriginalId> original_ids,
                       std::span<const std::pair<VertexId, VertexId>> edges,
                       Directedness directedness);
    void build_in_adjacency();

    Directedness directedness_ = Directedness::undirected;
    std::size_t edge_count_ = 0;
    std::vector<OriginalId> original_ids_;
    std::vector<std::size_t> out_offsets_{0};
    std::vector<Adjacent> out_entries_;
    std::vector<std::size_t> in_offsets_{0};
    std::vector<Adjacent> in_entries_;
};

}  // namespace ccc
