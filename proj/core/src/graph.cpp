#include "ccc/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <unordered_map>

#include "ccc/error.hpp"

namespace ccc {

namespace {

std::uint64_t pack(VertexId u, VertexId v) {
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

class Fnv1a {
public:
    void add(std::uint64_t value, int bytes) {
        for (int i = 0; i < bytes; ++i) {
            hash_ ^= (value >> (8 * i)) & 0xffU;
            hash_ *= 0x100000001b3ULL;
        }
    }
    std::uint64_t value() const { return hash_; }

private:
    std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

}  // namespace

Graph Graph::from_edge_list(std::span<const std::pair<OriginalId, OriginalId>> pairs,
                            Directedness directedness) {
    return from_edge_list(pairs, {}, directedness);
}

Graph Graph::from_edge_list(std::span<const std::pair<OriginalId, OriginalId>> pairs,
                            std::span<const OriginalId> isolated,
                            Directedness directedness) {
    std::unordered_map<OriginalId, VertexId> dense;
    dense.reserve(pairs.size() + isolated.size());
    std::vector<OriginalId> original_ids;
    auto lookup = [&](OriginalId id) {
        if (id < 0) throw InputError("negative vertex id " + std::to_string(id));
        auto [it, inserted] = dense.try_emplace(id, static_cast<VertexId>(original_ids.size()));
        if (inserted) original_ids.push_back(id);
        return it->second;
    };

    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(pairs.size());
    for (const auto& [u, v] : pairs) {
        const VertexId du = lookup(u);
        const VertexId dv = lookup(v);
        edges.emplace_back(du, dv);
    }
    for (OriginalId id : isolated) lookup(id);

    const std::size_t n = original_ids.size();
    return build(n, std::move(original_ids), edges, directedness);
}

Graph Graph::from_dense_edges(std::size_t n,
                              std::span<const std::pair<VertexId, VertexId>> edges,
                              Directedness directedness) {
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n) throw InputError("edge endpoint out of range");
    }
    std::vector<OriginalId> ids(n);
    for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<OriginalId>(i);
    return build(n, std::move(ids), edges, directedness);
}

Graph Graph::build(std::size_t n, std::vector<OriginalId> original_ids,
                   std::span<const std::pair<VertexId, VertexId>> edges,
                   Directedness directedness) {
    Graph g;
    g.directedness_ = directedness;
    g.original_ids_ = std::move(original_ids);

    std::vector<std::uint64_t> slots;
    if (directedness == Directedness::directed) {
        slots.reserve(edges.size());
        for (const auto& [u, v] : edges) slots.push_back(pack(u, v));
    } else {
        slots.reserve(2 * edges.size());
        for (const auto& [u, v] : edges) {
            // A loop occupies two slots in its own list: degree +2.
            slots.push_back(pack(u, v));
            slots.push_back(pack(v, u));
        }
    }
    std::sort(slots.begin(), slots.end());

    g.out_offsets_.assign(n + 1, 0);
    g.out_entries_.clear();
    std::size_t total = 0;
    for (std::size_t i = 0; i < slots.size();) {
        std::size_t j = i;
        while (j < slots.size() && slots[j] == slots[i]) ++j;
        const auto u = static_cast<VertexId>(slots[i] >> 32);
        const auto v = static_cast<VertexId>(slots[i] & 0xffffffffU);
        g.out_entries_.push_back({v, static_cast<std::uint32_t>(j - i)});
        ++g.out_offsets_[u + 1];
        total += j - i;
        i = j;
    }
    for (std::size_t v = 0; v < n; ++v) g.out_offsets_[v + 1] += g.out_offsets_[v];
    g.edge_count_ = directedness == Directedness::directed ? total : total / 2;
    g.build_in_adjacency();
    return g;
}

void Graph::build_in_adjacency() {
    in_offsets_.assign(1, 0);
    in_entries_.clear();
    if (!directed()) return;
    const std::size_t n = vertex_count();
    in_offsets_.assign(n + 1, 0);
    for (const Adjacent& a : out_entries_) ++in_offsets_[a.vertex + 1];
    for (std::size_t v = 0; v < n; ++v) in_offsets_[v + 1] += in_offsets_[v];
    in_entries_.resize(out_entries_.size());
    std::vector<std::size_t> cursor(in_offsets_.begin(), in_offsets_.end() - 1);
    // Sources are visited in increasing order, so each in-list comes out sorted.
    for (VertexId u = 0; u < n; ++u) {
        for (const Adjacent& a : out_adj(u)) {
            in_entries_[cursor[a.vertex]++] = {u, a.multiplicity};
        }
    }
}

Graph Graph::from_out_adjacency(Directedness directedness,
                                std::vector<OriginalId> original_ids,
                                std::vector<std::size_t> offsets,
                                std::vector<Adjacent> entries) {
    const std::size_t n = original_ids.size();
    if (offsets.size() != n + 1 || offsets.front() != 0 || offsets.back() != entries.size()) {
        throw InputError("adjacency offsets inconsistent with vertex count");
    }
    std::size_t total = 0;
    for (std::size_t v = 0; v < n; ++v) {
        if (offsets[v] > offsets[v + 1]) throw InputError("adjacency offsets not monotone");
        for (std::size_t e = offsets[v]; e < offsets[v + 1]; ++e) {
            const Adjacent& a = entries[e];
            if (a.vertex >= n) throw InputError("neighbour id out of range");
            if (a.multiplicity == 0) throw InputError("zero multiplicity");
            if (e > offsets[v] && entries[e - 1].vertex >= a.vertex) {
                throw InputError("adjacency list not strictly sorted");
            }
            total += a.multiplicity;
        }
    }

    Graph g;
    g.directedness_ = directedness;
    g.original_ids_ = std::move(original_ids);
    g.out_offsets_ = std::move(offsets);
    g.out_entries_ = std::move(entries);

    if (directedness == Directedness::undirected) {
        auto multiplicity = [&g](VertexId u, VertexId v) -> std::uint32_t {
            auto list = g.out_adj(u);
            auto it = std::lower_bound(list.begin(), list.end(), v,
                                       [](const Adjacent& a, VertexId x) { return a.vertex < x; });
            return (it != list.end() && it->vertex == v) ? it->multiplicity : 0;
        };
        for (VertexId u = 0; u < n; ++u) {
            for (const Adjacent& a : g.out_adj(u)) {
                if (a.vertex == u ? a.multiplicity % 2 != 0
                                  : multiplicity(a.vertex, u) != a.multiplicity) {
                    throw InputError("undirected adjacency is not symmetric");
                }
            }
        }
        g.edge_count_ = total / 2;
    } else {
        g.edge_count_ = total;
    }
    std::unordered_map<OriginalId, int> seen;
    for (OriginalId id : g.original_ids_) {
        if (id < 0 || !seen.emplace(id, 0).second) throw InputError("original ids not unique");
    }
    g.build_in_adjacency();
    return g;
}

std::uint64_t Graph::degree(VertexId v, DegreeMode mode) const {
    if (v >= vertex_count()) {
        throw InputError("vertex " + std::to_string(v) + " out of range");
    }
    auto sum = [](std::span<const Adjacent> list) {
        std::uint64_t d = 0;
        for (const Adjacent& a : list) d += a.multiplicity;
        return d;
    };
    if (!directed()) return sum(out_adj(v));
    switch (mode) {
        case DegreeMode::in: return sum(in_adj(v));
        case DegreeMode::out: return sum(out_adj(v));
        case DegreeMode::total: return sum(in_adj(v)) + sum(out_adj(v));
    }
    return 0;
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> result;
    result.reserve(edge_count_);
    for (VertexId u = 0; u < vertex_count(); ++u) {
        for (const Adjacent& a : out_adj(u)) {
            if (!directed() && a.vertex < u) continue;
            const std::uint32_t copies =
                (!directed() && a.vertex == u) ? a.multiplicity / 2 : a.multiplicity;
            for (std::uint32_t c = 0; c < copies; ++c) result.emplace_back(u, a.vertex);
        }
    }
    return result;
}

std::uint64_t Graph::fingerprint() const {
    Fnv1a h;
    h.add(directed() ? 1 : 0, 1);
    h.add(vertex_count(), 8);
    for (OriginalId id : original_ids_) h.add(static_cast<std::uint64_t>(id), 8);
    for (std::size_t off : out_offsets_) h.add(off, 8);
    for (const Adjacent& a : out_entries_) {
        h.add(a.vertex, 4);
        h.add(a.multiplicity, 4);
    }
    return h.value();
}

std::uint64_t Graph::canonical_hash() const {
    const std::size_t n = vertex_count();
    std::vector<VertexId> by_label(n);
    std::iota(by_label.begin(), by_label.end(), VertexId{0});
    std::sort(by_label.begin(), by_label.end(),
              [&](VertexId a, VertexId b) { return original_ids_[a] < original_ids_[b]; });

    Fnv1a h;
    h.add(directed() ? 1 : 0, 1);
    h.add(n, 8);
    std::vector<std::pair<OriginalId, std::uint32_t>> row;
    for (VertexId v : by_label) {
        h.add(static_cast<std::uint64_t>(original_ids_[v]), 8);
        row.clear();
        for (const Adjacent& a : out_adj(v)) row.emplace_back(original_ids_[a.vertex], a.multiplicity);
        std::sort(row.begin(), row.end());
        h.add(row.size(), 8);
        for (const auto& [label, mult] : row) {
            h.add(static_cast<std::uint64_t>(label), 8);
            h.add(mult, 4);
        }
    }
    return h.value();
}

namespace {

std::string hex16(std::uint64_t value) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
    return buf;
}

}  // namespace

std::string Graph::fingerprint_hex() const { return hex16(fingerprint()); }
std::string Graph::canonical_hash_hex() const { return hex16(canonical_hash()); }

}  // namespace ccc
