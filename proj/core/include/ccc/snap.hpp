#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "ccc/graph.hpp"

namespace ccc {

using EdgePairs = std::vector<std::pair<OriginalId, OriginalId>>;

/// Parses a SNAP plain-text edge list: '#' comment lines and lines holding
/// exactly two whitespace-separated nonnegative integers. Blank lines are
/// skipped. Pair order and duplicates are preserved. Throws ParseError with
/// the 1-based line number on anything else.
EdgePairs parse_snap(std::string_view text);
EdgePairs parse_snap(std::istream& in);

/// A SNAP file plus the metadata this library recognises in its comments:
///   "# Directed graph ..." / "# Undirected graph ..." (the SNAP convention)
///   "# Isolated: <id> <id> ..." (written by write_snap for edgeless vertices)
struct SnapDocument {
    EdgePairs pairs;
    std::optional<Directedness> declared;
    std::vector<OriginalId> isolated;
};

SnapDocument parse_snap_document(std::string_view text);

/// Writes the graph as a SNAP edge list using original ids, one line per unit
/// of multiplicity (undirected edges once). Vertices without edges are listed
/// in "# Isolated:" comments so n survives a round trip.
void write_snap(const Graph& graph, std::ostream& out);

/// Binary cache: magic "CCCGRAPH", version, directedness, original ids and the
/// compressed out-adjacency, all little-endian. Round-trips exactly.
void write_binary(const Graph& graph, std::ostream& out);
Graph read_binary(std::istream& in);

/// Loads either format (binary detected by magic). For SNAP text the
/// directedness is `forced` if given, else the header declaration, else
/// directed.
Graph load_graph(const std::filesystem::path& path,
                 std::optional<Directedness> forced = std::nullopt);

void save_graph(const Graph& graph, const std::filesystem::path& path);

}  // namespace ccc
