#include "ccc/snap.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>

#include "ccc/error.hpp"

namespace ccc {

namespace {

constexpr std::array<char, 8> kMagic = {'C', 'C', 'C', 'G', 'R', 'A', 'P', 'H'};
constexpr std::uint32_t kBinaryVersion = 1;

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::string_view trim(std::string_view s) {
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

// Splits on whitespace; returns false on a token that is not a nonnegative
// integer.
bool parse_ids(std::string_view line, std::vector<OriginalId>& out) {
    out.clear();
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_space(line[i])) ++i;
        if (i == line.size()) break;
        std::size_t j = i;
        while (j < line.size() && !is_space(line[j])) ++j;
        OriginalId value = 0;
        const char* first = line.data() + i;
        const char* last = line.data() + j;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last || value < 0 || *first == '-') return false;
        out.push_back(value);
        i = j;
    }
    return true;
}

bool starts_with_icase(std::string_view s, std::string_view prefix) {
    if (s.size() < prefix.size()) return false;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        if (std::tolower(static_cast<unsigned char>(s[i])) != prefix[i]) return false;
    }
    return true;
}

template <typename T>
void put(std::ostream& out, T value) {
    static_assert(std::is_integral_v<T>);
    std::array<char, sizeof(T)> bytes;
    auto u = static_cast<std::make_unsigned_t<T>>(value);
    for (std::size_t i = 0; i < sizeof(T); ++i) bytes[i] = static_cast<char>((u >> (8 * i)) & 0xffU);
    out.write(bytes.data(), bytes.size());
}

template <typename T>
T get(std::istream& in) {
    std::array<unsigned char, sizeof(T)> bytes{};
    in.read(reinterpret_cast<char*>(bytes.data()), bytes.size());
    if (!in) throw IoError("truncated binary graph");
    std::make_unsigned_t<T> u = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) {
        u |= static_cast<std::make_unsigned_t<T>>(bytes[i]) << (8 * i);
    }
    return static_cast<T>(u);
}

}  // namespace

SnapDocument parse_snap_document(std::string_view text) {
    SnapDocument doc;
    std::vector<OriginalId> ids;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = trim(text.substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        if (line.empty()) continue;
        if (line.front() == '#') {
            std::string_view body = trim(line.substr(1));
            if (starts_with_icase(body, "directed graph")) {
                doc.declared = Directedness::directed;
            } else if (starts_with_icase(body, "undirected graph")) {
                doc.declared = Directedness::undirected;
            } else if (starts_with_icase(body, "isolated:")) {
                if (!parse_ids(body.substr(9), ids)) throw ParseError(line_no, "bad isolated id list");
                doc.isolated.insert(doc.isolated.end(), ids.begin(), ids.end());
            }
            continue;
        }
        if (!parse_ids(line, ids)) {
            throw ParseError(line_no, "expected two nonnegative integers");
        }
        if (ids.size() != 2) {
            throw ParseError(line_no, "expected 2 fields, found " + std::to_string(ids.size()));
        }
        doc.pairs.emplace_back(ids[0], ids[1]);
    }
    return doc;
}

EdgePairs parse_snap(std::string_view text) { return parse_snap_document(text).pairs; }

EdgePairs parse_snap(std::istream& in) {
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse_snap(text);
}

void write_snap(const Graph& graph, std::ostream& out) {
    const auto& ids = graph.original_ids();
    out << (graph.directed() ? "# Directed graph" : "# Undirected graph") << '\n';
    out << "# Nodes: " << graph.vertex_count() << " Edges: " << graph.edge_count() << '\n';
    std::vector<OriginalId> isolated;
    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
        if (graph.out_adj(v).empty() && graph.in_adj(v).empty()) isolated.push_back(ids[v]);
    }
    constexpr std::size_t kPerLine = 32;
    for (std::size_t i = 0; i < isolated.size(); i += kPerLine) {
        out << "# Isolated:";
        for (std::size_t j = i; j < std::min(isolated.size(), i + kPerLine); ++j) out << ' ' << isolated[j];
        out << '\n';
    }
    out << "# FromNodeId\tToNodeId\n";
    for (const auto& [u, v] : graph.edges()) out << ids[u] << '\t' << ids[v] << '\n';
}

void write_binary(const Graph& graph, std::ostream& out) {
    out.write(kMagic.data(), kMagic.size());
    put<std::uint32_t>(out, kBinaryVersion);
    put<std::uint8_t>(out, graph.directed() ? 1 : 0);
    put<std::uint64_t>(out, graph.vertex_count());
    put<std::uint64_t>(out, graph.out_entries().size());
    for (OriginalId id : graph.original_ids()) put<std::int64_t>(out, id);
    for (std::size_t off : graph.out_offsets()) put<std::uint64_t>(out, off);
    for (const Adjacent& a : graph.out_entries()) {
        put<std::uint32_t>(out, a.vertex);
        put<std::uint32_t>(out, a.multiplicity);
    }
    if (!out) throw IoError("failed writing binary graph");
}

Graph read_binary(std::istream& in) {
    std::array<char, kMagic.size()> magic{};
    in.read(magic.data(), magic.size());
    if (!in || magic != kMagic) throw IoError("not a binary graph file");
    if (get<std::uint32_t>(in) != kBinaryVersion) throw IoError("unsupported binary graph version");
    const auto directed = get<std::uint8_t>(in);
    if (directed > 1) throw IoError("corrupt directedness flag");
    const auto n = get<std::uint64_t>(in);
    const auto entries = get<std::uint64_t>(in);
    std::vector<OriginalId> ids(n);
    for (auto& id : ids) id = get<std::int64_t>(in);
    std::vector<std::size_t> offsets(n + 1);
    for (auto& off : offsets) off = get<std::uint64_t>(in);
    std::vector<Adjacent> adj(entries);
    for (auto& a : adj) {
        a.vertex = get<std::uint32_t>(in);
        a.multiplicity = get<std::uint32_t>(in);
    }
    return Graph::from_out_adjacency(directed ? Directedness::directed : Directedness::undirected,
                                     std::move(ids), std::move(offsets), std::move(adj));
}

Graph load_graph(const std::filesystem::path& path, std::optional<Directedness> forced) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::array<char, kMagic.size()> head{};
    in.read(head.data(), head.size());
    const bool binary = in.gcount() == static_cast<std::streamsize>(head.size()) && head == kMagic;
    in.clear();
    in.seekg(0);
    if (binary) return read_binary(in);

    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    SnapDocument doc = parse_snap_document(text);
    const Directedness directedness =
        forced.value_or(doc.declared.value_or(Directedness::directed));
    return Graph::from_edge_list(doc.pairs, doc.isolated, directedness);
}

void save_graph(const Graph& graph, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    const auto ext = path.extension().string();
    if (ext == ".ccg" || ext == ".bin") {
        write_binary(graph, out);
    } else {
        write_snap(graph, out);
    }
    if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace ccc
