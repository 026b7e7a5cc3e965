#include "ccc/measure.hpp"

#include <array>
#include <charconv>
#include <set>
#include <utility>

#include "ccc/centrality.hpp"
#include "ccc/error.hpp"
#include "ccc/graph.hpp"

namespace ccc {

namespace {

struct KindName {
    MeasureKind kind;
    std::string_view name;
};

constexpr std::array<KindName, 11> kKindNames = {{
    {MeasureKind::in_degree, "indegree"},
    {MeasureKind::out_degree, "outdegree"},
    {MeasureKind::degree, "degree"},
    {MeasureKind::pagerank, "pagerank"},
    {MeasureKind::katz, "katz"},
    {MeasureKind::eigenvector, "eigenvector"},
    {MeasureKind::closeness, "closeness"},
    {MeasureKind::harmonic, "harmonic"},
    {MeasureKind::betweenness, "betweenness"},
    {MeasureKind::load, "load"},
    {MeasureKind::random, "random"},
}};

std::string_view kind_name(MeasureKind kind) {
    for (const auto& entry : kKindNames) {
        if (entry.kind == kind) return entry.name;
    }
    return "?";
}

std::string format_double(double value) {
    std::array<char, 32> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), ptr);
}

double parse_double(std::string_view key, std::string_view text) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw InputError("parameter '" + std::string(key) + "' expects a number, got '" + std::string(text) + "'");
    }
    return value;
}

std::uint64_t parse_unsigned(std::string_view key, std::string_view text) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw InputError("parameter '" + std::string(key) + "' expects a nonnegative integer, got '" +
                         std::string(text) + "'");
    }
    return value;
}

Orientation parse_orientation(std::string_view text) {
    if (text == "in") return Orientation::incoming;
    if (text == "out") return Orientation::outgoing;
    throw InputError("direction must be 'in' or 'out', got '" + std::string(text) + "'");
}

std::string_view orientation_name(Orientation o) { return o == Orientation::incoming ? "in" : "out"; }

}  // namespace

MeasureSpec MeasureSpec::parse(std::string_view input) {
    // The tagged form name(k=v,...) is rewritten to name:k=v,...
    std::string normalized(input);
    if (const auto open = normalized.find('('); open != std::string::npos) {
        if (normalized.back() != ')' || normalized.find(':') != std::string::npos) {
            throw InputError("malformed measure '" + normalized + "'");
        }
        normalized[open] = ':';
        normalized.pop_back();
    }
    const std::string_view text = normalized;
    const auto colon = text.find(':');
    const std::string_view name = text.substr(0, colon);
    MeasureSpec spec;
    bool known = false;
    for (const auto& entry : kKindNames) {
        if (entry.name == name) {
            spec.kind = entry.kind;
            known = true;
        }
    }
    if (!known) throw InputError("unknown measure '" + std::string(name) + "'");
    if (spec.kind == MeasureKind::eigenvector) spec.max_iter = 100000;

    std::set<std::string_view> allowed;
    switch (spec.kind) {
        case MeasureKind::pagerank: allowed = {"c", "tol", "max_iter"}; break;
        case MeasureKind::katz: allowed = {"alpha", "direction"}; break;
        case MeasureKind::eigenvector: allowed = {"tol", "max_iter"}; break;
        case MeasureKind::closeness:
        case MeasureKind::harmonic: allowed = {"direction"}; break;
        case MeasureKind::betweenness:
        case MeasureKind::load: allowed = {"k"}; break;
        case MeasureKind::random: allowed = {"seed"}; break;
        default: break;
    }

    if (colon == std::string_view::npos) return spec;
    std::string_view rest = text.substr(colon + 1);
    std::set<std::string_view> seen;
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string_view item = rest.substr(0, comma);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) {
            throw InputError("measure parameter '" + std::string(item) + "' is not key=value");
        }
        const std::string_view key = item.substr(0, eq);
        const std::string_view value = item.substr(eq + 1);
        if (!allowed.contains(key)) {
            throw InputError("measure '" + std::string(name) + "' has no parameter '" + std::string(key) + "'");
        }
        if (!seen.insert(key).second) throw InputError("parameter '" + std::string(key) + "' given twice");

        if (key == "c") {
            spec.damping = parse_double(key, value);
        } else if (key == "tol") {
            spec.tol = parse_double(key, value);
        } else if (key == "max_iter") {
            spec.max_iter = parse_unsigned(key, value);
        } else if (key == "alpha") {
            if (value == "auto") {
                spec.alpha.reset();
            } else {
                spec.alpha = parse_double(key, value);
            }
        } else if (key == "direction") {
            spec.orientation = parse_orientation(value);
        } else if (key == "k") {
            const auto k = parse_unsigned(key, value);
            if (k == 0 || k > 0xffffffffULL) throw InputError("truncation radius k must be >= 1");
            spec.radius = static_cast<std::uint32_t>(k);
        } else if (key == "seed") {
            spec.seed = parse_unsigned(key, value);
        }
    }
    return spec;
}

std::string MeasureSpec::to_string() const {
    std::string out(kind_name(kind));
    std::vector<std::pair<std::string, std::string>> params;
    switch (kind) {
        case MeasureKind::pagerank:
            params = {{"c", format_double(damping)},
                      {"tol", format_double(tol)},
                      {"max_iter", std::to_string(max_iter)}};
            break;
        case MeasureKind::katz:
            params = {{"alpha", alpha ? format_double(*alpha) : "auto"},
                      {"direction", std::string(orientation_name(orientation))}};
            break;
        case MeasureKind::eigenvector:
            params = {{"tol", format_double(tol)}, {"max_iter", std::to_string(max_iter)}};
            break;
        case MeasureKind::closeness:
        case MeasureKind::harmonic:
            params = {{"direction", std::string(orientation_name(orientation))}};
            break;
        case MeasureKind::betweenness:
        case MeasureKind::load:
            if (radius) params = {{"k", std::to_string(*radius)}};
            break;
        case MeasureKind::random: params = {{"seed", std::to_string(seed)}}; break;
        default: break;
    }
    if (params.empty()) return out;
    out += '(';
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) out += ',';
        out += params[i].first + '=' + params[i].second;
    }
    out += ')';
    return out;
}

std::vector<MeasureSpec> all_measures() {
    return {
        MeasureSpec::in_degree(),      MeasureSpec::out_degree(),   MeasureSpec::total_degree(),
        MeasureSpec::pagerank(),       MeasureSpec::katz(),         MeasureSpec::eigenvector(),
        MeasureSpec::closeness(),      MeasureSpec::harmonic(),     MeasureSpec::betweenness(),
        MeasureSpec::betweenness(6),   MeasureSpec::load(),         MeasureSpec::load(6),
        MeasureSpec::random(1),
    };
}

ScoreVector compute(const Graph& graph, const MeasureSpec& spec, unsigned threads) {
    switch (spec.kind) {
        case MeasureKind::in_degree: return degree_centrality(graph, DegreeMode::in);
        case MeasureKind::out_degree: return degree_centrality(graph, DegreeMode::out);
        case MeasureKind::degree: return degree_centrality(graph, DegreeMode::total);
        case MeasureKind::pagerank: return pagerank(graph, spec.damping, spec.tol, spec.max_iter);
        case MeasureKind::katz: return katz(graph, spec.alpha, spec.orientation);
        case MeasureKind::eigenvector: return eigenvector(graph, spec.tol, spec.max_iter);
        case MeasureKind::closeness: return closeness(graph, spec.orientation, threads);
        case MeasureKind::harmonic: return harmonic(graph, spec.orientation, threads);
        case MeasureKind::betweenness: return betweenness(graph, spec.radius, threads);
        case MeasureKind::load: return load(graph, spec.radius, threads);
        case MeasureKind::random: return random_scores(graph, spec.seed);
    }
    throw InputError("unhandled measure kind");
}

}  // namespace ccc
