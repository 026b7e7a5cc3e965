#include "ccc/random_graphs.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <set>

#include "ccc/error.hpp"

namespace ccc {

namespace {

void check_pareto(double alpha, double d_min) {
    if (!(alpha > 1.0) || !std::isfinite(alpha)) throw InputError("power-law exponent alpha must be > 1");
    if (!(d_min >= 1.0) || !std::isfinite(d_min)) throw InputError("degree floor d_min must be >= 1");
}

template <typename T>
void shuffle(std::vector<T>& items, Rng& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        const std::size_t j = rng.below(i);
        std::swap(items[i - 1], items[j]);
    }
}

// Inverse-CDF degree draw with the low levels precomputed. deg(u) is
// nondecreasing in u; level j starts at u = jump[j]. Draws within kGuard of a
// jump, and draws past the table, use the closed form, so the result always
// equals the closed form exactly.
class ParetoTable {
public:
    ParetoTable(double alpha, double d_min) : alpha_(alpha), d_min_(d_min) {
        base_ = std::floor(d_min + 1.0);
        for (int j = 1; j <= kLevels; ++j) {
            jump_[j - 1] = 1.0 - std::pow(base_ + j - d_min, -(alpha - 1.0));
        }
    }

    /// P(deg >= level(j)); level(j) = base + j.
    double survival(int j) const { return std::min(1.0, std::pow(base_ + j - d_min_, -(alpha_ - 1.0))); }
    double level(int j) const { return base_ + j; }
    double tail_start() const { return jump_[kLevels - 1]; }

    double closed_form(double u) const {
        return std::floor(d_min_ + std::pow(1.0 - u, -1.0 / (alpha_ - 1.0)));
    }

    double operator()(double u) const {
        for (int j = 0; j < kLevels; ++j) {
            if (std::abs(u - jump_[j]) <= kGuard) return closed_form(u);
            if (u < jump_[j]) return base_ + j;
        }
        return closed_form(u);
    }

    static constexpr int kLevels = 48;

private:
    static constexpr double kGuard = 1e-9;
    double alpha_, d_min_, base_;
    double jump_[kLevels];
};

std::uint32_t to_degree(double d) {
    if (!(d <= static_cast<double>(std::numeric_limits<std::int32_t>::max()))) {
        throw GenerationError("Pareto draw overflows the degree range; increase alpha");
    }
    return static_cast<std::uint32_t>(d);
}

std::vector<VertexId> stubs_of(std::span<const std::uint32_t> degrees) {
    std::vector<VertexId> stubs;
    stubs.reserve(std::accumulate(degrees.begin(), degrees.end(), std::size_t{0}));
    for (VertexId v = 0; v < degrees.size(); ++v) stubs.insert(stubs.end(), degrees[v], v);
    return stubs;
}

double checked(double p, const std::string& name) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw KernelError("graphon '" + name + "' produced probability " + std::to_string(p));
    }
    return p;
}

std::string_view graphon_name(GraphonId id) {
    switch (id) {
        case GraphonId::product: return "product";
        case GraphonId::sum: return "sum";
        case GraphonId::directed_opposed: return "directed_opposed";
        case GraphonId::threshold: return "threshold";
    }
    return "?";
}

GraphonConstants default_constants(GraphonId id) {
    GraphonConstants c;
    switch (id) {
        case GraphonId::product: c.c = 0.5; break;
        case GraphonId::sum: c.c = 0.25; break;
        case GraphonId::directed_opposed: c.c = 0.9; break;
        case GraphonId::threshold: break;
    }
    return c;
}

std::string format_double(double value) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

double parse_double(std::string_view key, std::string_view text) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw InputError("model parameter '" + std::string(key) + "' expects a number, got '" + std::string(text) + "'");
    }
    return value;
}

std::uint64_t parse_unsigned(std::string_view key, std::string_view text) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw InputError("model parameter '" + std::string(key) + "' expects an integer, got '" + std::string(text) + "'");
    }
    return value;
}

// "500x3+400x4" -> 500 vertices of degree 3 followed by 400 of degree 4.
std::vector<std::uint32_t> parse_degree_groups(std::string_view text) {
    std::vector<std::uint32_t> degrees;
    while (!text.empty()) {
        const auto plus = text.find('+');
        const std::string_view group = text.substr(0, plus);
        text = plus == std::string_view::npos ? std::string_view{} : text.substr(plus + 1);
        const auto x = group.find('x');
        if (x == std::string_view::npos) throw InputError("degree group '" + std::string(group) + "' is not COUNTxDEGREE");
        const auto count = parse_unsigned("degrees", group.substr(0, x));
        const auto degree = parse_unsigned("degrees", group.substr(x + 1));
        if (degree > std::numeric_limits<std::uint32_t>::max()) throw InputError("degree too large");
        degrees.insert(degrees.end(), count, static_cast<std::uint32_t>(degree));
    }
    return degrees;
}

}  // namespace

std::uint32_t pareto_degree(double u, double alpha, double d_min) {
    check_pareto(alpha, d_min);
    return to_degree(ParetoTable(alpha, d_min).closed_form(u));
}

std::vector<std::uint32_t> pareto_degree_sequence(std::size_t n, double alpha, double d_min, Rng& rng) {
    check_pareto(alpha, d_min);
    const ParetoTable table(alpha, d_min);
    std::vector<std::uint32_t> degrees(n);
    for (auto& d : degrees) d = to_degree(table(rng.uniform01()));
    return degrees;
}

Graph undirected_config_model(std::span<const std::uint32_t> degrees, Rng& rng) {
    std::vector<VertexId> stubs = stubs_of(degrees);
    if (stubs.size() % 2 == 1) {
        const auto v = static_cast<VertexId>(rng.below(degrees.size()));
        stubs.insert(std::upper_bound(stubs.begin(), stubs.end(), v), v);
    }
    shuffle(stubs, rng);
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(stubs.size() / 2);
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) edges.emplace_back(stubs[i], stubs[i + 1]);
    return Graph::from_dense_edges(degrees.size(), edges, Directedness::undirected);
}

Graph directed_config_model(std::span<const std::uint32_t> in_degrees,
                            std::span<const std::uint32_t> out_degrees, Rng& rng) {
    if (in_degrees.size() != out_degrees.size()) throw InputError("degree sequences differ in length");
    std::vector<VertexId> out_stubs = stubs_of(out_degrees);
    std::vector<VertexId> in_stubs = stubs_of(in_degrees);
    if (out_stubs.size() != in_stubs.size()) throw InputError("in- and out-degree sums differ");
    shuffle(in_stubs, rng);
    std::vector<std::pair<VertexId, VertexId>> edges(out_stubs.size());
    for (std::size_t i = 0; i < out_stubs.size(); ++i) edges[i] = {out_stubs[i], in_stubs[i]};
    return Graph::from_dense_edges(in_degrees.size(), edges, Directedness::directed);
}

namespace {

// One i.i.d. degree sequence, drawn as multinomial level counts plus
// individually drawn tail values. The sum is known before the sequence is
// laid out, so rejected attempts cost O(levels + tail draws), not O(n).
struct LevelDraw {
    std::vector<std::uint64_t> counts;
    std::vector<std::uint32_t> tail;
    std::uint64_t sum = 0;
};

LevelDraw draw_levels(std::size_t n, const ParetoTable& table, Rng& rng) {
    LevelDraw d;
    d.counts.resize(ParetoTable::kLevels);
    std::uint64_t left = n;
    double mass_left = 1.0;
    for (int j = 0; j < ParetoTable::kLevels && left > 0; ++j) {
        const double p = table.survival(j) - table.survival(j + 1);
        const double q = std::clamp(p / mass_left, 0.0, 1.0);
        std::binomial_distribution<std::uint64_t> bin(left, q);
        d.counts[j] = bin(rng);
        left -= d.counts[j];
        mass_left -= p;
        d.sum += d.counts[j] * static_cast<std::uint64_t>(table.level(j));
    }
    const double lo = table.tail_start();
    const double top = table.level(ParetoTable::kLevels);
    d.tail.reserve(left);
    for (std::uint64_t i = 0; i < left; ++i) {
        const double u = lo + (1.0 - lo) * rng.uniform01();
        d.tail.push_back(to_degree(std::max(top, table.closed_form(u))));
        d.sum += d.tail.back();
    }
    return d;
}

std::vector<std::uint32_t> lay_out(const LevelDraw& d, const ParetoTable& table, Rng& rng) {
    std::vector<std::uint32_t> seq;
    for (int j = 0; j < ParetoTable::kLevels; ++j) {
        seq.insert(seq.end(), d.counts[j], static_cast<std::uint32_t>(table.level(j)));
    }
    seq.insert(seq.end(), d.tail.begin(), d.tail.end());
    shuffle(seq, rng);
    return seq;
}

}  // namespace

Graph directed_config_model(std::size_t n, double alpha, double d_min, Rng& rng) {
    const auto in_degrees = pareto_degree_sequence(n, alpha, d_min, rng);
    const std::uint64_t target = std::accumulate(in_degrees.begin(), in_degrees.end(), std::uint64_t{0});
    const ParetoTable table(alpha, d_min);
    for (std::size_t attempt = 0; attempt < kDirectedCmMaxAttempts; ++attempt) {
        const LevelDraw d = draw_levels(n, table, rng);
        if (d.sum == target) {
            const auto out_degrees = lay_out(d, table, rng);
            return directed_config_model(in_degrees, out_degrees, rng);
        }
    }
    throw GenerationError("out-degree sum never matched in-degree sum after " +
                          std::to_string(kDirectedCmMaxAttempts) + " attempts");
}

Graphon named_graphon(GraphonId id, const GraphonConstants& k) {
    Graphon g;
    g.name = std::string(graphon_name(id));
    switch (id) {
        case GraphonId::product: {
            if (!(k.c > 0.0 && k.c < 1.0)) throw InputError("product graphon needs 0 < c < 1");
            const double c = k.c;
            g.forward = [c](double x, double y) { return c * x * y; };
            g.backward = g.forward;
            break;
        }
        case GraphonId::sum: {
            if (!(k.c > 0.0 && k.c < 0.5)) throw InputError("sum graphon needs 0 < c < 1/2");
            const double c = k.c;
            g.forward = [c](double x, double y) { return c * (x + y); };
            g.backward = g.forward;
            break;
        }
        case GraphonId::directed_opposed: {
            if (!(k.c > 0.0 && k.c < 1.0)) throw InputError("directed_opposed graphon needs 0 < c < 1");
            const double c = k.c;
            g.symmetric = false;
            g.forward = [c](double xi, double xj) { return c * xi * xj; };
            g.backward = [c](double xi, double xj) { return c * (1.0 - xi) * (1.0 - xj); };
            break;
        }
        case GraphonId::threshold: {
            auto in_unit = [](double v) { return v >= 0.0 && v <= 1.0; };
            if (!in_unit(k.c_high) || !in_unit(k.c_low) || !in_unit(k.p)) {
                throw InputError("threshold graphon constants must lie in [0,1]");
            }
            const double high = k.c_high, low = k.c_low, p = k.p;
            g.symmetric = false;
            // The probability depends on the target's coordinate only.
            g.forward = [=](double, double x_target) { return x_target < p ? high : low; };
            g.backward = [=](double x_target, double) { return x_target < p ? high : low; };
            break;
        }
    }
    return g;
}

Graph graphon_sample(std::size_t n, const Graphon& graphon, Directedness directedness, Rng& rng) {
    const bool directed = directedness == Directedness::directed;
    if (!directed && !graphon.symmetric) {
        throw InputError("graphon '" + graphon.name + "' is asymmetric; sample it as a directed graph");
    }
    std::vector<double> x(n);
    for (double& v : x) v = rng.uniform01();

    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId i = 0; i < n; ++i) {
        for (VertexId j = i + 1; j < n; ++j) {
            if (rng.bernoulli(checked(graphon.forward(x[i], x[j]), graphon.name))) edges.emplace_back(i, j);
            if (directed && rng.bernoulli(checked(graphon.backward(x[i], x[j]), graphon.name))) {
                edges.emplace_back(j, i);
            }
        }
    }
    return Graph::from_dense_edges(n, edges, directedness);
}

ModelSpec ModelSpec::parse(std::string_view text) {
    const auto colon = text.find(':');
    const std::string_view kind = text.substr(0, colon);
    ModelSpec spec;
    std::set<std::string_view> allowed;
    if (kind == "undirected_cm") {
        spec.kind = ModelKind::undirected_cm;
        allowed = {"n", "alpha", "d_min", "degrees"};
    } else if (kind == "directed_cm") {
        spec.kind = ModelKind::directed_cm;
        allowed = {"n", "alpha", "d_min"};
    } else if (kind == "graphon") {
        spec.kind = ModelKind::graphon;
        allowed = {"kernel", "n", "c", "c_high", "c_low", "p"};
    } else {
        throw InputError("unknown model '" + std::string(kind) + "'");
    }

    std::string_view rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
    std::vector<std::pair<std::string_view, std::string_view>> items;
    std::set<std::string_view> seen;
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string_view item = rest.substr(0, comma);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) throw InputError("model parameter '" + std::string(item) + "' is not key=value");
        const auto key = item.substr(0, eq);
        if (!allowed.contains(key)) {
            throw InputError("model '" + std::string(kind) + "' has no parameter '" + std::string(key) + "'");
        }
        if (!seen.insert(key).second) throw InputError("model parameter '" + std::string(key) + "' given twice");
        items.emplace_back(key, item.substr(eq + 1));
    }

    // The kernel decides the defaults for its constants, so resolve it first.
    for (const auto& [key, value] : items) {
        if (key != "kernel") continue;
        if (value == "product") spec.graphon = GraphonId::product;
        else if (value == "sum") spec.graphon = GraphonId::sum;
        else if (value == "directed_opposed") spec.graphon = GraphonId::directed_opposed;
        else if (value == "threshold") spec.graphon = GraphonId::threshold;
        else throw InputError("unknown graphon kernel '" + std::string(value) + "'");
    }
    spec.constants = default_constants(spec.graphon);

    for (const auto& [key, value] : items) {
        if (key == "n") spec.n = parse_unsigned(key, value);
        else if (key == "alpha") spec.alpha = parse_double(key, value);
        else if (key == "d_min") spec.d_min = parse_double(key, value);
        else if (key == "degrees") spec.degrees = parse_degree_groups(value);
        else if (key == "c") spec.constants.c = parse_double(key, value);
        else if (key == "c_high") spec.constants.c_high = parse_double(key, value);
        else if (key == "c_low") spec.constants.c_low = parse_double(key, value);
        else if (key == "p") spec.constants.p = parse_double(key, value);
    }
    if (!spec.degrees.empty()) {
        if (seen.contains("n") && spec.n != spec.degrees.size()) {
            throw InputError("n disagrees with the explicit degree sequence");
        }
        spec.n = spec.degrees.size();
    }
    spec.validate();
    return spec;
}

std::string ModelSpec::to_string() const {
    std::string out;
    switch (kind) {
        case ModelKind::undirected_cm:
        case ModelKind::directed_cm:
            out = kind == ModelKind::undirected_cm ? "undirected_cm:" : "directed_cm:";
            if (!degrees.empty()) {
                // Run-length encode back into COUNTxDEGREE groups.
                out += "degrees=";
                for (std::size_t i = 0; i < degrees.size();) {
                    std::size_t j = i;
                    while (j < degrees.size() && degrees[j] == degrees[i]) ++j;
                    if (i) out += '+';
                    out += std::to_string(j - i) + 'x' + std::to_string(degrees[i]);
                    i = j;
                }
            } else {
                out += "n=" + std::to_string(n) + ",alpha=" + format_double(alpha) + ",d_min=" + format_double(d_min);
            }
            break;
        case ModelKind::graphon:
            out = "graphon:kernel=" + std::string(graphon_name(graphon)) + ",n=" + std::to_string(n);
            if (graphon == GraphonId::threshold) {
                out += ",c_high=" + format_double(constants.c_high) + ",c_low=" + format_double(constants.c_low) +
                       ",p=" + format_double(constants.p);
            } else {
                out += ",c=" + format_double(constants.c);
            }
            break;
    }
    return out;
}

void ModelSpec::validate() const {
    if (n == 0) throw InputError("model size n must be >= 1");
    if (n > std::numeric_limits<VertexId>::max()) throw InputError("model size n too large");
    switch (kind) {
        case ModelKind::undirected_cm:
            if (!degrees.empty()) {
                if (degrees.size() != n) throw InputError("explicit degree sequence length differs from n");
                break;
            }
            check_pareto(alpha, d_min);
            break;
        case ModelKind::directed_cm: check_pareto(alpha, d_min); break;
        case ModelKind::graphon: named_graphon(graphon, constants); break;
    }
}

Directedness ModelSpec::directedness() const {
    switch (kind) {
        case ModelKind::undirected_cm: return Directedness::undirected;
        case ModelKind::directed_cm: return Directedness::directed;
        case ModelKind::graphon:
            return (graphon == GraphonId::product || graphon == GraphonId::sum) ? Directedness::undirected
                                                                                 : Directedness::directed;
    }
    return Directedness::directed;
}

Graph generate(const ModelSpec& spec, std::uint64_t seed) {
    spec.validate();
    Rng rng(seed);
    switch (spec.kind) {
        case ModelKind::undirected_cm: {
            if (!spec.degrees.empty()) return undirected_config_model(spec.degrees, rng);
            const auto degrees = pareto_degree_sequence(spec.n, spec.alpha, spec.d_min, rng);
            return undirected_config_model(degrees, rng);
        }
        case ModelKind::directed_cm: return directed_config_model(spec.n, spec.alpha, spec.d_min, rng);
        case ModelKind::graphon:
            return graphon_sample(spec.n, named_graphon(spec.graphon, spec.constants), spec.directedness(), rng);
    }
    throw InputError("unhandled model kind");
}

}  // namespace ccc
