#include "ccc_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "ccc/csv.hpp"
#include "ccc/curve.hpp"
#include "ccc/ensemble.hpp"
#include "ccc/error.hpp"
#include "ccc/measure.hpp"
#include "ccc/random_graphs.hpp"
#include "ccc/snap.hpp"
#include "ccc/svg.hpp"

namespace ccc::cli {

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

MeasureSpec measure_arg(const std::string& text) {
    try {
        return MeasureSpec::parse(text);
    } catch (const InputError& e) {
        throw UsageError(e.what());
    }
}

ModelSpec model_arg(const std::string& text) {
    try {
        ModelSpec spec = ModelSpec::parse(text);
        spec.validate();
        return spec;
    } catch (const InputError& e) {
        throw UsageError(e.what());
    }
}

TieRule tie_rule_arg(const std::string& text) {
    if (text == "hierarchical") return TieRule::hierarchical;
    if (text == "random_ties") return TieRule::random_ties;
    if (text == "primary_only") return TieRule::primary_only;
    throw UsageError("tie rule must be hierarchical, random_ties or primary_only, got '" + text + "'");
}

std::string tie_rule_name(TieRule rule) {
    switch (rule) {
        case TieRule::hierarchical: return "hierarchical";
        case TieRule::random_ties: return "random_ties";
        case TieRule::primary_only: return "primary_only";
    }
    return "?";
}

std::optional<Directedness> directedness_arg(bool directed, bool undirected) {
    if (directed) return Directedness::directed;
    if (undirected) return Directedness::undirected;
    return std::nullopt;
}

// Output is rendered in memory first so a failed write leaves no partial file
// behind a successful exit.
void write_file(const fs::path& path, const std::function<void(std::ostream&)>& render) {
    std::ostringstream buffer;
    render(buffer);
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open '" + path.string() + "' for writing");
    const std::string bytes = buffer.str();
    file.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!file) throw IoError("failed writing '" + path.string() + "'");
}

fs::path sidecar_path(fs::path csv) { return csv.replace_extension(".json"); }

void write_sidecar(const fs::path& csv, const Json& meta) {
    write_file(sidecar_path(csv), [&](std::ostream& os) { os << meta.dump(2) << '\n'; });
}

Graph load_input_graph(const std::string& path, std::optional<Directedness> forced) {
    if (!fs::exists(path)) throw IoError("no such file '" + path + "'");
    return load_graph(path, forced);
}

Json graph_meta(const Graph& g) {
    return Json{{"hash", g.canonical_hash_hex()},
                {"vertices", g.vertex_count()},
                {"edges", g.edge_count()},
                {"directed", g.directed()}};
}

std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

void report_distances(std::ostream& out, std::span<const double> values) {
    out << "distance identity=" << fixed(curve_distance(values, Reference::identity))
        << " square=" << fixed(curve_distance(values, Reference::square))
        << " opposed=" << fixed(curve_distance(values, Reference::opposed)) << '\n';
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> items;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) items.push_back(item);
    }
    return items;
}

struct Options {
    std::string input, graph, out, model, measure, measure_a, measure_b, tie_rule = "hierarchical";
    std::string refs = "identity,square,opposed", title;
    std::vector<std::string> curves, summaries, labels;
    std::uint64_t seed = 0;
    std::size_t replicates = 20;
    unsigned threads = 0;
    bool directed = false, undirected = false;
};

void add_direction_flags(CLI::App* cmd, Options& o) {
    auto* d = cmd->add_flag("--directed", o.directed, "treat the edge list as directed");
    auto* u = cmd->add_flag("--undirected", o.undirected, "treat the edge list as undirected");
    d->excludes(u);
}

int run_ingest(const Options& o, std::ostream& out) {
    const Graph g = load_input_graph(o.input, directedness_arg(o.directed, o.undirected));
    save_graph(g, o.out);
    out << "vertices=" << g.vertex_count() << " edges=" << g.edge_count()
        << " directed=" << (g.directed() ? "yes" : "no") << " hash=" << g.canonical_hash_hex() << '\n';
    return kExitOk;
}

int run_generate(const Options& o, std::ostream& out) {
    const ModelSpec spec = model_arg(o.model);
    const Graph g = generate(spec, o.seed);
    save_graph(g, o.out);
    out << "model=" << spec.to_string() << " seed=" << o.seed << " vertices=" << g.vertex_count()
        << " edges=" << g.edge_count() << " hash=" << g.canonical_hash_hex() << '\n';
    return kExitOk;
}

int run_centrality(const Options& o, std::ostream& out) {
    const MeasureSpec m = measure_arg(o.measure);
    const Graph g = load_input_graph(o.graph, directedness_arg(o.directed, o.undirected));
    const ScoreVector scores = compute(g, m, o.threads);
    write_file(o.out, [&](std::ostream& os) { write_scores_csv(scores, g.original_ids(), os); });
    write_sidecar(o.out, Json{{"kind", "scores"},
                              {"schema", "vertex,score"},
                              {"graph", graph_meta(g)},
                              {"measure", scores.measure}});
    out << "measure=" << scores.measure << " vertices=" << scores.size() << '\n';
    return kExitOk;
}

int run_ccc(const Options& o, std::ostream& out) {
    const MeasureSpec a = measure_arg(o.measure_a);
    const MeasureSpec b = measure_arg(o.measure_b);
    const TieRule rule = tie_rule_arg(o.tie_rule);
    const Graph g = load_input_graph(o.graph, directedness_arg(o.directed, o.undirected));
    const CccCurve curve = ccc(compute(g, a, o.threads), compute(g, b, o.threads), o.seed, rule);
    write_file(o.out, [&](std::ostream& os) { write_curve_csv(curve, os); });
    write_sidecar(o.out, Json{{"kind", "ccc"},
                              {"schema", "x,ccc"},
                              {"graph", graph_meta(g)},
                              {"measure_a", curve.measure_a},
                              {"measure_b", curve.measure_b},
                              {"seed", o.seed},
                              {"tie_rule", tie_rule_name(rule)}});
    out << "n=" << curve.n << " ccco(0.05)=" << fixed(ccco(curve, 0.05)) << '\n';
    report_distances(out, curve.values);
    return kExitOk;
}

int run_ensemble_cmd(const Options& o, std::ostream& out) {
    const ModelSpec spec = model_arg(o.model);
    const MeasureSpec a = measure_arg(o.measure_a);
    const MeasureSpec b = measure_arg(o.measure_b);
    if (o.replicates == 0) throw UsageError("--replicates must be at least 1");
    const EnsembleSummary summary = run_ensemble(spec, a, b, o.replicates, o.seed, o.threads);
    write_file(o.out, [&](std::ostream& os) { write_summary_csv(summary, os); });
    write_sidecar(o.out, Json{{"kind", "ensemble"},
                              {"schema", "x,mean,std"},
                              {"model", spec.to_string()},
                              {"replicates", summary.replicates},
                              {"measure_a", a.to_string()},
                              {"measure_b", b.to_string()},
                              {"seed", o.seed},
                              {"tie_rule", tie_rule_name(TieRule::hierarchical)}});
    out << "n=" << summary.n << " replicates=" << summary.replicates << '\n';
    report_distances(out, summary.mean);
    return kExitOk;
}

int run_plot(const Options& o, std::ostream& out) {
    std::vector<std::string> files = o.curves;
    files.insert(files.end(), o.summaries.begin(), o.summaries.end());
    if (files.empty()) throw UsageError("plot needs at least one --curve or --summary");
    if (!o.labels.empty() && o.labels.size() != files.size()) {
        throw UsageError("give one --label per curve (" + std::to_string(files.size()) + " expected)");
    }

    PlotSpec plot;
    plot.title = o.title;
    plot.identity = plot.square = plot.opposed = false;
    if (o.refs != "none") {
        for (const auto& ref : split_list(o.refs)) {
            if (ref == "identity") {
                plot.identity = true;
            } else if (ref == "square") {
                plot.square = true;
            } else if (ref == "opposed") {
                plot.opposed = true;
            } else {
                throw UsageError("unknown reference '" + ref + "' (identity, square, opposed, none)");
            }
        }
    }
    for (std::size_t i = 0; i < files.size(); ++i) {
        std::ifstream in(files[i]);
        if (!in) throw IoError("cannot open '" + files[i] + "'");
        CurveTable table = read_curve_csv(in);
        PlotSeries series{std::move(table.x), std::move(table.y), std::move(table.band),
                          o.labels.empty() ? fs::path(files[i]).stem().string() : o.labels[i]};
        plot.series.push_back(std::move(series));
    }
    const std::string svg = emit_svg(plot);
    write_file(o.out, [&](std::ostream& os) { os << svg; });
    out << "curves=" << plot.series.size() << " svg=" << o.out << '\n';
    return kExitOk;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Centrality comparison curves for graphs", "cccurve"};
    app.require_subcommand(1);
    Options o;

    auto* ingest = app.add_subcommand("ingest", "convert a SNAP edge list into a graph file");
    ingest->add_option("--input", o.input, "SNAP edge list")->required();
    ingest->add_option("--out", o.out, "graph file (.ccg for binary, otherwise SNAP text)")->required();
    add_direction_flags(ingest, o);

    auto* gen = app.add_subcommand("generate", "sample a random graph");
    gen->add_option("--model", o.model, "e.g. directed_cm:n=10000,alpha=3 or graphon:kernel=product,n=2000")
        ->required();
    gen->add_option("--seed", o.seed, "random seed")->required();
    gen->add_option("--out", o.out, "graph file")->required();

    auto* cent = app.add_subcommand("centrality", "compute one centrality measure");
    cent->add_option("--graph", o.graph, "graph file")->required();
    cent->add_option("--measure", o.measure, "measure descriptor name[:k=v,...]")->required();
    cent->add_option("--out", o.out, "scores CSV")->required();
    cent->add_option("--threads", o.threads, "worker threads (0 = all cores)");
    add_direction_flags(cent, o);

    auto* cmp = app.add_subcommand("ccc", "compare two measures on one graph");
    cmp->add_option("--graph", o.graph, "graph file")->required();
    cmp->add_option("--measure-a", o.measure_a, "first measure descriptor")->required();
    cmp->add_option("--measure-b", o.measure_b, "second measure descriptor")->required();
    cmp->add_option("--seed", o.seed, "seed of the tie-breaking uniforms")->required();
    cmp->add_option("--tie-rule", o.tie_rule, "hierarchical | random_ties | primary_only");
    cmp->add_option("--out", o.out, "curve CSV")->required();
    cmp->add_option("--threads", o.threads, "worker threads (0 = all cores)");
    add_direction_flags(cmp, o);

    auto* ens = app.add_subcommand("ensemble", "mean and std of curves over random graphs");
    ens->add_option("--model", o.model, "random graph model descriptor")->required();
    ens->add_option("--measure-a", o.measure_a, "first measure descriptor")->required();
    ens->add_option("--measure-b", o.measure_b, "second measure descriptor")->required();
    ens->add_option("--replicates", o.replicates, "number of graphs (default 20)");
    ens->add_option("--seed", o.seed, "master seed")->required();
    ens->add_option("--out", o.out, "summary CSV")->required();
    ens->add_option("--threads", o.threads, "worker threads (0 = all cores)");

    auto* plot = app.add_subcommand("plot", "render curves and summaries as SVG");
    plot->add_option("--curve", o.curves, "curve or summary CSV (repeatable)");
    plot->add_option("--summary", o.summaries, "summary CSV (repeatable)");
    plot->add_option("--label", o.labels, "legend label per input, in order (repeatable)");
    plot->add_option("--refs", o.refs, "comma list of identity,square,opposed or none");
    plot->add_option("--title", o.title, "figure title");
    plot->add_option("--out", o.out, "SVG file")->required();

    std::vector<const char*> argv{"cccurve"};
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "cccurve: usage: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*ingest) return run_ingest(o, out);
        if (*gen) return run_generate(o, out);
        if (*cent) return run_centrality(o, out);
        if (*cmp) return run_ccc(o, out);
        if (*ens) return run_ensemble_cmd(o, out);
        if (*plot) return run_plot(o, out);
    } catch (const UsageError& e) {
        err << "cccurve: usage: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "cccurve: parse: " << e.what() << '\n';
        return kExitFailure;
    } catch (const IoError& e) {
        err << "cccurve: io: " << e.what() << '\n';
        return kExitFailure;
    } catch (const std::exception& e) {
        err << "cccurve: error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace ccc::cli
