// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
// Thresholds marked as frozen come from tests/golden, written by ccc_pilot on
// seeds disjoint from the ones used here.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "ccc/centrality.hpp"
#include "ccc/curve.hpp"
#include "ccc/error.hpp"
#include "ccc/measure.hpp"
#include "ccc/random_graphs.hpp"
#include "ccc/rng.hpp"
#include "oracle.hpp"
#include "scenarios.hpp"

using namespace ccc;

namespace {

constexpr std::uint64_t kSeed = 20160914;

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

double golden(const std::string& file, const std::string& key) {
    std::ifstream in(std::string(CCC_GOLDEN_DIR) + "/" + file);
    if (!in) throw IoError("missing golden file " + file);
    return nlohmann::json::parse(in).at(key).get<double>();
}

bool is_identity(const CccCurve& c) {
    for (std::size_t k = 1; k <= c.n; ++k) {
        if (c.values[k - 1] != static_cast<double>(k) / static_cast<double>(c.n)) return false;
    }
    return true;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return INFINITY;
    double worst = 0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

// -- 1 ---------------------------------------------------------------------

Outcome identity_property() {
    std::mt19937_64 gen(kSeed + 1);
    const char* kernels[] = {"product", "sum", "directed_opposed", "threshold"};
    std::size_t curves = 0, skipped = 0, broken = 0;
    for (int t = 0; t < 20; ++t) {
        ModelSpec model;
        switch (t % 4) {
            case 0: model = ModelSpec::parse("directed_cm:n=" + std::to_string(std::uniform_int_distribution<int>(200, 2000)(gen)) + ",alpha=3"); break;
            case 1: model = ModelSpec::parse("undirected_cm:n=" + std::to_string(std::uniform_int_distribution<int>(200, 2000)(gen)) + ",alpha=2.5"); break;
            default: model = scenario::graphon(kernels[(t / 4 + t % 4) % 4], std::uniform_int_distribution<int>(100, 400)(gen));
        }
        const Graph g = generate(model, gen());
        for (const auto& spec : all_measures()) {
            ScoreVector r;
            try {
                r = compute(g, spec);
            } catch (const DegenerateSpectrumError&) {
                ++skipped;
                continue;
            }
            ++curves;
            if (!is_identity(ccc::ccc(r, r, gen()))) ++broken;
        }
    }
    return {broken == 0, fmt("%zu curves over 20 graphs, %zu not the identity, %zu undefined", curves, broken, skipped)};
}

// -- 2 ---------------------------------------------------------------------

// Scores on the grid j/1024, j < 2^15: every transform below stays strictly
// increasing on these values in double precision (checked, not assumed).
std::vector<double> grid_scores(std::mt19937_64& gen, std::size_t n) {
    const int levels[] = {2, 5, 40, 1000, 1 << 15};
    const int m = levels[std::uniform_int_distribution<int>(0, 4)(gen)];
    std::uniform_int_distribution<int> j(0, m - 1);
    std::vector<double> v(n);
    for (double& x : v) x = j(gen) / 1024.0;
    return v;
}

const std::vector<std::function<double(double)>>& transforms() {
    static const std::vector<std::function<double(double)>> t = {
        [](double x) { return 2 * x + 1; },
        [](double x) { return x * x * x + x; },
        [](double x) { return std::exp(x / 4); },
        [](double x) { return std::log1p(x); },
        [](double x) { return std::atan(x); },
    };
    return t;
}

bool strictly_increasing_on(const std::function<double(double)>& f, std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    for (std::size_t i = 1; i < xs.size(); ++i) {
        if (!(f(xs[i - 1]) < f(xs[i]))) return false;
    }
    return true;
}

std::vector<double> apply(const std::function<double(double)>& f, const std::vector<double>& xs) {
    std::vector<double> out(xs.size());
    std::transform(xs.begin(), xs.end(), out.begin(), f);
    return out;
}

Outcome symmetry_and_invariance() {
    std::mt19937_64 gen(kSeed + 2);
    const auto& t = transforms();
    std::size_t asym = 0, variant = 0, bad_transform = 0, checks = 0;
    for (int pair = 0; pair < 100; ++pair) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 2000)(gen);
        const auto r = grid_scores(gen, n), s = grid_scores(gen, n);
        const std::uint64_t seed = gen();
        const CccCurve base = ccc_scores(r, s, seed);
        if (ccc_scores(s, r, seed).values != base.values) ++asym;
        for (std::size_t i = 0; i < t.size(); ++i) {
            const auto& f = t[i];
            const auto& g = t[(i + 1 + pair) % t.size()];
            if (!strictly_increasing_on(f, r) || !strictly_increasing_on(g, s)) ++bad_transform;
            if (ccc_scores(apply(f, r), apply(g, s), seed).values != base.values) ++variant;
            ++checks;
        }
    }
    return {asym == 0 && variant == 0 && bad_transform == 0,
            fmt("100 pairs: %zu asymmetric; %zu/%zu transformed pairs differ; %zu transforms not monotone on data",
                asym, variant, checks, bad_transform)};
}

// -- 3 ---------------------------------------------------------------------

Outcome bounds_suite() {
    std::mt19937_64 gen(kSeed + 3);
    const TieRule rules[] = {TieRule::hierarchical, TieRule::random_ties, TieRule::primary_only};
    std::size_t violations = 0, curves = 0;
    for (int pair = 0; pair < 1200; ++pair) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 300)(gen);
        const auto r = grid_scores(gen, n), s = grid_scores(gen, n);
        const CccCurve c = ccc_scores(r, s, gen(), rules[pair % 3]);
        ++curves;
        const double dn = static_cast<double>(n);
        bool ok = c.values.size() == n && c.values.back() == 1.0;
        for (std::size_t k = 1; ok && k <= n; ++k) {
            const double v = c.values[k - 1];
            const double lower = std::max(0.0, (2.0 * static_cast<double>(k) - dn) / dn);
            ok = lower <= v && v <= static_cast<double>(k) / dn && (k == 1 || c.values[k - 2] <= v);
        }
        if (!ok) ++violations;
    }
    return {violations == 0, fmt("%zu curves, %zu violate bounds/monotonicity/terminal value", curves, violations)};
}

// -- 4 ---------------------------------------------------------------------

Outcome independence_law() {
    constexpr std::size_t n = 10000;
    constexpr int runs = 200;
    std::vector<double> r(n);
    std::iota(r.begin(), r.end(), 0.0);
    std::vector<double> sum(n, 0.0);
    for (int run = 0; run < runs; ++run) {
        std::vector<double> s(n);
        std::iota(s.begin(), s.end(), 0.0);
        Rng rng(subseed(kSeed + 4, static_cast<std::uint64_t>(run)));
        for (std::size_t i = n; i > 1; --i) std::swap(s[i - 1], s[rng.below(i)]);
        const CccCurve c = ccc_scores(r, s, 0);
        for (std::size_t k = 0; k < n; ++k) sum[k] += c.values[k];
    }
    const double dn = n;
    std::size_t outside = 0;
    double worst_z = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        const double dk = static_cast<double>(k);
        const double mean = sum[k - 1] / runs;
        const double want = dk * dk / (dn * dn);
        // Overlap of two uniform k-subsets is hypergeometric(n, k, k).
        const double var = dk * (dk / dn) * (1 - dk / dn) * (dn - dk) / (dn - 1);
        const double se = std::sqrt(var) / dn / std::sqrt(static_cast<double>(runs));
        const double err = std::abs(mean - want);
        if (se == 0.0) {
            if (err > 1e-12) ++outside;
            continue;
        }
        worst_z = std::max(worst_z, err / se);
        if (err > 4 * se) ++outside;
    }
    return {outside == 0, fmt("n=%zu, %d permutations: %zu of %zu points beyond 4 SE (largest |z| = %.2f)", n, runs,
                              outside, n, worst_z)};
}

// -- 5 ---------------------------------------------------------------------

Outcome oracle_equivalence() {
    std::mt19937_64 gen(kSeed + 5);
    double worst[7] = {};
    const char* names[7] = {"betweenness", "load", "closeness", "harmonic", "pagerank", "katz", "eigenvector"};
    int eigen_compared = 0;
    for (int t = 0; t < 100; ++t) {
        const auto sg = oracle::random_small_graph(gen, 1, 7, 2.5);
        const Graph g = sg.build();
        auto note = [&](int i, const std::vector<double>& got, const std::vector<double>& want) {
            worst[i] = std::max(worst[i], max_abs_diff(got, want));
        };
        note(0, betweenness(g).scores, oracle::betweenness(sg, std::nullopt));
        note(1, load(g).scores, oracle::load(sg, std::nullopt));
        for (bool in : {true, false}) {
            const auto o = in ? Orientation::incoming : Orientation::outgoing;
            note(2, closeness(g, o).scores, oracle::closeness(sg, in));
            note(3, harmonic(g, o).scores, oracle::harmonic(sg, in));
        }
        note(4, pagerank(g, 0.85, 1e-13).scores, oracle::pagerank(sg, 0.85));
        const double alpha = oracle::nilpotent(sg) ? 0.5 : 0.85 / oracle::spectral_radius(sg);
        note(5, katz(g, alpha).scores, oracle::katz(sg, alpha, true));
        note(5, katz(g, alpha, Orientation::outgoing).scores, oracle::katz(sg, alpha, false));
        if (const auto x = oracle::eigenvector(sg)) {
            note(6, eigenvector(g, 1e-13).scores, *x);
            ++eigen_compared;
        }
    }
    bool pass = eigen_compared > 0;
    std::string detail = "max abs error:";
    for (int i = 0; i < 7; ++i) {
        pass = pass && worst[i] <= 1e-9;
        detail += fmt(" %s %.1e", names[i], worst[i]);
    }
    detail += fmt(" (eigenvector defined on %d/100 graphs)", eigen_compared);
    return {pass, detail};
}

// -- 6 ---------------------------------------------------------------------

Outcome fixed_point_residuals() {
    Rng rng(kSeed + 6);
    const Graph g = directed_config_model(10000, 3.0, 1.0, rng);
    const double c = 0.85;
    const auto pr = pagerank(g, c).scores;
    double residual = 0;
    for (VertexId i = 0; i < g.vertex_count(); ++i) {
        double s = 0;
        for (const auto& a : g.in_adj(i)) {
            s += a.multiplicity * pr[a.vertex] / static_cast<double>(g.degree(a.vertex, DegreeMode::out));
        }
        residual = std::max(residual, std::abs(c * s + (1 - c) - pr[i]));
    }

    // alpha * lambda = 0.6 keeps the tail beyond 50 terms below 1e-9 relative.
    std::mt19937_64 gen(kSeed + 6);
    double katz_gap = 0, solve_gap = 0;
    for (int t = 0; t < 200; ++t) {
        const auto sg = oracle::random_small_graph(gen, 1, 10, 2.0);
        const double alpha = oracle::nilpotent(sg) ? 0.5 : 0.6 / oracle::spectral_radius(sg);
        for (bool in : {true, false}) {
            const auto got = katz(sg.build(), alpha, in ? Orientation::incoming : Orientation::outgoing).scores;
            katz_gap = std::max(katz_gap, max_abs_diff(got, oracle::katz_truncated(sg, alpha, 50, in)));
            solve_gap = std::max(solve_gap, max_abs_diff(got, oracle::katz(sg, alpha, in)));
        }
    }
    // solve_gap is diagnostic only: it separates solver error from the
    // walk-sum tail beyond depth 50.
    return {residual <= 1e-10 && katz_gap <= 1e-8,
            fmt("pagerank residual %.2e on n=10000; katz vs depth-50 sum %.2e, vs dense solve %.2e, "
                "200 graphs n<=10",
                residual, katz_gap, solve_gap)};
}

// -- 7 ---------------------------------------------------------------------

Outcome tie_break_pathology() {
    const double floor = golden("tie_break.json", "min_distance_random_ties");
    const double random_rule = scenario::tie_break_distance(kSeed + 7, TieRule::random_ties);
    const double hierarchical = scenario::tie_break_distance(kSeed + 7, TieRule::hierarchical);
    return {random_rule > floor && hierarchical == 0.0,
            fmt("random_ties distance %.4f (> %.3f frozen); hierarchical distance %.4f", random_rule, floor,
                hierarchical)};
}

// -- 8 / 9 -----------------------------------------------------------------

Outcome pagerank_indegree_ensemble() {
    const double cap = golden("pagerank_indegree_ensemble.json", "max_std");
    const auto st = scenario::pagerank_vs_indegree(kSeed + 8);
    return {st.min_gap_over_square > 0.0 && st.max_std <= cap,
            fmt("min(mean - x^2) on [0.05,0.95] = %.4f; max std %.4f (<= %.3f frozen)", st.min_gap_over_square,
                st.max_std, cap)};
}

Outcome damping_robustness() {
    const auto st = scenario::damping_pair(kSeed + 9);
    return {st.dist_identity < st.dist_square,
            fmt("PR(0.3) vs PR(0.9) mean curve: distance to identity %.4f, to x^2 %.4f", st.dist_identity,
                st.dist_square)};
}

// -- 10 / 11 / 12 ----------------------------------------------------------

Outcome product_graphon_identity() {
    const double cap = golden("product_graphon.json", "max_distance");
    const double d = scenario::product_distance(kSeed + 10);
    return {d <= cap, fmt("in-degree vs pagerank distance to identity %.4f (<= %.3f)", d, cap)};
}

Outcome opposed_graphon() {
    const double cap = golden("opposed_graphon.json", "max_distance");
    const double d = scenario::opposed_distance(kSeed + 11);
    return {d <= cap, fmt("in- vs out-degree distance to max(0,2x-1) %.4f (<= %.3f)", d, cap)};
}

Outcome threshold_graphon() {
    const Graph g = generate(scenario::graphon("threshold", scenario::kGraphonN), subseed(kSeed + 12, 0, kGraphStream));
    const std::uint64_t ties = subseed(kSeed + 12, 0, kTieStream);
    const ScoreVector pr = compute(g, MeasureSpec::pagerank());
    const double in_pr = curve_distance(ccc::ccc(compute(g, MeasureSpec::in_degree()), pr, ties), Reference::identity);
    const double out_pr = curve_distance(ccc::ccc(compute(g, MeasureSpec::out_degree()), pr, ties), Reference::identity);
    return {in_pr < out_pr, fmt("distance to identity: in-degree vs pagerank %.4f, out-degree vs pagerank %.4f",
                                in_pr, out_pr)};
}

// -- 13 --------------------------------------------------------------------

Outcome truncated_betweenness() {
    const Graph g = generate(scenario::directed_cm(5000), subseed(kSeed + 13, 0, kGraphStream));
    const std::uint64_t ties = subseed(kSeed + 13, 0, kTieStream);
    const ScoreVector full = compute(g, MeasureSpec::betweenness());
    const ScoreVector local = compute(g, MeasureSpec::betweenness(6));
    const ScoreVector noise = compute(g, MeasureSpec::random(kSeed + 13));
    const double local_o = ccco(ccc::ccc(local, full, ties), 0.05);
    const double noise_o = ccco(ccc::ccc(noise, full, ties), 0.05);
    return {local_o >= 5 * noise_o && local_o > 0,
            fmt("CCCo(0.05): betweenness-6 vs betweenness %.4f, random vs betweenness %.4f (ratio %.1f)", local_o,
                noise_o, noise_o > 0 ? local_o / noise_o : INFINITY)};
}

// -- 14 --------------------------------------------------------------------

Outcome performance_envelope() {
    const Graph g = generate(scenario::directed_cm(100000), subseed(kSeed + 14, 0, kGraphStream));
    const std::uint64_t ties = subseed(kSeed + 14, 0, kTieStream);
    const ScoreVector in = compute(g, MeasureSpec::in_degree());
    const ScoreVector out = compute(g, MeasureSpec::out_degree());
    const ScoreVector pr = compute(g, MeasureSpec::pagerank());
    const ScoreVector kz = compute(g, MeasureSpec::katz());
    double checksum = 0;
    for (const auto* pair : {&pr, &kz, &out}) checksum += ccco(ccc::ccc(*pair, in, ties), 0.05);
    return {true, fmt("directed CM n=100000, m=%zu: degree, pagerank, katz, 3 curves (checksum %.4f)",
                      g.edge_count(), checksum)};
}

struct Criterion {
    int id;
    const char* name;
    Outcome (*run)();
    double budget_s;  // 0 = no stated runtime bound
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {1, "identity property", identity_property, 60},
        {2, "symmetry and monotone invariance", symmetry_and_invariance, 0},
        {3, "bounds suite", bounds_suite, 0},
        {4, "independence law", independence_law, 120},
        {5, "oracle equivalence", oracle_equivalence, 60},
        {6, "fixed-point residuals", fixed_point_residuals, 0},
        {7, "tie-break pathology", tie_break_pathology, 0},
        {8, "pagerank vs in-degree ensemble", pagerank_indegree_ensemble, 600},
        {9, "damping robustness", damping_robustness, 0},
        {10, "product graphon identity", product_graphon_identity, 0},
        {11, "opposed graphon", opposed_graphon, 0},
        {12, "threshold graphon", threshold_graphon, 0},
        {13, "truncated betweenness", truncated_betweenness, 900},
        {14, "performance envelope", performance_envelope, 300},
    };
    std::printf("hardware threads: %u\n", std::thread::hardware_concurrency());
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::string timing = fmt("%.1f s", secs);
        if (c.budget_s > 0) {
            timing += fmt(" of %.0f s", c.budget_s);
            if (secs >= c.budget_s) o.pass = false;
        }
        if (!o.pass) ++failures;
        std::printf("%s %2d %s: %s [%s]\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(),
                    timing.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
    return failures == 0 ? 0 : 1;
}
