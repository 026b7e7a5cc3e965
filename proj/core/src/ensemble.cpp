#include "ccc/ensemble.hpp"

#include <cmath>

#include "ccc/error.hpp"
#include "ccc/parallel.hpp"
#include "ccc/rng.hpp"

namespace ccc {

CccCurve replicate_curve(const ModelSpec& spec, const MeasureSpec& a, const MeasureSpec& b,
                         std::uint64_t seed, std::size_t replicate, unsigned kernel_threads) {
    const Graph graph = generate(spec, subseed(seed, replicate, kGraphStream));
    const ScoreVector ra = compute(graph, a, kernel_threads);
    const ScoreVector rb = compute(graph, b, kernel_threads);
    return ccc(ra, rb, subseed(seed, replicate, kTieStream));
}

EnsembleSummary summarize(const std::vector<CccCurve>& curves) {
    if (curves.empty()) throw InputError("no curves to summarize");
    const std::size_t n = curves.front().n;
    for (const auto& c : curves) {
        if (c.n != n) throw InputError("curves differ in length; replicates must share n");
    }
    EnsembleSummary s;
    s.n = n;
    s.replicates = curves.size();
    s.mean.assign(n, 0.0);
    s.std.assign(n, 0.0);
    const double count = static_cast<double>(curves.size());
    // Offsets from the first curve: identical replicates give that curve
    // exactly and a spread of exactly zero.
    const std::vector<double>& base = curves.front().values;
    for (const auto& c : curves) {
        for (std::size_t k = 0; k < n; ++k) s.mean[k] += c.values[k] - base[k];
    }
    for (std::size_t k = 0; k < n; ++k) s.mean[k] = base[k] + s.mean[k] / count;
    for (const auto& c : curves) {
        for (std::size_t k = 0; k < n; ++k) {
            const double d = c.values[k] - s.mean[k];
            s.std[k] += d * d;
        }
    }
    for (double& v : s.std) v = std::sqrt(v / count);
    return s;
}

EnsembleSummary run_ensemble(const ModelSpec& spec, const MeasureSpec& a, const MeasureSpec& b,
                             std::size_t replicates, std::uint64_t seed, unsigned threads) {
    if (replicates == 0) throw InputError("replicates must be >= 1");
    spec.validate();
    std::vector<CccCurve> curves(replicates);
    parallel_tasks(replicates, threads, [&](std::size_t r) {
        try {
            curves[r] = replicate_curve(spec, a, b, seed, r);
        } catch (const Error& e) {
            throw GenerationError("replicate " + std::to_string(r) + ": " + e.what());
        }
    });
    EnsembleSummary s = summarize(curves);
    s.spec = spec;
    s.measure_a = a;
    s.measure_b = b;
    s.seed = seed;
    return s;
}

}  // namespace ccc
