#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ccc/curve.hpp"
#include "ccc/measure.hpp"
#include "ccc/random_graphs.hpp"

namespace ccc {

/// Pointwise mean and population standard deviation of replicate curves.
struct EnsembleSummary {
    std::size_t n = 0;
    std::size_t replicates = 0;
    std::vector<double> mean;
    std::vector<double> std;
    ModelSpec spec;
    MeasureSpec measure_a;
    MeasureSpec measure_b;
    std::uint64_t seed = 0;
};

/// Replicate r: graph from generate(spec, subseed(seed, r, kGraphStream)),
/// both measures, then ccc with seed subseed(seed, r, kTieStream). Each
/// replicate depends only on (spec, measures, seed, r).
CccCurve replicate_curve(const ModelSpec& spec, const MeasureSpec& a, const MeasureSpec& b,
                         std::uint64_t seed, std::size_t replicate, unsigned kernel_threads = 1);

/// Two-pass mean / population std over curves of equal length, summed in
/// the order given.
EnsembleSummary summarize(const std::vector<CccCurve>& curves);

/// Runs `replicates` replicates on up to `threads` workers (0 = hardware
/// concurrency) and summarizes them in replicate order, so the result does
/// not depend on scheduling. A failing replicate aborts the run with an
/// error naming its index.
EnsembleSummary run_ensemble(const ModelSpec& spec, const MeasureSpec& a, const MeasureSpec& b,
                             std::size_t replicates, std::uint64_t seed, unsigned threads = 0);

}  // namespace ccc
