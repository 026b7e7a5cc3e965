#include <benchmark/benchmark.h>

#include <map>

#include "ccc/centrality.hpp"
#include "ccc/curve.hpp"
#include "ccc/random_graphs.hpp"
#include "ccc/rng.hpp"

namespace {

// One directed CM per size, built on first use and shared across benchmarks.
const ccc::Graph& graph(std::size_t n) {
    static std::map<std::size_t, ccc::Graph> cache;
    auto it = cache.find(n);
    if (it == cache.end()) {
        ccc::Rng rng(n);
        it = cache.emplace(n, ccc::directed_config_model(n, 3.0, 1.0, rng)).first;
    }
    return it->second;
}

void BM_DirectedCm(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::uint64_t seed = 1;
    for (auto _ : state) {
        ccc::Rng rng(seed++);
        benchmark::DoNotOptimize(ccc::directed_config_model(n, 3.0, 1.0, rng));
    }
}

void BM_PageRank(benchmark::State& state) {
    const auto& g = graph(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(ccc::pagerank(g));
}

void BM_Katz(benchmark::State& state) {
    const auto& g = graph(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(ccc::katz(g));
}

void BM_Betweenness(benchmark::State& state) {
    const auto& g = graph(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(ccc::betweenness(g, std::nullopt, 1));
}

void BM_BetweennessRadius6(benchmark::State& state) {
    const auto& g = graph(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(ccc::betweenness(g, 6u, 1));
}

void BM_Curve(benchmark::State& state) {
    const auto& g = graph(static_cast<std::size_t>(state.range(0)));
    const auto in = ccc::degree_centrality(g, ccc::DegreeMode::in);
    const auto pr = ccc::pagerank(g);
    for (auto _ : state) benchmark::DoNotOptimize(ccc::ccc(pr, in, 7));
}

}  // namespace

BENCHMARK(BM_DirectedCm)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PageRank)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Katz)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Betweenness)->Arg(5000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BetweennessRadius6)->Arg(5000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Curve)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
