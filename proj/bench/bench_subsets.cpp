// Serial reference against the OpenMP subset scan of the offset algorithm.

#include <benchmark/benchmark.h>

#include "kcr/congestion.hpp"

namespace {

/// NO instance: k demands from a 4-wide first layer through four complete
/// 4-wide layers into one target, so every subset of the scan fails late.
kcr::Instance workload(std::uint32_t k) {
    constexpr kcr::Vertex width = 4, layers = 5;
    std::vector<kcr::Edge> edges;
    for (kcr::Vertex l = 0; l + 1 < layers; ++l) {
        for (kcr::Vertex a = 0; a < width; ++a) {
            for (kcr::Vertex b = 0; b < width; ++b) edges.push_back({l * width + a, (l + 1) * width + b});
        }
    }
    const kcr::Vertex target = layers * width;
    for (kcr::Vertex a = 0; a < width; ++a) edges.push_back({(layers - 1) * width + a, target});
    kcr::Instance inst{kcr::Digraph(target + 1, edges), {}, k - 1};
    for (std::uint32_t i = 0; i < k; ++i) inst.demands.push_back({i % width, target});
    return inst;
}

void serial(benchmark::State& state) {
    const auto k = static_cast<std::uint32_t>(state.range(0));
    kcr::Instance inst = workload(k);
    for (auto _ : state) {
        auto r = kcr::solve_high_congestion_serial(inst.graph, inst.demands, 1);
        benchmark::DoNotOptimize(r);
        state.counters["subsets"] = static_cast<double>(r.subsets_tried);
    }
}

void parallel(benchmark::State& state) {
    const auto k = static_cast<std::uint32_t>(state.range(0));
    kcr::Instance inst = workload(k);
    kcr::HighCongestionOptions options;
    options.jobs = 0;
    for (auto _ : state) {
        auto r = kcr::solve_high_congestion(inst.graph, inst.demands, 1, options);
        benchmark::DoNotOptimize(r);
        state.counters["subsets"] = static_cast<double>(r.subsets_tried);
    }
}

}  // namespace

BENCHMARK(serial)->Arg(5)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(parallel)->Arg(5)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
