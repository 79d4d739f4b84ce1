#include <benchmark/benchmark.h>

#include "rislink/experiments.hpp"
#include "rislink/optimize.hpp"

using namespace rislink;

namespace {

const ExperimentConfig& reference() {
    static const ExperimentConfig cfg;
    return cfg;
}

void bm_closed_form_snr(benchmark::State& state) {
    const LinkGains g = reference().gains();
    const RisScenario s = RisScenario::hris(400, 1000, 20, 50.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(snr_closed_form(s, g));
    }
}
BENCHMARK(bm_closed_form_snr);

void bm_aligned_vector_snr(benchmark::State& state) {
    const LinkGains g = reference().gains();
    const auto n = static_cast<std::size_t>(state.range(0));
    const RisScenario s = RisScenario::aris(400, n, 50.0);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(aligned_vector_snr(s, g, ++seed));
    }
}
BENCHMARK(bm_aligned_vector_snr)->Arg(20)->Arg(256)->Arg(1000)->Unit(benchmark::kMicrosecond);

void bm_optimal_aris(benchmark::State& state) {
    const LinkGains g = reference().gains();
    const PowerBudget b = reference().point_budget();
    for (auto _ : state) {
        benchmark::DoNotOptimize(optimal_aris(g, b, 400));
    }
}
BENCHMARK(bm_optimal_aris);

void bm_brute_force_aris(benchmark::State& state) {
    const LinkGains g = reference().gains();
    const PowerBudget b = reference().point_budget();
    for (auto _ : state) {
        benchmark::DoNotOptimize(brute_force_aris(g, b, 400));
    }
}
BENCHMARK(bm_brute_force_aris)->Unit(benchmark::kMicrosecond);

void bm_hris_allocate(benchmark::State& state) {
    const LinkGains g = reference().gains();
    const PowerBudget b = reference().point_budget();
    for (auto _ : state) {
        benchmark::DoNotOptimize(hris_allocate(g, b, 400, 20));
    }
}
BENCHMARK(bm_hris_allocate)->Unit(benchmark::kMicrosecond);

void bm_reproduce(benchmark::State& state) {
    const std::string fig = "fig" + std::to_string(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(reproduce(fig, reference()));
    }
}
BENCHMARK(bm_reproduce)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
