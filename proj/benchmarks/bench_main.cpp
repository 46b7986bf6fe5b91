#include <benchmark/benchmark.h>

#include "twlga/calibration.hpp"
#include "twlga/chromosome.hpp"
#include "twlga/cluster_sim.hpp"
#include "twlga/evolve.hpp"
#include "twlga/fitness.hpp"

using namespace twlga;

static void BM_Fitness(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto inst = generate_instance(n, 8, 4.0, 1);
    const auto workloads = inst.workloads();
    Rng rng(1);
    const auto c = random_chromosome(n, 8, rng);
    for (auto _ : state) benchmark::DoNotOptimize(fitness(c, inst.etc, workloads, FitnessMode::Twlga));
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Fitness)->Arg(8)->Arg(64)->Arg(512);

static void BM_Evolve(benchmark::State& state) {
    const auto inst = generate_instance(static_cast<std::size_t>(state.range(0)), 4, 4.0, 2);
    GaParams p;
    for (auto _ : state) {
        benchmark::DoNotOptimize(evolve(inst, p));
        ++p.seed;
    }
}
BENCHMARK(BM_Evolve)->Arg(8)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_Simulate(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto inst = generate_instance(n, 8, 4.0, 3);
    Rng rng(3);
    const auto a = decode(random_chromosome(n, 8, rng), 8);
    const OverheadModel m{1.0, 2.0, 50.0, 10.0};
    for (auto _ : state) benchmark::DoNotOptimize(simulate(a, inst, m));
}
BENCHMARK(BM_Simulate)->Arg(16)->Arg(256);

static void BM_CalibrateReference(benchmark::State& state) {
    const auto obs = reference_observations();
    for (auto _ : state) benchmark::DoNotOptimize(calibrate(OverheadModel{}, obs));
}
BENCHMARK(BM_CalibrateReference)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
