#include <benchmark/benchmark.h>

#include "qglab/duality.hpp"

using namespace qglab;

namespace {

const char* const names[] = {"c_z2", "c_s3", "cg_s3", "kp8"};

QuantumGroupPtr group(const benchmark::State& state) { return QuantumGroup::create(builtin(names[state.range(0)])); }

void BM_Validate(benchmark::State& state) {
    const HopfData d = builtin(names[state.range(0)]);
    for (auto _ : state) benchmark::DoNotOptimize(validate(d));
    state.SetLabel(names[state.range(0)]);
}
BENCHMARK(BM_Validate)->DenseRange(0, 3);

void BM_Convolve(benchmark::State& state) {
    const auto g = group(state);
    const Functional h = Functional::haar(g), e = Functional::counit(g);
    for (auto _ : state) benchmark::DoNotOptimize(convolve(h, e));
    state.SetLabel(names[state.range(0)]);
}
BENCHMARK(BM_Convolve)->DenseRange(0, 3);

void BM_EnumerateSearch(benchmark::State& state) {
    const auto g = group(state);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_idempotents(g, Strategy::Search, {}));
    state.SetLabel(names[state.range(0)]);
}
BENCHMARK(BM_EnumerateSearch)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_Join(benchmark::State& state) {
    const auto g = group(state);
    const auto states = enumerate_idempotents(g, Strategy::Auto, {}).states;
    const Tolerances tol;
    for (auto _ : state)
        for (std::size_t i = 1; i + 1 < states.size(); ++i) benchmark::DoNotOptimize(join(states[i], states[i + 1], tol));
    state.SetLabel(names[state.range(0)]);
}
BENCHMARK(BM_Join)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_Dual(benchmark::State& state) {
    const auto g = group(state);
    for (auto _ : state) benchmark::DoNotOptimize(dual(g));
    state.SetLabel(names[state.range(0)]);
}
BENCHMARK(BM_Dual)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_Pentagon(benchmark::State& state) {
    const auto g = group(state);
    const Mat w = kac_takesaki(*g);
    for (auto _ : state) benchmark::DoNotOptimize(pentagon_residual(w, g->dim()));
    state.SetLabel(names[state.range(0)]);
}
BENCHMARK(BM_Pentagon)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
