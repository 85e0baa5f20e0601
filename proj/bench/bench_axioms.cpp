#include <benchmark/benchmark.h>

#include "hopfrob/builders.hpp"
#include "hopfrob/yd.hpp"

using namespace hopfrob;

namespace {

// Exhaustive axiom verification; range(0) selects serial (0) or parallel (1).
void BM_verify_sl2(benchmark::State& state) {
    static HopfPtr u = small_quantum_sl2(3);
    const Exec exec = state.range(0) ? Exec::Parallel : Exec::Serial;
    for (auto _ : state) benchmark::DoNotOptimize(verify_hopf(*u, exec, true).all_pass());
}
BENCHMARK(BM_verify_sl2)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_verify_double(benchmark::State& state) {
    static HopfPtr d = drinfeld_double(kac_paljutkin()).H;
    const Exec exec = state.range(0) ? Exec::Parallel : Exec::Serial;
    for (auto _ : state) benchmark::DoNotOptimize(verify_hopf(*d, exec, true).all_pass());
}
BENCHMARK(BM_verify_double)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_drinfeld_double(benchmark::State& state) {
    HopfPtr h = kac_paljutkin();
    for (auto _ : state) benchmark::DoNotOptimize(drinfeld_double(h).H->dim);
}
BENCHMARK(BM_drinfeld_double)->Unit(benchmark::kMillisecond);

void BM_frobenius_context_sl2(benchmark::State& state) {
    HopfPtr u = small_quantum_sl2(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(make_frobenius_context(sl2_cartan(u, static_cast<int>(state.range(0)))).r);
}
BENCHMARK(BM_frobenius_context_sl2)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_induced_coaction(benchmark::State& state) {
    static const FrobeniusContext ctx = make_frobenius_context(kac_paljutkin_inclusion());
    auto simples = klein_yd_simples(ctx.incl.K);
    for (auto _ : state)
        for (const auto& s : simples) benchmark::DoNotOptimize(induced_coaction(ctx, s).rows());
}
BENCHMARK(BM_induced_coaction)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
