#include "tricm/cmcheck.hpp"
#include "tricm/complex.hpp"
#include "tricm/homology.hpp"
#include "tricm/ideals.hpp"

#include <benchmark/benchmark.h>

using namespace tricm;

static void BM_EnumerateDelta(benchmark::State& state) {
    const auto g = triangular(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(independent_set_counts(g));
}
BENCHMARK(BM_EnumerateDelta)->DenseRange(7, 11, 2)->Unit(benchmark::kMillisecond);

static void BM_BuildComplex(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(triangular_complex(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BuildComplex)->Arg(9)->Arg(11)->Unit(benchmark::kMillisecond);

// range(1) == 0 means Q, otherwise the characteristic
static void BM_BettiDelta(benchmark::State& state) {
    const auto c = triangular_complex(static_cast<int>(state.range(0)));
    const auto field = FieldSpec::with_characteristic(static_cast<std::uint32_t>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(reduced_betti_table(c, field));
}
BENCHMARK(BM_BettiDelta)->Args({7, 0})->Args({9, 0})->Args({9, 2})->Args({9, 1000003})->Unit(benchmark::kMillisecond);

static void BM_RankTopBoundary(benchmark::State& state) {
    const auto m = boundary_matrix(triangular_complex(9), 3, FieldSpec::rationals());
    for (auto _ : state) {
        if (state.range(0) == 0) benchmark::DoNotOptimize(rank_rational(m));
        else benchmark::DoNotOptimize(rank_mod_p(m, 1000003));
    }
    state.SetLabel(state.range(0) == 0 ? "sparse Q" : "F_p");
}
BENCHMARK(BM_RankTopBoundary)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);

// dense Bareiss is only competitive on small or dense inputs
static void BM_RankBareissDelta7(benchmark::State& state) {
    const auto m = boundary_matrix(triangular_complex(7), 2, FieldSpec::rationals());
    for (auto _ : state) benchmark::DoNotOptimize(state.range(0) ? rank_bareiss_dense(m) : rank_rational(m));
    state.SetLabel(state.range(0) ? "dense Bareiss" : "sparse");
}
BENCHMARK(BM_RankBareissDelta7)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);

static void BM_ReisnerCheckGeneric(benchmark::State& state) {
    const auto c = triangular_complex(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(reisner_check(c, FieldSpec::rationals()));
}
BENCHMARK(BM_ReisnerCheckGeneric)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

static void BM_VerifyRegular(benchmark::State& state) {
    const auto g = triangular(static_cast<int>(state.range(0)));
    const auto seq = hsop(g, state.range(1) ? HsopKind::power_sums : HsopKind::independent_set_sums);
    for (auto _ : state) benchmark::DoNotOptimize(verify_regular(g, seq, FieldSpec::prime(1000003)));
}
BENCHMARK(BM_VerifyRegular)->Args({5, 0})->Args({7, 0})->Args({7, 1})->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
