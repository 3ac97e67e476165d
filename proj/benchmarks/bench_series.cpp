#include <benchmark/benchmark.h>

#include "qzeta/accel.hpp"
#include "qzeta/solver.hpp"
#include "qzeta/wz.hpp"

using namespace qzeta;
using accel::SeriesId;
using accel::Zeta3Variant;

namespace {

const Rational kHalf(1, 2);

// Series pairs compared by the suite: naive first, accelerated second.
SeriesId series_for(int index) {
    switch (index) {
        case 0: return SeriesId::zeta(3);
        case 1: return SeriesId::z3(Zeta3Variant::V1);
        case 2: return SeriesId::amdeberhan();
        case 3: return SeriesId::zeta3_alt();
        case 4: return SeriesId::z3(Zeta3Variant::V2);
        case 5: return SeriesId::genfunc(Rational(1, 3));
        case 6: return SeriesId::bbb_t1(Rational(1, 3));
        default: return SeriesId::bbb_t2(Rational(1, 3));
    }
}

void BM_SumSeries(benchmark::State& state) {
    const SeriesId id = series_for(static_cast<int>(state.range(0)));
    const QContext ctx(kHalf, static_cast<int>(state.range(1)));
    int terms = 0;
    for (auto _ : state) {
        const SumResult r = accel::sum_series(id, ctx);
        terms = r.terms_used;
        benchmark::DoNotOptimize(r.value);
    }
    state.SetLabel(id.name());
    state.counters["terms"] = terms;
}
BENCHMARK(BM_SumSeries)->ArgsProduct({{0, 1, 2, 3, 4, 5, 6, 7}, {30, 100}})->Unit(benchmark::kMicrosecond);

void BM_TermsToTolerance(benchmark::State& state) {
    const SeriesId id = series_for(static_cast<int>(state.range(0)));
    const int digits = static_cast<int>(state.range(1));
    const QContext ctx(kHalf, digits);
    int terms = 0;
    for (auto _ : state) terms = accel::terms_to_tolerance(id, Rational::pow10(-digits), ctx);
    state.SetLabel(id.name());
    state.counters["terms"] = terms;
}
BENCHMARK(BM_TermsToTolerance)->ArgsProduct({{0, 1}, {10, 30, 60}})->Unit(benchmark::kMicrosecond);

void BM_FormulaS(benchmark::State& state) {
    const int s = static_cast<int>(state.range(0));
    const QContext ctx(kHalf, 30);
    const wz::MWZPair pair = wz::bbb_pair(Rational(1, 3), ctx, 96);
    int terms = 0;
    for (auto _ : state) {
        const wz::FormulaSums f = wz::sum_formula_s(pair, s, ctx);
        terms = f.rhs.terms_used;
        benchmark::DoNotOptimize(f.rhs.value);
    }
    state.counters["terms"] = terms;
}
BENCHMARK(BM_FormulaS)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_TelescopeBbb(benchmark::State& state) {
    const QContext ctx(kHalf);
    const wz::MWZPair pair = wz::bbb_pair(Rational(1, 4), ctx, 24);
    for (auto _ : state) benchmark::DoNotOptimize(wz::telescope_residual(pair, 20, 20, ctx).max_abs);
}
BENCHMARK(BM_TelescopeBbb)->Unit(benchmark::kMillisecond);

void BM_TelescopeZeta3(benchmark::State& state) {
    const QContext ctx(Rational(3, 2));
    const wz::MWZPair pair = wz::zeta3_pair({Rational(1), Rational(0)}, ctx, 24);
    for (auto _ : state) benchmark::DoNotOptimize(wz::telescope_residual(pair, 20, 20, ctx).max_abs);
}
BENCHMARK(BM_TelescopeZeta3)->Unit(benchmark::kMillisecond);

void BM_StepSolveZeta3(benchmark::State& state) {
    const QContext ctx(Rational(2));
    const wz::KernelSpec h = wz::zeta3_kernel(ctx);
    const auto w = wz::zeta3_mate_weight(ctx);
    for (auto _ : state)
        benchmark::DoNotOptimize(wz::step_solve(h, 1, 3, {Rational(1), Rational(0)}, ctx, static_cast<int>(state.range(0)), w));
}
BENCHMARK(BM_StepSolveZeta3)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
