#include <benchmark/benchmark.h>

#include "ecarm/carmichael.hpp"
#include "ecarm/group_structure.hpp"
#include "ecarm/point_counting.hpp"

using namespace ecarm;

namespace {

const CurveQ kCurve(1, 1);

void BM_CountNaive(benchmark::State& state) {
  const CurveFp C = reduce_curve(kCurve, static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_naive(C));
}
BENCHMARK(BM_CountNaive)->Arg(10007)->Arg(99991)->Arg(1000003);

void BM_CountBsgs(benchmark::State& state) {
  const CurveFp C = reduce_curve(kCurve, static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_bsgs(C));
}
BENCHMARK(BM_CountBsgs)->Arg(10007)->Arg(1000003)->Arg(4294967311)->Arg(1099511627689);

void BM_GroupExponent(benchmark::State& state) {
  const CurveFp C = reduce_curve(kCurve, static_cast<std::uint64_t>(state.range(0)));
  const std::uint64_t N = count_points(C);
  for (auto _ : state) benchmark::DoNotOptimize(group_exponent(C, N));
}
BENCHMARK(BM_GroupExponent)->Arg(99991)->Arg(1000003)->Arg(1099511627689);

// Cold store every iteration, so this includes all point counting.
void BM_Search(benchmark::State& state) {
  for (auto _ : state) {
    const LCoefficientContext ctx(kCurve);
    benchmark::DoNotOptimize(search(ctx, static_cast<std::uint64_t>(state.range(0)),
                                    {.threads = static_cast<unsigned>(state.range(1))}));
  }
}
BENCHMARK(BM_Search)->Args({100000, 1})->Args({100000, 4})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
