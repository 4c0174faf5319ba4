#include <benchmark/benchmark.h>

#include "braidpbw/nichols.hpp"
#include "braidpbw/uqsl2.hpp"
#include "braidpbw/verify.hpp"

using namespace braidpbw;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

void BM_SymmetrizerL2(benchmark::State& state) {
  const Braiding c = build_braiding(2).braiding;
  for (auto _ : state) benchmark::DoNotOptimize(symmetrizer(c, 4, exec_of(state)));
}

void BM_SymmetrizerRandomQ(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const Braiding c = random_triangular_braiding(rng, 3, FieldSpec::rationals());
  for (auto _ : state) benchmark::DoNotOptimize(symmetrizer(c, 5, exec_of(state)));
}

void BM_RankL1(benchmark::State& state) {
  const Matrix s = symmetrizer(build_braiding(1).braiding, 6);
  for (auto _ : state) benchmark::DoNotOptimize(rank_exact(s, exec_of(state)));
}

void BM_RankL3(benchmark::State& state) {
  const Matrix s = symmetrizer(build_braiding(3).braiding, 3);
  for (auto _ : state) benchmark::DoNotOptimize(rank_exact(s, exec_of(state)));
}

void BM_KernelRandomGF5(benchmark::State& state) {
  std::mt19937_64 rng(11);
  const Matrix s = symmetrizer(random_triangular_braiding(rng, 3, FieldSpec::prime_field(5)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(s, exec_of(state)));
}

} // namespace

BENCHMARK(BM_SymmetrizerL2)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SymmetrizerRandomQ)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankL1)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankL3)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KernelRandomGF5)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
