#include "hopf/invariants.hpp"
#include "hopf/structure.hpp"
#include "hopf/twist.hpp"
#include "hopf/zoo.hpp"

#include <benchmark/benchmark.h>

using namespace hopf;

namespace {

const HopfAlgebra& by_index(int i) {
  static const HopfAlgebra zoo[] = {sweedler(), taft(3, 1), taft(4, 1), generalized_taft(2, 3, 1)};
  return zoo[i];
}

void BM_Verify(benchmark::State& state) {
  const auto& h = by_index(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_hopf(h).all_passed());
  state.SetLabel(h.name());
}
BENCHMARK(BM_Verify)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_InvariantTable(benchmark::State& state) {
  const auto& h = by_index(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(invariant_table(h).dim);
  state.SetLabel(h.name());
}
BENCHMARK(BM_InvariantTable)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_Chevalley(benchmark::State& state) {
  const auto& h = by_index(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_chevalley(h).chevalley);
  state.SetLabel(h.name());
}
BENCHMARK(BM_Chevalley)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_ValidateTwist(benchmark::State& state) {
  const auto& h = by_index(static_cast<int>(state.range(0)));
  // g = b_1 has order equal to the conductor
  const Vec f = bicharacter_twist(h, h.basis(1), static_cast<unsigned>(h.conductor()), 1);
  for (auto _ : state) benchmark::DoNotOptimize(validate_twist(h, f).gamma);
  state.SetLabel(h.name());
}
BENCHMARK(BM_ValidateTwist)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_Inverse(benchmark::State& state) {
  const auto& h = by_index(static_cast<int>(state.range(0)));
  const Mat k = kron(h.antipode(), h.antipode());
  for (auto _ : state) benchmark::DoNotOptimize(inverse(k).rows());
  state.SetLabel(h.name() + " S(x)S");
}
BENCHMARK(BM_Inverse)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
