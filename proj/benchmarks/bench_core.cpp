#include <benchmark/benchmark.h>

#include <vector>

#include "tmh/classifier.hpp"
#include "tmh/constants.hpp"
#include "tmh/diagnostics.hpp"
#include "tmh/greedy.hpp"
#include "tmh/kernels.hpp"
#include "tmh/target.hpp"
#include "tmh/thue_morse.hpp"
#include "tmh/weights.hpp"

using namespace tmh;

namespace {

void BM_GreedySqrt(benchmark::State& state) {
  const TargetNumber t = parse_target("sqrt:1:2,2:5");
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run(t, n).steps);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GreedySqrt)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond);

void BM_GreedyRational(benchmark::State& state) {
  const TargetNumber t = TargetNumber::rational(Rational(355, 113));
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run(t, n).steps);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GreedyRational)->Arg(100'000)->Unit(benchmark::kMillisecond);

void BM_GreedyTau0(benchmark::State& state) {
  const TargetNumber t = TargetNumber::tau0();
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run(t, n).steps);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GreedyTau0)->Arg(100'000)->Unit(benchmark::kMillisecond);

void BM_Records(benchmark::State& state) {
  const TargetNumber t = TargetNumber::rational(0);
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(record_tracker(t, n).size());
}
BENCHMARK(BM_Records)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_UClosedForm(benchmark::State& state) {
  const auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(u_closed_form(k, 1, 256));
}
BENCHMARK(BM_UClosedForm)->DenseRange(2, 8, 2)->Unit(benchmark::kMicrosecond);

void BM_KernelExact(benchmark::State& state) {
  const auto k = static_cast<unsigned>(state.range(0));
  const Rational x(12345, 7);
  for (auto _ : state) benchmark::DoNotOptimize(g(k, x));
}
BENCHMARK(BM_KernelExact)->DenseRange(2, 10, 4)->Unit(benchmark::kMicrosecond);

void BM_KernelBall(benchmark::State& state) {
  const auto k = static_cast<unsigned>(state.range(0));
  const RealBall x = RealBall::from_rational(Rational(12345, 7), 256);
  for (auto _ : state) benchmark::DoNotOptimize(g(k, x));
}
BENCHMARK(BM_KernelBall)->DenseRange(2, 10, 4)->Unit(benchmark::kMicrosecond);

void BM_WeightVector(benchmark::State& state) {
  const auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(weight_vector(k).w.size());
}
BENCHMARK(BM_WeightVector)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_ParseBlocks(benchmark::State& state) {
  // Greedy signs of U_{3,2} from n = 6 on are +B_3 repeated.
  const std::vector<Sign> all = run(TargetNumber::named_u(3, 2), (std::uint64_t{1} << 16) + 5).signs;
  const std::vector<Sign> signs(all.begin() + 5, all.end());
  for (auto _ : state) benchmark::DoNotOptimize(parse_blocks(signs).consumed_len);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(signs.size()));
}
BENCHMARK(BM_ParseBlocks)->Unit(benchmark::kMicrosecond);

void BM_ClassifyNamed(benchmark::State& state) {
  const TargetNumber t = TargetNumber::named_u(2, 0, Rational(1));
  for (auto _ : state) benchmark::DoNotOptimize(classify(t, 3).verdict);
}
BENCHMARK(BM_ClassifyNamed)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
