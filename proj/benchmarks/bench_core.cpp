#include <benchmark/benchmark.h>

#include "hadamard/line_powers.hpp"
#include "hadamard/products.hpp"
#include "hadamard/samplers.hpp"
#include "hadamard/tropical.hpp"

using namespace hadamard;

namespace {

QMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  Rng rng(seed);
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = make_rational(rng.uniform(-99, 99), rng.uniform(1, 9));
  }
  return m;
}

LinSpace random_line(std::size_t n, std::uint64_t seed) { return LinSpace(random_matrix(2, n + 1, seed)); }

void BM_Rref(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  QMatrix m = random_matrix(n, n + 1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Arg(8)->Arg(16)->Arg(32);

void BM_LinePowerMatrix(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  LinSpace line = random_line(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(rank(line_power_matrix(line, n / 2)));
}
BENCHMARK(BM_LinePowerMatrix)->Arg(6)->Arg(12);

void BM_InterpolateTwoLines(benchmark::State& state) {
  auto sampler = VarietySampler::product(VarietySampler::linear(random_line(3, 3)),
                                         VarietySampler::linear(random_line(3, 4)));
  for (auto _ : state) benchmark::DoNotOptimize(interpolate_hypersurface(sampler, 3, 5));
}
BENCHMARK(BM_InterpolateTwoLines)->Unit(benchmark::kMillisecond);

void BM_MinkowskiSum(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<SignedConeFan> fans(3, standard_tls(1, n));
  for (auto _ : state) benchmark::DoNotOptimize(minkowski_sum(fans));
}
BENCHMARK(BM_MinkowskiSum)->Arg(4)->Arg(6)->Arg(8);

void BM_FanDegree(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  ProductShape shape = {{1, 1}, {1, 1}, {1, 1}};
  for (auto _ : state) benchmark::DoNotOptimize(fan_degree(shape, {}, n, 9));
}
BENCHMARK(BM_FanDegree)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
