#include <benchmark/benchmark.h>

#include <span>
#include <vector>

#include "hsurf/koszul.hpp"
#include "hsurf/milnor.hpp"
#include "hsurf/torelli.hpp"

using namespace hsurf;

namespace {

const PrimeField kP(kDefaultPrimeA);

// Fermat plus a small perturbation keeps the tower from being monomial.
Polynomial<PrimeField> perturbed_fermat(int n, int d) {
  auto f = fermat_polynomial(n, d).convert(kP);
  std::vector<int> e(static_cast<std::size_t>(n + 1), 0);
  e[0] = d - 2;
  e[1] = 1;
  e[static_cast<std::size_t>(n)] = 1;
  return f + Polynomial<PrimeField>::monomial(kP, Monomial(std::span<const int>(e)), 3);
}

void BM_JacobianTower(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0)), d = static_cast<int>(state.range(1));
  const auto f = perturbed_fermat(n, d);
  for (auto _ : state) {
    JacobianContext<PrimeField> ctx(f);
    benchmark::DoNotOptimize(ctx.milnor_dim((n + 1) * (d - 2)));
  }
}
BENCHMARK(BM_JacobianTower)->Args({3, 4})->Args({3, 5})->Args({4, 5})->Unit(benchmark::kMillisecond);

void BM_PhiRank(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0)), d = static_cast<int>(state.range(1));
  JacobianContext<PrimeField> ctx(perturbed_fermat(n, d));
  for (auto _ : state) benchmark::DoNotOptimize(phi_matrix(ctx).rank);
}
BENCHMARK(BM_PhiRank)->Args({3, 5})->Args({4, 5})->Unit(benchmark::kMillisecond);

void BM_KoszulDirect(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  JacobianContext<PrimeField> ctx(perturbed_fermat(3, 5));
  ctx.milnor_dim(m + 4);
  for (auto _ : state) benchmark::DoNotOptimize(koszul_hn(ctx, m).dim);
}
BENCHMARK(BM_KoszulDirect)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
