#include <benchmark/benchmark.h>

#include "bidegree/denoise.hpp"
#include "bidegree/estimation.hpp"
#include "bidegree/inference.hpp"
#include "bidegree/noise.hpp"

using namespace bidegree;

namespace {

P0Params zero_theta(int n) {
  P0Params p;
  p.alpha.assign(n, 0.0);
  p.beta.assign(n, 0.0);
  return p;
}

void BM_sample_p0(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto probs = edge_probabilities(zero_theta(n));
  Rng rng(1);
  for (auto _ : state)
    benchmark::DoNotOptimize(sample_p0_from_probs(n, probs, rng));
}
BENCHMARK(BM_sample_p0)->Arg(100)->Arg(500);

void BM_release(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  BiDegreeSequence d;
  d.out_deg.assign(n, n / 2);
  d.in_deg.assign(n, n / 2);
  PrivacyConfig cfg;
  cfg.epsilon = 2.0;
  Rng rng(2);
  for (auto _ : state)
    benchmark::DoNotOptimize(release_bi_degree(d, cfg, rng));
}
BENCHMARK(BM_release)->Arg(100)->Arg(1000);

void BM_denoise(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto probs = edge_probabilities(zero_theta(n));
  Rng rng(3);
  const BiDegreeSequence d = degrees(sample_p0_from_probs(n, probs, rng));
  PrivacyConfig cfg;
  cfg.epsilon = 2.0;
  const NoisyBiSequence z = release_bi_degree(d, cfg, rng);
  for (auto _ : state) benchmark::DoNotOptimize(denoise_l1(z));
}
BENCHMARK(BM_denoise)->Arg(100)->Arg(500);

void BM_solve_fixed_point(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto probs = edge_probabilities(zero_theta(n));
  Rng rng(4);
  const RealBiSequence target = to_real(degrees(sample_p0_from_probs(n, probs, rng)));
  SolverConfig cfg;
  cfg.tol = 1e-7;
  for (auto _ : state) benchmark::DoNotOptimize(solve(target, cfg));
}
BENCHMARK(BM_solve_fixed_point)->Arg(50)->Arg(100)->Arg(200);

void BM_solve_newton(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto probs = edge_probabilities(zero_theta(n));
  Rng rng(5);
  const RealBiSequence target = to_real(degrees(sample_p0_from_probs(n, probs, rng)));
  SolverConfig cfg;
  cfg.tol = 1e-7;
  cfg.method = SolveMethod::Newton;
  for (auto _ : state) benchmark::DoNotOptimize(solve(target, cfg));
}
BENCHMARK(BM_solve_newton)->Arg(50)->Arg(100);

void BM_fisher_diagonals(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const P0Params p = zero_theta(n);
  for (auto _ : state) benchmark::DoNotOptimize(fisher_diagonals(p));
}
BENCHMARK(BM_fisher_diagonals)->Arg(100)->Arg(500);

}  // namespace

BENCHMARK_MAIN();
