#include <benchmark/benchmark.h>

#include <random>

#include "thetanull/covariant.hpp"
#include "thetanull/genus4.hpp"
#include "thetanull/strata.hpp"
#include "thetanull/theta.hpp"

namespace {

using namespace thetanull;

SiegelPoint random_tau(int g, unsigned seed = 1) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  RealMatrix a(g, g), b(g, g);
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < g; ++j) b(i, j) = u(rng);
    for (int j = i; j < g; ++j) a(i, j) = a(j, i) = u(rng);
  }
  const RealMatrix y = b * b.transpose() / g + 0.5 * RealMatrix::Identity(g, g);
  return SiegelPoint::validate(g, a.cast<Complex>() + Complex(0.0, 1.0) * y.cast<Complex>());
}

void BM_ThetaConstant(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const SiegelPoint tau = random_tau(g);
  const Characteristic ch = enumerate_even_chars(g).back();
  for (auto _ : state) benchmark::DoNotOptimize(theta(tau, ch));
}
BENCHMARK(BM_ThetaConstant)->DenseRange(1, 4);

void BM_ThetaJet(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const SiegelPoint tau = random_tau(g);
  const Characteristic ch = enumerate_even_chars(g).back();
  for (auto _ : state) benchmark::DoNotOptimize(theta_jet(tau, ch));
}
BENCHMARK(BM_ThetaJet)->DenseRange(1, 4);

void BM_ThetaTightTarget(benchmark::State& state) {
  const SiegelPoint tau = random_tau(3);
  EvalOptions opts;
  opts.target_eps = 1e-15;
  opts.threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(theta_jet(tau, Characteristic::zero(3), opts));
}
BENCHMARK(BM_ThetaTightTarget)->Arg(1)->Arg(2)->Arg(4)->UseRealTime();

void BM_Stratum(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  ComplexMatrix m = random_tau(g).matrix();
  // Block-diagonal, so some constants vanish and ranks are computed.
  for (int j = 1; j < g; ++j) m(0, j) = m(j, 0) = 0.0;
  const SiegelPoint tau = SiegelPoint::validate(g, m);
  for (auto _ : state) benchmark::DoNotOptimize(stratum(tau));
}
BENCHMARK(BM_Stratum)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_FForm(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const SiegelPoint tau = random_tau(g);
  const Characteristic aux = enumerate_even_chars(g).back();
  for (auto _ : state) benchmark::DoNotOptimize(f_form(tau, aux));
}
BENCHMARK(BM_FForm)->DenseRange(1, 4);

void BM_BuildP(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_p());
}
BENCHMARK(BM_BuildP);

void BM_DeltaCusp(benchmark::State& state) {
  const Complex w(0.1, 0.6);
  for (auto _ : state) benchmark::DoNotOptimize(delta_cusp(w));
}
BENCHMARK(BM_DeltaCusp);

}  // namespace

BENCHMARK_MAIN();
