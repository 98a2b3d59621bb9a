#include <benchmark/benchmark.h>

#include "innerdyn/dynamics/orbit.hpp"
#include "innerdyn/dynamics/theorem_a.hpp"
#include "innerdyn/moebius/pullback.hpp"
#include "innerdyn/numerics/sampling.hpp"

namespace {

using namespace innerdyn;
using num::BigComplex;
using num::BigReal;
using num::Bits;
using num::CirclePoint;

void BM_BoundaryStep(benchmark::State& state) {
  const Bits prec = state.range(0);
  const auto f = inner::InnerFunction::rational2(BigReal(2L, prec));
  const CirclePoint zeta = num::boundary_sample(1, 0, prec);
  for (auto _ : state) benchmark::DoNotOptimize(inner::eval_boundary(f, zeta));
}
BENCHMARK(BM_BoundaryStep)->Arg(256)->Arg(1024)->Arg(4096);

void BM_InteriorStepBlaschke(benchmark::State& state) {
  const Bits prec = state.range(0);
  std::vector<BigComplex> zeros;
  for (long k = 1; k <= 8; ++k) zeros.push_back(BigComplex::polar(BigReal(k, prec) / 10L, BigReal(k, prec)));
  const auto f = inner::InnerFunction::blaschke(zeros, CirclePoint(prec));
  const BigComplex z = BigComplex::polar(BigReal::parse("0.7", prec), BigReal(2L, prec));
  for (auto _ : state) benchmark::DoNotOptimize(inner::eval_interior(f, z));
}
BENCHMARK(BM_InteriorStepBlaschke)->Arg(256)->Arg(1024);

void BM_PullbackClosedForm(benchmark::State& state) {
  const Bits prec = state.range(0);
  const BigComplex w = BigComplex::polar(BigReal::parse("0.9", prec), BigReal(1L, prec));
  const moebius::Arc j = moebius::Arc::centered(CirclePoint(prec), BigReal::parse("0.3", prec));
  for (auto _ : state) benchmark::DoNotOptimize(moebius::pullback_length_closed_form(w, j));
}
BENCHMARK(BM_PullbackClosedForm)->Arg(256)->Arg(1024);

void BM_BoundaryOrbitEscalated(benchmark::State& state) {
  const auto f = inner::InnerFunction::rational2(BigReal(2L, 256));
  const num::PrecisionPolicy policy{256, 4096, 64};
  const int n_max = static_cast<int>(state.range(0));
  std::uint64_t i = 0;
  for (auto _ : state) {
    const auto start = [&](Bits bits) { return num::boundary_sample(1, i, bits); };
    benchmark::DoNotOptimize(dynamics::boundary_orbit(f, start, n_max, policy, CirclePoint(256)));
    ++i;
  }
}
BENCHMARK(BM_BoundaryOrbitEscalated)->Arg(50)->Arg(200);

void BM_TheoremA(benchmark::State& state) {
  const auto f = inner::InnerFunction::rational2(BigReal(2L, 256));
  dynamics::TheoremAConfig config;
  config.epsilon = BigReal::parse("0.5", 256);
  config.samples = 100;
  config.seed = 1;
  config.n_enter = 20;
  config.n_max = 50;
  config.p = CirclePoint(256);
  config.alpha = BigReal(1L, 256) / 2L;
  config.workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dynamics::theorem_a_experiment(f, config));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(config.samples));
}
BENCHMARK(BM_TheoremA)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
