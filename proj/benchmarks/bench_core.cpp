#include <benchmark/benchmark.h>

#include "tropnev/curves/curves.hpp"
#include "tropnev/nevanlinna/functionals.hpp"
#include "tropnev/nevanlinna/hyperexp.hpp"
#include "tropnev/nevanlinna/poisson_jensen.hpp"
#include "tropnev/numeric/sturm.hpp"
#include "tropnev/polyseg/ops.hpp"
#include "tropnev/sampling.hpp"
#include "tropnev/singular/singular.hpp"

namespace {

using tropnev::numeric::Polynomial;
using tropnev::numeric::Rational;
using tropnev::polyseg::PiecewiseFunction;

Rational q(long n, long d = 1) { return tropnev::numeric::make_rational(n, d); }

// Wilkinson-style product (x-1)(x-2)...(x-n) minus a small perturbation keeps roots irrational.
Polynomial wilkinson(int n) {
  Polynomial p = Polynomial::constant(Rational(1));
  for (int k = 1; k <= n; ++k) p = p * Polynomial{-k, 1};
  return p - Polynomial::constant(q(1, 1000));
}

void BM_SturmIsolate(benchmark::State& state) {
  Polynomial p = wilkinson(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tropnev::numeric::sturm_isolate(p));
}
BENCHMARK(BM_SturmIsolate)->Arg(4)->Arg(8)->Arg(12);

void BM_TropicalPlus(benchmark::State& state) {
  tropnev::sampling::Sampler s(7);
  const int pieces = static_cast<int>(state.range(0));
  PiecewiseFunction f = s.piecewise(3, pieces, 8), g = s.piecewise(3, pieces, 8);
  for (auto _ : state) benchmark::DoNotOptimize(tropnev::polyseg::tropical_plus(f, g));
}
BENCHMARK(BM_TropicalPlus)->Arg(4)->Arg(16)->Arg(64);

void BM_Scan(benchmark::State& state) {
  tropnev::sampling::Sampler s(11);
  PiecewiseFunction f = s.piecewise(3, static_cast<int>(state.range(0)), 8);
  for (auto _ : state) benchmark::DoNotOptimize(tropnev::singular::scan(f));
}
BENCHMARK(BM_Scan)->Arg(8)->Arg(64);

void BM_CharacteristicProfile(benchmark::State& state) {
  const long r = state.range(0);
  auto e = tropnev::nevanlinna::hyperexp(2, q(2), r + 1, r + 1, 64);
  for (auto _ : state) benchmark::DoNotOptimize(tropnev::nevanlinna::characteristic_profile(e.f, q(r)));
}
BENCHMARK(BM_CharacteristicProfile)->Arg(8)->Arg(32);

void BM_PoissonJensen(benchmark::State& state) {
  tropnev::sampling::Sampler s(13);
  PiecewiseFunction f = s.piecewise(3, static_cast<int>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(tropnev::nevanlinna::poisson_jensen(f, q(1, 3), q(9, 2)));
}
BENCHMARK(BM_PoissonJensen)->Arg(4)->Arg(16);

void BM_Casoratian(benchmark::State& state) {
  tropnev::sampling::Sampler s(17);
  std::vector<PiecewiseFunction> fs;
  for (long i = 0; i < state.range(0); ++i) fs.push_back(s.entire(2, 3));
  tropnev::curves::TropicalCurve c(fs);
  for (auto _ : state) benchmark::DoNotOptimize(tropnev::curves::casoratian(c));
}
BENCHMARK(BM_Casoratian)->DenseRange(2, 6, 2);

}  // namespace
BENCHMARK_MAIN();
