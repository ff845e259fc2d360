#include <benchmark/benchmark.h>

#include <random>

#include "fitkernel/conductors.hpp"
#include "fitkernel/lattice.hpp"

using namespace fitkernel;

namespace {

GRMatrix random_matrix(const GroupPtr& g, std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<long> coeff(-3, 3);
  std::uniform_int_distribution<std::size_t> elem(0, g->order() - 1);
  GRMatrix m = gr_zero(g, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (int t = 0; t < 3; ++t) m(i, j) += GroupRingElem::basis(g, elem(rng), Rational(coeff(rng)));
  return m;
}

GroupSpec spec_for(int which) {
  switch (which) {
    case 0: return {Family::Dihedral, {8}};
    case 1: return {Family::Alternating4, {}};
    default: return {Family::Metacyclic, {7, 3, 2}};
  }
}

unsigned long prime_for(int which) { return which == 0 ? 2 : 3; }

void BM_ReducedNorm(benchmark::State& state) {
  const GroupPtr g = FiniteGroup::make(spec_for(static_cast<int>(state.range(0))));
  const WedderburnData w = wedderburn_data(g, prime_for(static_cast<int>(state.range(0))));
  std::mt19937 rng(7);
  const GRMatrix h = random_matrix(g, static_cast<std::size_t>(state.range(1)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(reduced_norm(w, h));
  state.SetLabel(g->spec().name());
}
BENCHMARK(BM_ReducedNorm)->ArgsProduct({{0, 1, 2}, {1, 2, 3}})->Unit(benchmark::kMicrosecond);

void BM_HermiteLocal(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> coeff(-50, 50);
  RatMatrix m(2 * n, n);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = coeff(rng);
  for (auto _ : state) benchmark::DoNotOptimize(hermite_form_local(m, 2));
}
BENCHMARK(BM_HermiteLocal)->RangeMultiplier(2)->Range(4, 32)->Unit(benchmark::kMicrosecond);

void BM_HermiteInteger(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(13);
  std::uniform_int_distribution<long> coeff(-50, 50);
  IntMatrix m(2 * n, n);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = coeff(rng);
  for (auto _ : state) benchmark::DoNotOptimize(hermite_form(m));
}
BENCHMARK(BM_HermiteInteger)->RangeMultiplier(2)->Range(4, 32)->Unit(benchmark::kMicrosecond);

void BM_FitTall(benchmark::State& state) {
  const GroupPtr g = FiniteGroup::make(spec_for(static_cast<int>(state.range(0))));
  const WedderburnData w = wedderburn_data(g, prime_for(static_cast<int>(state.range(0))));
  std::mt19937 rng(17);
  GRMatrix h = gr_zero(g, 4, 2);
  const GRMatrix top = random_matrix(g, 2, rng), bottom = random_matrix(g, 2, rng);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      h(i, j) = top(i, j);
      h(i + 2, j) = bottom(i, j);
    }
  const auto pres = make_gr_presentation(g, prime_for(static_cast<int>(state.range(0))), h);
  for (auto _ : state) benchmark::DoNotOptimize(fit_of_presentation(w, pres));
  state.SetLabel(g->spec().name());
}
BENCHMARK(BM_FitTall)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_Conductors(benchmark::State& state) {
  const GroupPtr g = FiniteGroup::make({Family::Dihedral, {static_cast<unsigned long>(state.range(0))}});
  for (auto _ : state) {
    const WedderburnData w = wedderburn_data(g, 2);
    benchmark::DoNotOptimize(conductor_index_report(w));
  }
}
BENCHMARK(BM_Conductors)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
