#include <benchmark/benchmark.h>

#include <random>

#include "kwb/bar.hpp"
#include "kwb/cyclic.hpp"
#include "kwb/exactlin.hpp"
#include "kwb/parser.hpp"

namespace {

kwb::Presentation exterior2() {
  return kwb::parse_presentation(
      "field Q\n"
      "generator a 0 1\n"
      "generator b 0 1\n"
      "relation a^2\n"
      "relation b^2\n"
      "relation a*b + b*a\n",
      "exterior2");
}

kwb::Presentation free2() {
  return kwb::parse_presentation(
      "field Q\n"
      "generator s 0 1\n"
      "generator t 0 1\n",
      "free2");
}

kwb::SparseMatrix random_matrix(int rows, int cols, double density, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> val(-9, 9);
  kwb::SparseMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (coin(rng) < density) m.set(r, c, kwb::Scalar(val(rng)));
  return m;
}

void BM_rank(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const kwb::SparseMatrix m = random_matrix(n, n, 0.15, 42);
  for (auto _ : state) benchmark::DoNotOptimize(kwb::rank(m));
}
BENCHMARK(BM_rank)->Arg(40)->Arg(80)->Arg(160);

void BM_kernel_basis(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const kwb::SparseMatrix m = random_matrix(n / 2, n, 0.2, 7);
  for (auto _ : state) benchmark::DoNotOptimize(kwb::kernel_basis(m));
}
BENCHMARK(BM_kernel_basis)->Arg(40)->Arg(80);

void BM_expand(benchmark::State& state) {
  const kwb::Presentation p = free2();
  const kwb::Window w{-static_cast<int>(state.range(0)),
                      static_cast<int>(state.range(0)), -6, 6};
  for (auto _ : state)
    benchmark::DoNotOptimize(kwb::expand_presentation(p, w));
}
BENCHMARK(BM_expand)->Arg(4)->Arg(6);

void BM_bar(benchmark::State& state) {
  const kwb::Presentation p = exterior2();
  const kwb::Window w{-static_cast<int>(state.range(0)),
                      static_cast<int>(state.range(0)), -8, 8};
  const kwb::ExpandedAlgebra e = kwb::expand_presentation(p, w);
  for (auto _ : state)
    benchmark::DoNotOptimize(kwb::bar_construction(e.algebra, w));
}
BENCHMARK(BM_bar)->Arg(4)->Arg(6);

void BM_hochschild(benchmark::State& state) {
  const kwb::Presentation p = exterior2();
  const kwb::Window w{-static_cast<int>(state.range(0)),
                      static_cast<int>(state.range(0)), -8, 8};
  const kwb::ExpandedAlgebra e = kwb::expand_presentation(p, w);
  for (auto _ : state)
    benchmark::DoNotOptimize(kwb::hochschild_mixed(e.algebra, w));
}
BENCHMARK(BM_hochschild)->Arg(3)->Arg(5);

void BM_cyclic_homology(benchmark::State& state) {
  const kwb::Presentation p = exterior2();
  const kwb::Window w{-4, 4, -8, 8};
  const kwb::ExpandedAlgebra e = kwb::expand_presentation(p, w);
  const kwb::MixedComplexWindow m = kwb::hochschild_mixed(e.algebra, w);
  for (auto _ : state) {
    const auto cc = kwb::cyclic_complex(m, kwb::CyclicVariant::Negative);
    benchmark::DoNotOptimize(kwb::cyclic_homology(cc));
  }
}
BENCHMARK(BM_cyclic_homology);

}  // namespace

BENCHMARK_MAIN();
