// Optimized kernels against the serial reference elimination.
#include <benchmark/benchmark.h>

#include "spechtlab/brauer.hpp"
#include "spechtlab/matrix.hpp"
#include "spechtlab/random.hpp"

using namespace spechtlab;

namespace {

// n x n with rank about n - 8, so elimination does real work on the kernel
Matrix test_matrix(std::size_t n, std::uint32_t p)
{
  Rng rng = make_rng(2024, n * 7 + p);
  Matrix a(n, n - 8, p), b(n - 8, n, p);
  for (auto &x : a.data())
    x = static_cast<Scalar>(rng() % p);
  for (auto &x : b.data())
    x = static_cast<Scalar>(rng() % p);
  return a * b;
}

void bm_rank(benchmark::State &s)
{
  Matrix m = test_matrix(static_cast<std::size_t>(s.range(0)), static_cast<std::uint32_t>(s.range(1)));
  for (auto _ : s)
    benchmark::DoNotOptimize(rank(m));
}

void bm_rank_serial(benchmark::State &s)
{
  Matrix m = test_matrix(static_cast<std::size_t>(s.range(0)), static_cast<std::uint32_t>(s.range(1)));
  for (auto _ : s)
    benchmark::DoNotOptimize(reference::rank_serial(m));
}

void bm_nullspace(benchmark::State &s)
{
  Matrix m = test_matrix(static_cast<std::size_t>(s.range(0)), static_cast<std::uint32_t>(s.range(1)));
  for (auto _ : s)
    benchmark::DoNotOptimize(nullspace(m));
}

void bm_nullspace_serial(benchmark::State &s)
{
  Matrix m = test_matrix(static_cast<std::size_t>(s.range(0)), static_cast<std::uint32_t>(s.range(1)));
  for (auto _ : s)
    benchmark::DoNotOptimize(reference::nullspace_serial(m));
}

// end to end: fixed points and traces on a 165-dimensional module
void bm_brauer_quotient(benchmark::State &s)
{
  ModuleRep w = ModuleRep::hook(12, 3, 3);
  PermGroup q = grid_group(3, 4);
  for (auto _ : s)
    benchmark::DoNotOptimize(brauer_quotient(w, q, 3).dim_quotient);
}

void sizes(benchmark::internal::Benchmark *b)
{
  for (long p : {2, 3})
    for (long n : {128, 256, 512})
      b->Args({n, p});
  b->Unit(benchmark::kMillisecond);
}

} // namespace

BENCHMARK(bm_rank)->Apply(sizes);
BENCHMARK(bm_rank_serial)->Apply(sizes);
BENCHMARK(bm_nullspace)->Apply(sizes);
BENCHMARK(bm_nullspace_serial)->Apply(sizes);
BENCHMARK(bm_brauer_quotient)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
