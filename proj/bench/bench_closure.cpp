// Serial reference vs OpenMP closure kernel on the same inputs.

#include <benchmark/benchmark.h>

#include "semiforge/group_lattice.hpp"
#include "semiforge/semigroup.hpp"

using namespace semiforge;

namespace {
  // Generators of the signed permutation group of dimension n (order
  // 2^n n!).
  MorphismTable signed_permutations(std::size_t n) {
    Matrix cycle(n, n), swap = Matrix::identity(n), flip = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
      cycle(i, (i + 1) % n) = 1;
    }
    swap(0, 0) = swap(1, 1) = 0;
    swap(0, 1) = swap(1, 0) = 1;
    flip(0, 0) = -1;
    return MorphismTable(n, {cycle, swap, flip});
  }

  // Signed partial maps of {1..n}: at most one nonzero entry, +-1, per row.
  MorphismTable partial_transformations(std::size_t n) {
    MorphismTable t = signed_permutations(n);
    Matrix        drop = Matrix::identity(n);
    drop(0, 0)         = 0;
    Matrix merge       = Matrix::identity(n);
    merge(1, 1)        = 0;
    merge(1, 0)        = 1;
    t.add("d", drop);
    t.add("m", merge);
    return t;
  }

  ExecutionMode mode_of(benchmark::State const& state) {
    return state.range(1) == 0 ? ExecutionMode::serial : ExecutionMode::parallel;
  }

  void label(benchmark::State& state, std::size_t size) {
    state.SetLabel(std::string(state.range(1) == 0 ? "serial" : "parallel"));
    state.counters["elements"] = static_cast<double>(size);
  }

  void BM_SignedPermutationClosure(benchmark::State& state) {
    auto const  t    = signed_permutations(static_cast<std::size_t>(state.range(0)));
    std::size_t size = 0;
    for (auto _ : state) {
      auto const c = closure(t, std::nullopt, mode_of(state));
      size         = c.size();
      benchmark::DoNotOptimize(c.elements.data());
    }
    label(state, size);
  }

  void BM_Finiteness(benchmark::State& state) {
    auto const  t    = partial_transformations(static_cast<std::size_t>(state.range(0)));
    std::size_t size = 0;
    for (auto _ : state) {
      auto const r = decide_finiteness(t, std::nullopt, mode_of(state));
      size         = r.closure.size();
      benchmark::DoNotOptimize(r.verdict);
    }
    label(state, size);
  }

  void BM_CornerClosure(benchmark::State& state) {
    MorphismTable t(2);
    for (long i = 0; i < state.range(0); ++i) {
      t.add("a" + std::to_string(i), Matrix{{0, Rational(i)}, {0, 0}});
    }
    std::size_t size = 0;
    for (auto _ : state) {
      size = closure(t, std::nullopt, mode_of(state)).size();
    }
    label(state, size);
  }
}  // namespace

BENCHMARK(BM_SignedPermutationClosure)
    ->ArgsProduct({{3, 4}, {0, 1}})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Finiteness)->ArgsProduct({{3}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CornerClosure)->ArgsProduct({{10, 100}, {0, 1}})->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
