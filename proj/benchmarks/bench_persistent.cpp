// Timings for the two persistent-Laplacian routes and for the one-sweep
// all-pairs elimination against repeated pairwise Schur complements.

#include <benchmark/benchmark.h>

#include <perslap/filtration.hpp>
#include <perslap/persistent.hpp>
#include <perslap/random.hpp>

using namespace perslap;

namespace {

SimplicialPair pair_for(int vertices) {
  Rng rng(20240u + static_cast<unsigned>(vertices));
  return random_pair(rng, vertices, 2, true);
}

void bm_persistent_schur(benchmark::State& state) {
  const SimplicialPair pair = pair_for(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const PersistentLaplacian pl = persistent_laplacian(pair, 1, Method::schur);
    benchmark::DoNotOptimize(pl.up.sum());
  }
}

void bm_persistent_reduction(benchmark::State& state) {
  const SimplicialPair pair = pair_for(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const PersistentLaplacian pl = persistent_laplacian(pair, 1, Method::reduction);
    benchmark::DoNotOptimize(pl.up.sum());
  }
}

// A circle built one vertex and one edge per grid value, so the grid is as
// long as the complex and the sweep has one matrix to record per value.
Filtration circle_filtration(int vertices) {
  FiltrationBuilder builder;
  for (int v = 0; v < vertices; ++v) builder.add({v}, static_cast<double>(v));
  for (int v = 0; v + 1 < vertices; ++v) builder.add({v, v + 1}, static_cast<double>(v + 1));
  builder.add({0, vertices - 1}, static_cast<double>(vertices - 1));
  return builder.build();
}

void bm_all_pairs_sweep(benchmark::State& state) {
  const Filtration f = circle_filtration(static_cast<int>(state.range(0)));
  const double t = f.grid().back();
  for (auto _ : state) {
    const AllPairsResult all = all_pairs_up_laplacians(f, 0, t);
    benchmark::DoNotOptimize(all.up.back().sum());
  }
}

void bm_all_pairs_pairwise(benchmark::State& state) {
  const Filtration f = circle_filtration(static_cast<int>(state.range(0)));
  const double t = f.grid().back();
  for (auto _ : state) {
    double checksum = 0.0;
    for (double s : f.grid())
      checksum += persistent_laplacian(f.pair_at(s, t), 0, Method::schur).up.sum();
    benchmark::DoNotOptimize(checksum);
  }
}

}  // namespace

BENCHMARK(bm_persistent_schur)->Arg(8)->Arg(12)->Arg(16);
BENCHMARK(bm_persistent_reduction)->Arg(8)->Arg(12)->Arg(16);
BENCHMARK(bm_all_pairs_sweep)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(bm_all_pairs_pairwise)->Arg(16)->Arg(32)->Arg(64);

BENCHMARK_MAIN();
