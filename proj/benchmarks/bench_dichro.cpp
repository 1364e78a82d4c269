#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "dichro/dichro.hpp"

using namespace dichro;

namespace {

void BM_HasEdge(benchmark::State& state) {
  const Params p = make_params(state.range(0), state.range(1));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<Code> pick(0, p.vertex_count() - 1);
  std::vector<std::pair<Code, Code>> queries(1024);
  for (auto& q : queries) q = {pick(rng), pick(rng)};
  std::size_t i = 0, hits = 0;
  for (auto _ : state) {
    const auto& [u, v] = queries[i++ & 1023];
    hits += has_edge(p, Vertex{u}, Vertex{v});
  }
  benchmark::DoNotOptimize(hits);
}
BENCHMARK(BM_HasEdge)->Args({3, 8})->Args({16, 6});

void BM_SuccessorBlocks(benchmark::State& state) {
  const Params p = make_params(state.range(0), state.range(1));
  Code u = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(successor_blocks(p, Vertex{u}));
    u = (u + 7919) % p.vertex_count();
  }
}
BENCHMARK(BM_SuccessorBlocks)->Args({3, 8})->Args({4, 12});

void BM_Girth(benchmark::State& state) {
  const Params p = make_params(state.range(0), state.range(1));
  GirthOptions opts;
  opts.use_lower_bound = state.range(2) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(directed_girth(p, opts));
}
BENCHMARK(BM_Girth)->Args({3, 5, 1})->Args({3, 5, 0})->Args({4, 4, 0})->Unit(benchmark::kMillisecond);

void BM_AcyclicHalf(benchmark::State& state) {
  const Params p = make_params(state.range(0), state.range(1));
  std::mt19937_64 rng(2);
  std::vector<Code> subset;
  for (Code v = 0; v < p.vertex_count(); ++v)
    if (rng() & 1) subset.push_back(v);
  for (auto _ : state) benchmark::DoNotOptimize(is_acyclic_subset(p, subset));
  state.SetItemsProcessed(state.iterations() * subset.size());
}
BENCHMARK(BM_AcyclicHalf)->Args({3, 6})->Args({4, 5})->Unit(benchmark::kMicrosecond);

void BM_Refute(benchmark::State& state) {
  const Params p = make_params(state.range(0), state.range(1));
  std::mt19937_64 rng(3);
  std::vector<Color> colors(p.vertex_count());
  for (auto& c : colors) c = static_cast<Color>(rng() % p.d());
  const Coloring c(p, colors);
  for (auto _ : state) benchmark::DoNotOptimize(refute(c));
}
BENCHMARK(BM_Refute)->Args({3, 7})->Args({5, 5});

void BM_Validate(benchmark::State& state) {
  const Params p = make_params(state.range(0), state.range(1));
  const Coloring c = dichromatic_number(p).witness;
  for (auto _ : state) benchmark::DoNotOptimize(validate(c));
}
BENCHMARK(BM_Validate)->Args({3, 6})->Args({4, 5})->Unit(benchmark::kMicrosecond);

void BM_Chi(benchmark::State& state) {
  const Params p = make_params(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(dichromatic_number(p).chi);
}
BENCHMARK(BM_Chi)->Args({3, 5})->Args({3, 7})->Args({4, 6})->Args({2, 10})->Unit(benchmark::kMillisecond);

void BM_BruteForce(benchmark::State& state) {
  const Params p = make_params(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_chi(p));
}
BENCHMARK(BM_BruteForce)->Args({3, 2})->Args({2, 3})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
