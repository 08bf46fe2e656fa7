#include <benchmark/benchmark.h>

#include "ncdtree/generators.hpp"
#include "ncdtree/mutation.hpp"
#include "ncdtree/quartet.hpp"
#include "ncdtree/search.hpp"

namespace {

using namespace ncdtree;

void BM_ScoreTree(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto synthetic = gen_random_tree_metric(n, 1);
  QuartetScorer scorer(synthetic.matrix);
  Rng rng(2);
  auto tree = random_tree(synthetic.matrix.labels(), rng);
  for (auto _ : state) benchmark::DoNotOptimize(scorer.score(tree));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(count_quartets(n)));
}
BENCHMARK(BM_ScoreTree)->Arg(10)->Arg(18)->Arg(34)->Arg(60);

void BM_FullMutation(benchmark::State& state) {
  Rng rng(3);
  auto tree = random_tree(synthetic_labels(static_cast<std::size_t>(state.range(0))), rng);
  for (auto _ : state) benchmark::DoNotOptimize(full_mutation(tree, rng));
}
BENCHMARK(BM_FullMutation)->Arg(20)->Arg(100);

void BM_HillClimbSynthetic(benchmark::State& state) {
  auto synthetic = gen_random_tree_metric(static_cast<std::size_t>(state.range(0)), 4);
  SearchConfig config;
  for (auto _ : state) benchmark::DoNotOptimize(hill_climb(synthetic.matrix, config).score.s);
}
BENCHMARK(BM_HillClimbSynthetic)->Arg(10)->Arg(18)->Unit(benchmark::kMillisecond);

}  // namespace
