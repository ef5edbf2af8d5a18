#include <benchmark/benchmark.h>

#include <vector>

#include "betbench/dataset.hpp"
#include "betbench/metrics.hpp"
#include "betbench/predict.hpp"
#include "betbench/records.hpp"
#include "betbench/stats.hpp"

using namespace betbench;

namespace {

std::vector<DatasetRecord> train_card() {
  return annotate_all(generate(default_catalog(), Split::Train, DatasetSpec{BetModality::Card}));
}

void BM_GenerateAnnotate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(train_card());
  state.SetItemsProcessed(state.iterations() * 840);
}
BENCHMARK(BM_GenerateAnnotate);

void BM_EncodeDecode(benchmark::State& state) {
  const auto records = train_card();
  for (auto _ : state) {
    for (const auto& r : records) benchmark::DoNotOptimize(decode_record(encode_record(r)));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(records.size()));
}
BENCHMARK(BM_EncodeDecode);

void BM_GridSearch(benchmark::State& state) {
  const auto records = train_card();
  RandomScorer scorer(1);
  const auto scores = scorer.score_all(records);
  const auto examples = calibration_set(records, scores, GtKind::NonNegativeGain);
  for (auto _ : state) benchmark::DoNotOptimize(grid_search(examples));
}
BENCHMARK(BM_GridSearch);

void BM_RandomScoreAndEvaluate(benchmark::State& state) {
  const auto records = annotate_all(generate(default_catalog(), Split::Test, DatasetSpec{BetModality::Coin}));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    RandomScorer scorer(seed++);
    benchmark::DoNotOptimize(accuracy_standard(predict_standard(scorer.score_all(records)), records));
  }
}
BENCHMARK(BM_RandomScoreAndEvaluate);

void BM_ZTest(benchmark::State& state) {
  int k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(format_p(ztest(1 + k % 98, 100, Rational(1, 3)).p));
    ++k;
  }
}
BENCHMARK(BM_ZTest);

}  // namespace

BENCHMARK_MAIN();
