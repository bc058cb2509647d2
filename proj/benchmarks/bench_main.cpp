#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "nctk/bracketer.hpp"
#include "nctk/similarity.hpp"
#include "nctk/stats.hpp"

using namespace nctk;

namespace {

std::vector<std::string> synthetic_corpus(std::size_t n) {
  static const std::vector<std::string> vocab{"health", "care", "reform", "tax", "stem", "cell", "cells", "brain",
                                              "the",    "of",   "a",      "new", "bill", "is",  "on",    "data"};
  std::mt19937 rng(1);
  std::uniform_int_distribution<std::size_t> w(0, vocab.size() - 1), len(4, 16);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::string s;
    for (std::size_t k = len(rng); k > 0; --k) s += vocab[w(rng)] + " ";
    out.push_back(s + ".");
  }
  return out;
}

const CorpusIndex& index_20k() {
  static const auto idx = CorpusIndex::from_lines(synthetic_corpus(20000), {});
  return idx;
}

void BM_BuildIndex(benchmark::State& state) {
  const auto lines = synthetic_corpus(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(CorpusIndex::from_lines(lines, {}));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildIndex)->Arg(1000)->Arg(10000);

void BM_PhraseCount(benchmark::State& state) {
  const auto& idx = index_20k();
  const Phrase p{{"health"}, {"care", "cells"}, {"reform"}};
  for (auto _ : state) benchmark::DoNotOptimize(idx.count_phrase(p));
}
BENCHMARK(BM_PhraseCount);

void BM_GapCount(benchmark::State& state) {
  const auto& idx = index_20k();
  const Phrase l{{"brain"}}, r{{"cells"}};
  for (auto _ : state) benchmark::DoNotOptimize(idx.count_gap(l, r, 0, 3));
}
BENCHMARK(BM_GapCount);

void BM_BracketStandardVote(benchmark::State& state) {
  const auto& idx = index_20k();
  const MorphLexicon lex;
  VoteConfig config;
  config.voters = VoteConfig::standard_voters();
  const NounTriple t("health", "care", "reform");
  for (auto _ : state) benchmark::DoNotOptimize(bracket(t, idx, lex, ParaphraseInventory::standard(), config));
}
BENCHMARK(BM_BracketStandardVote);

void BM_Dice(benchmark::State& state) {
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> w(0, 3);
  FeatureVector a, b;
  for (int i = 0; i < state.range(0); ++i) {
    a["f" + std::to_string(i)] = w(rng);
    b["f" + std::to_string(i * 2)] = w(rng);
  }
  for (auto _ : state) benchmark::DoNotOptimize(dice(a, b));
}
BENCHMARK(BM_Dice)->Arg(16)->Arg(512);

void BM_Wilson(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(wilson_interval(195, 244, 0.95));
}
BENCHMARK(BM_Wilson);

}  // namespace
BENCHMARK_MAIN();
