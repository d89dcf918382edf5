#include <benchmark/benchmark.h>

#include <random>

#include "hq/lexicon.hpp"
#include "hq/rule_backend.hpp"
#include "hq/taxonomy.hpp"

namespace {

const hq::Taxonomy& taxonomy() {
  static hq::Taxonomy t = hq::load_taxonomy(std::string(HQ_SOURCE_DIR) + "/data/taxonomy_default.json");
  return t;
}

const hq::SentimentLexicon& lexicon() {
  static hq::SentimentLexicon l =
      hq::load_lexicon(std::string(HQ_SOURCE_DIR) + "/data/lexicon_default.txt");
  return l;
}

std::string synthetic_text(std::mt19937& rng, int sentences) {
  const char* fragments[] = {
      "the parking spaces are always full",
      "elevator is broken again",
      "green space is beautiful and quiet",
      "property management is not responsive",
      "nothing to report about the weather",
      "garbage collection works very well",
      "the gym and playground are clean",
      "street light has been dark for weeks",
  };
  std::uniform_int_distribution<int> pick(0, 7);
  std::string text;
  for (int i = 0; i < sentences; ++i) {
    text += fragments[pick(rng)];
    text += ". ";
  }
  return text;
}

void RuleBasedExtract(benchmark::State& state) {
  std::mt19937 rng(42);
  std::vector<hq::Entry> entries;
  for (int i = 0; i < 256; ++i) {
    hq::Entry e;
    e.id = "b" + std::to_string(i);
    e.text = synthetic_text(rng, static_cast<int>(state.range(0)));
    entries.push_back(std::move(e));
  }
  std::size_t i = 0;
  std::int64_t units = 0;
  for (auto _ : state) {
    hq::ExtractionResult r = hq::rule_based_extract(entries[i++ % entries.size()], taxonomy(), lexicon());
    units += static_cast<std::int64_t>(r.units.size());
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(state.iterations());
  state.counters["units"] = static_cast<double>(units);
}

void SentenceSplit(benchmark::State& state) {
  std::mt19937 rng(7);
  std::string text = synthetic_text(rng, 64);
  for (auto _ : state) {
    auto sentences = hq::split_sentences(text);
    benchmark::DoNotOptimize(sentences);
  }
}

}  // namespace

BENCHMARK(RuleBasedExtract)->Arg(1)->Arg(4)->Arg(16);
BENCHMARK(SentenceSplit);
