#include <benchmark/benchmark.h>

#include <random>

#include "ontoprep/logic_repair.hpp"
#include "ontoprep/matcher.hpp"
#include "ontoprep/text/stemmer.hpp"
#include "ontoprep/text/tokenize.hpp"
#include "support/synthetic.hpp"

namespace {

using namespace ontoprep;

std::vector<std::string> names(std::size_t n) {
  std::mt19937_64 rng(5);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(testing::random_name(rng));
  return out;
}

OntologyDoc fixture(const char* name) {
  return load_ontology(std::string(ONTOPREP_FIXTURE_DIR) + "/conference/" + name);
}

void BM_Tokenize(benchmark::State& state) {
  auto input = names(1024);
  for (auto _ : state) {
    for (const auto& s : input) benchmark::DoNotOptimize(text::tokenize(s));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(input.size()));
}
BENCHMARK(BM_Tokenize);

template <std::string (*Stem)(std::string_view)>
void BM_Stem(benchmark::State& state) {
  std::vector<std::string> words(testing::kVocabulary.begin(), testing::kVocabulary.end());
  for (const char* w : {"organization", "generalizations", "reviewing", "conditional",
                        "happiness", "relational", "electricity", "hopefulness"}) {
    words.emplace_back(w);
  }
  for (auto _ : state) {
    for (const auto& w : words) benchmark::DoNotOptimize(Stem(w));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(words.size()));
}

std::string porter(std::string_view w) { return text::porter_stem(w); }
BENCHMARK(BM_Stem<porter>)->Name("BM_Stem/porter");
BENCHMARK(BM_Stem<text::snowball_english_stem>)->Name("BM_Stem/snowball");
BENCHMARK(BM_Stem<text::lancaster_stem>)->Name("BM_Stem/lancaster");

void BM_ApplyPipeline(benchmark::State& state) {
  auto input = names(1024);
  auto config = text::PipelineConfig::parse("T,N,R,S:porter");
  for (auto _ : state) {
    for (const auto& s : input) benchmark::DoNotOptimize(text::apply_pipeline(s, config));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(input.size()));
}
BENCHMARK(BM_ApplyPipeline);

// Synthetic pairs of growing size: index both sides and join.
void BM_MatchSynthetic(benchmark::State& state) {
  std::mt19937_64 rng(11);
  auto n = static_cast<std::size_t>(state.range(0));
  auto s = testing::random_ontology(rng, n, "http://s");
  auto t = testing::random_ontology(rng, n, "http://t");
  auto config = text::PipelineConfig::parse("T,N,R,S:lancaster");
  for (auto _ : state) benchmark::DoNotOptimize(match_ontologies(s, t, config));
  state.SetComplexityN(static_cast<std::int64_t>(s.entities.size() + t.entities.size()));
}
BENCHMARK(BM_MatchSynthetic)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_MatchConferencePair(benchmark::State& state) {
  auto s = fixture("conference.owl");
  auto t = fixture("iasted.owl");
  auto config = text::PipelineConfig::parse("T,N,R,S:porter");
  for (auto _ : state) benchmark::DoNotOptimize(match_ontologies(s, t, config));
}
BENCHMARK(BM_MatchConferencePair);

void BM_ReservedSet(benchmark::State& state) {
  std::mt19937_64 rng(3);
  auto o = testing::random_ontology(rng, static_cast<std::size_t>(state.range(0)), "http://o");
  auto config = text::PipelineConfig::parse("T,N,R,S:porter");
  for (auto _ : state) benchmark::DoNotOptimize(find_reserved_word_set(o, config));
}
BENCHMARK(BM_ReservedSet)->Arg(100)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
