#include <gtest/gtest.h>

#include <random>

#include "ontoprep/error.hpp"
#include "ontoprep/text/pipeline.hpp"

namespace ontoprep::text {
namespace {

PipelineConfig tnrs() { return PipelineConfig::parse("T,N,R,S:porter"); }

TEST(Pipeline, WalkthroughKeys) {
  EXPECT_EQ(apply_pipeline("isReviewing", PipelineConfig::parse("T,N")).text, "is reviewing");
  EXPECT_EQ(apply_pipeline("isReviewing", PipelineConfig::parse("T,N,R")).text, "reviewing");
  EXPECT_EQ(apply_pipeline("isReviewing", tnrs()).text, "review");
  EXPECT_EQ(apply_pipeline("reviews", tnrs()).text, "review");
}

TEST(Pipeline, ReservedWordsBypassStopWordsAndStemming) {
  ReservedWordSet reserved{"was", "a", "of", "has", "members"};
  EXPECT_EQ(apply_pipeline("was_a_member_of", tnrs(), &reserved).text, "was a member of");
  EXPECT_EQ(apply_pipeline("has_a_steering_committee", tnrs(), &reserved).text,
            "has a steer committe");
  EXPECT_EQ(apply_pipeline("has_members", tnrs(), &reserved).text, "has members");
  EXPECT_EQ(apply_pipeline("has_members", tnrs()).text, "member");
}

TEST(Pipeline, GuardIgnoresReservedWords) {
  auto tnr = PipelineConfig::parse("T,N,R");
  ReservedWordSet reserved{"for"};
  EXPECT_EQ(apply_pipeline("for_is_a", tnr).text, "for is a");
  EXPECT_EQ(apply_pipeline("for_is_a", tnr, &reserved).text, "for is a");
  EXPECT_EQ(apply_pipeline("for_paper", tnr, &reserved).text, "for paper");
  EXPECT_EQ(apply_pipeline("for_the_paper", tnr, &reserved).text, "for paper");
}

TEST(Pipeline, WithoutTokeniseTheTextIsOneToken) {
  PipelineConfig none;
  EXPECT_EQ(apply_pipeline("  Art   Gallery ", none).text, "Art Gallery");
  EXPECT_EQ(apply_pipeline("Art_Gallery", PipelineConfig::parse("N")).text, "artgallery");
  EXPECT_EQ(apply_pipeline("", none).text, "");
}

TEST(Pipeline, ParseAndId) {
  EXPECT_EQ(PipelineConfig::parse("").id(), "none");
  EXPECT_EQ(PipelineConfig::parse("TN").id(), "T,N");
  EXPECT_EQ(PipelineConfig::parse("T, N, R, S").id(), "T,N,R,S:porter");
  EXPECT_EQ(PipelineConfig::parse("T,N,R,S:lancaster").id(), "T,N,R,S:lancaster");
  EXPECT_EQ(PipelineConfig::parse("T,N,R,S:porter-martin").id(), "T,N,R,S:porter-martin");
  EXPECT_EQ(PipelineConfig::parse("T,N,R,L:pos").id(), "T,N,R,L:pos");
  EXPECT_THROW(PipelineConfig::parse("N,T"), ConfigError);
  EXPECT_THROW(PipelineConfig::parse("T,T"), ConfigError);
  EXPECT_THROW(PipelineConfig::parse("T,S,L"), ConfigError);
  EXPECT_THROW(PipelineConfig::parse("T,S:krovetz"), ConfigError);
  EXPECT_THROW(PipelineConfig::parse("T,,N"), ConfigError);
}

TEST(Pipeline, LemmatiseWithoutLexiconIsRejected) {
  PipelineConfig c;
  c.steps = {Step::tokenise(), Step::lemmatise(false)};
  EXPECT_THROW(c.validate(), ConfigError);
}

TEST(Pipeline, LemmatisePipeline) {
  EXPECT_EQ(apply_pipeline("hasMembers", PipelineConfig::parse("T,N,R,L")).text, "member");
  EXPECT_EQ(apply_pipeline("isReviewing", PipelineConfig::parse("T,N,R,L:pos")).text, "review");
}

TEST(Pipeline, StopKeepList) {
  auto c = PipelineConfig::parse("T,N,R");
  c.stop_list_keep.insert("is");
  EXPECT_EQ(apply_pipeline("isReviewing", c).text, "is reviewing");
}

TEST(Pipeline, KeyHasNoEmptyTokens) {
  auto k = apply_pipeline("__a--b  c__", PipelineConfig::parse("T,N"));
  EXPECT_EQ(k.text, "a b c");
}

TEST(ReservedWordSet, SerialisationIsSortedAndRoundTrips) {
  ReservedWordSet s{"was", "A", "of", "has", "members"};
  EXPECT_EQ(s.serialize(), "a\nhas\nmembers\nof\nwas\n");
  EXPECT_EQ(ReservedWordSet::parse(s.serialize()), s);
  EXPECT_TRUE(s.contains("a"));
  EXPECT_FALSE(s.contains("A"));
}

// Equal keys under a pipeline stay equal when a later step is appended.
TEST(Pipeline, PrefixChainIsMonotoneOnRandomNames) {
  const std::vector<std::string> words{"is", "Review", "reviews", "Reviewing", "of", "the",
                                       "member", "Members", "A", "has", "Paper", "papers"};
  const std::vector<std::string> seps{"", "_", " ", "-"};
  std::mt19937 rng(11);
  auto random_name = [&] {
    std::string s;
    int n = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int i = 0; i < n; ++i) {
      if (i > 0) s += seps[rng() % seps.size()];
      s += words[rng() % words.size()];
    }
    return s;
  };
  std::vector<PipelineConfig> chain{PipelineConfig::parse(""), PipelineConfig::parse("T"),
                                    PipelineConfig::parse("T,N"), PipelineConfig::parse("T,N,R"),
                                    PipelineConfig::parse("T,N,R,S:snowball")};
  for (int i = 0; i < 3000; ++i) {
    auto a = random_name();
    auto b = random_name();
    bool equal_before = false;
    for (const auto& c : chain) {
      bool equal_now = apply_pipeline(a, c) == apply_pipeline(b, c);
      if (equal_before) EXPECT_TRUE(equal_now) << a << " / " << b << " under " << c.id();
      equal_before = equal_now;
    }
  }
}

}  // namespace
}  // namespace ontoprep::text
