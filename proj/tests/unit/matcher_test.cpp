#include <gtest/gtest.h>

#include <random>

#include "ontoprep/matcher.hpp"
#include "support/synthetic.hpp"

namespace ontoprep {
namespace {

using text::PipelineConfig;

EntityRef entity(std::string ns, std::string name, EntityKind kind,
                 std::vector<std::string> labels = {}) {
  return {ns + "#" + name, kind, name, std::move(labels)};
}

OntologyDoc doc(std::vector<EntityRef> entities) { return {"mem", std::move(entities)}; }

TEST(Matcher, CaseVariantsShareABucket) {
  auto o = doc({entity("s", "Heart", EntityKind::Class), entity("s", "heart", EntityKind::Class)});
  auto index = canonical_index(o, PipelineConfig::parse("T,N"));
  ASSERT_EQ(index.buckets.size(), 1u);
  auto& bucket = index.buckets.at({{"heart"}, Category::Class});
  EXPECT_EQ(bucket.size(), 2u);
}

TEST(Matcher, CategoriesAreSeparate) {
  auto o = doc({entity("s", "Review", EntityKind::Class),
                entity("s", "reviews", EntityKind::ObjectProperty)});
  auto index = canonical_index(o, PipelineConfig::parse("T,N,R,S:porter"));
  EXPECT_EQ(index.buckets.size(), 2u);
  EXPECT_TRUE(canonical_index(OntologyDoc{}, PipelineConfig::parse("T,N")).buckets.empty());
}

TEST(Matcher, TextlessEntitiesAreCounted) {
  auto o = doc({entity("s", "C123", EntityKind::Class), entity("s", "C124", EntityKind::Class, {"Heart"})});
  auto index = canonical_index(o, PipelineConfig::parse("T,N"));
  EXPECT_EQ(index.skipped, 1u);
  EXPECT_EQ(index.entity_count(), 1u);
}

TEST(Matcher, WalkthroughPair) {
  auto s = doc({entity("s", "reviews", EntityKind::ObjectProperty)});
  auto t = doc({entity("t", "isReviewing", EntityKind::ObjectProperty)});
  auto full = match_ontologies(s, t, PipelineConfig::parse("T,N,R,S:porter"));
  ASSERT_EQ(full.size(), 1u);
  EXPECT_EQ(full.cells().begin()->entity1, "s#reviews");
  EXPECT_EQ(full.cells().begin()->confidence, 1.0);
  EXPECT_EQ(match_ontologies(s, t, PipelineConfig::parse("T,N")).size(), 0u);
  EXPECT_NE(full.provenance.find("pipeline=T,N,R,S:porter"), std::string::npos);
}

TEST(Matcher, ObjectAndDatatypePropertiesPool) {
  auto s = doc({entity("s", "hasName", EntityKind::DatatypeProperty)});
  auto t = doc({entity("t", "has_name", EntityKind::ObjectProperty),
                entity("t", "HasName", EntityKind::Class)});
  auto a = match_ontologies(s, t, PipelineConfig::parse("T,N"));
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a.cells().begin()->entity2, "t#has_name");
}

TEST(Matcher, ManyToManyCrossProduct) {
  auto s = doc({entity("s", "Paper", EntityKind::Class), entity("s", "paper", EntityKind::Class),
                entity("s", "Author", EntityKind::Class)});
  auto t = doc({entity("t", "PAPER", EntityKind::Class), entity("t", "papers", EntityKind::Class),
                entity("t", "writer", EntityKind::Class)});
  auto a = match_ontologies(s, t, PipelineConfig::parse("T,N,R,S:porter"));
  EXPECT_EQ(a.size(), 4u);
  EXPECT_TRUE(a.same_cells(testing::brute_force_match(s, t, PipelineConfig::parse("T,N,R,S:porter"))));
}

TEST(Matcher, TokenOrderMatters) {
  auto s = doc({entity("s", "ArtGallery", EntityKind::Class)});
  auto t = doc({entity("t", "GalleryArt", EntityKind::Class)});
  EXPECT_TRUE(match_ontologies(s, t, PipelineConfig::parse("T,N,R,S:lancaster")).empty());
}

TEST(Matcher, OracleEquivalenceProperty) {
  std::mt19937_64 rng(2024);
  std::vector<PipelineConfig> configs{PipelineConfig::parse("none"), PipelineConfig::parse("T,N"),
                                      PipelineConfig::parse("T,N,R,S:porter"),
                                      PipelineConfig::parse("T,N,R,S:lancaster")};
  for (int trial = 0; trial < 120; ++trial) {
    auto s = testing::random_ontology(rng, 60, "http://s");
    auto t = testing::random_ontology(rng, 60, "http://t");
    const auto& config = configs[trial % configs.size()];
    MatchOptions options{trial % 2 ? LabelPolicy::LabelThenName : LabelPolicy::NameThenLabel};
    auto fast = match_ontologies(s, t, config, options);
    ASSERT_TRUE(fast.same_cells(testing::brute_force_match(s, t, config, options)))
        << "trial " << trial;
    // Swapping the sides transposes the cells.
    auto swapped = match_ontologies(t, s, config, options);
    ASSERT_EQ(swapped.size(), fast.size());
    for (const auto& c : swapped.cells()) ASSERT_TRUE(fast.contains(c.entity2, c.entity1));
  }
}

TEST(Matcher, PipelineMonotonicityProperty) {
  std::mt19937_64 rng(99);
  std::vector<PipelineConfig> chain{PipelineConfig::parse("T"), PipelineConfig::parse("T,N"),
                                    PipelineConfig::parse("T,N,R"),
                                    PipelineConfig::parse("T,N,R,S:snowball")};
  for (int trial = 0; trial < 80; ++trial) {
    auto s = testing::random_ontology(rng, 50, "http://s");
    auto t = testing::random_ontology(rng, 50, "http://t");
    Alignment previous;
    for (const auto& config : chain) {
      auto a = match_ontologies(s, t, config);
      ASSERT_TRUE(testing::is_subset(previous, a)) << config.id() << " trial " << trial;
      previous = std::move(a);
    }
  }
}

}  // namespace
}  // namespace ontoprep
