#include <gtest/gtest.h>

#include <random>

#include "ontoprep/text/stopwords.hpp"
#include "ontoprep/text/tokenize.hpp"

namespace ontoprep::text {
namespace {

TEST(Tokenize, CamelAndSnakeCase) {
  EXPECT_EQ(tokenize("isReviewing"), (TokenSeq{"is", "Reviewing"}));
  EXPECT_EQ(tokenize("art_gallery"), (TokenSeq{"art", "gallery"}));
  EXPECT_EQ(tokenize("ArtGallery"), (TokenSeq{"Art", "Gallery"}));
  EXPECT_EQ(tokenize("Chromosome_Y"), (TokenSeq{"Chromosome", "Y"}));
  EXPECT_EQ(tokenize(""), TokenSeq{});
}

TEST(Tokenize, AcronymsDigitsAndPunctuation) {
  EXPECT_EQ(tokenize("NCIThesaurus"), (TokenSeq{"NCI", "Thesaurus"}));
  EXPECT_EQ(tokenize("HTTPServer2Go"), (TokenSeq{"HTTP", "Server", "2", "Go"}));
  EXPECT_EQ(tokenize("Chromosome1"), (TokenSeq{"Chromosome", "1"}));
  EXPECT_EQ(tokenize("was-a (member) of, x.y"), (TokenSeq{"was", "a", "member", "of", "x", "y"}));
  EXPECT_EQ(tokenize("  \t "), TokenSeq{});
  EXPECT_EQ(tokenize("R&D"), TokenSeq{"R&D"});
}

TEST(Tokenize, HtmlTagsStayWithTheirWord) {
  EXPECT_EQ(tokenize("<b>Heart</b> valve"), (TokenSeq{"<b>Heart</b>", "valve"}));
}

TEST(Normalize, Examples) {
  EXPECT_EQ(normalize({"is", "Reviewing"}), (TokenSeq{"is", "reviewing"}));
  EXPECT_EQ(normalize({"<b>Heart</b>"}), TokenSeq{"heart"});
  EXPECT_EQ(normalize({"heart"}), TokenSeq{"heart"});
  EXPECT_EQ(normalize({"<br>", "C12345"}), TokenSeq{"c12345"});
}

TEST(Normalize, IdempotentOnRandomText) {
  std::mt19937 rng(7);
  const std::string alphabet = "aB9_- .<>/&'Yz()";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> len(0, 24);
  for (int i = 0; i < 5000; ++i) {
    std::string text;
    for (int n = len(rng); n > 0; --n) text.push_back(alphabet[pick(rng)]);
    auto once = normalize(tokenize(text));
    EXPECT_EQ(normalize(once), once) << text;
    for (const auto& t : once) EXPECT_FALSE(t.empty());
  }
}

TEST(StopWords, BundledListHasTheClassicEnglishWords) {
  const auto& list = StopList::english();
  EXPECT_EQ(list.size(), 179u);
  EXPECT_TRUE(list.contains("is"));
  EXPECT_TRUE(list.contains("and"));
  EXPECT_FALSE(list.contains("heart"));
}

TEST(StopWords, Removal) {
  const auto& list = StopList::english();
  EXPECT_EQ(remove_stop_words({"is", "reviewing"}, list), TokenSeq{"reviewing"});
  EXPECT_EQ(remove_stop_words({"black", "and", "white"}, list), (TokenSeq{"black", "white"}));
  EXPECT_EQ(remove_stop_words({"of"}, list), TokenSeq{"of"});
  EXPECT_EQ(remove_stop_words({"is", "a"}, list, {"a"}), TokenSeq{"a"});
  EXPECT_EQ(remove_stop_words({}, list), TokenSeq{});
}

TEST(StopWords, ResultIsASubsequence) {
  const auto& list = StopList::english();
  TokenSeq in{"the", "heart", "of", "a", "lung", "is", "red"};
  auto out = remove_stop_words(in, list);
  std::size_t j = 0;
  for (const auto& t : in) {
    if (j < out.size() && out[j] == t) ++j;
  }
  EXPECT_EQ(j, out.size());
}

}  // namespace
}  // namespace ontoprep::text
