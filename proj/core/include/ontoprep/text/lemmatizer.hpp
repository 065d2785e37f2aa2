#pragma once

#include <array>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ontoprep/text/tokenize.hpp"

namespace ontoprep::text {

enum class PartOfSpeech { Noun, Verb, Adjective, Adverb };

std::string_view to_string(PartOfSpeech pos);

/// Context-free suffix tagger: -ing and -ed read as verbs, -ly as adverbs,
/// a handful of adjective suffixes as adjectives, everything else as nouns.
PartOfSpeech tag_word(std::string_view word);
std::vector<std::pair<std::string, PartOfSpeech>> pos_tag(const TokenSeq& tokens);

/// WordNet morphological data: per part of speech, the set of lemmas (from
/// the index.* files) and the irregular-form exception lists (*.exc).
class MorphyLexicon {
 public:
  /// Loads index.{noun,verb,adj,adv} and {noun,verb,adj,adv}.exc from `dir`.
  /// Throws LexiconUnavailable when a file is missing or unreadable.
  static std::shared_ptr<const MorphyLexicon> load(const std::filesystem::path& dir);

  /// Directory chosen by ONTOPREP_DATA_DIR, then the build tree, then the
  /// install prefix.
  static std::filesystem::path default_dir();
  static std::shared_ptr<const MorphyLexicon> load_default();

  bool is_lemma(std::string_view word, PartOfSpeech pos) const;

  /// Candidate base forms in lookup order, restricted to known lemmas.
  std::vector<std::string> base_forms(std::string_view word, PartOfSpeech pos) const;

  /// The shortest candidate base form (first on ties), or the word itself.
  std::string lemmatize_word(std::string_view word, PartOfSpeech pos) const;

  const std::filesystem::path& source_dir() const { return dir_; }

 private:
  struct PosData {
    std::unordered_set<std::string> lemmas;
    std::unordered_map<std::string, std::vector<std::string>> exceptions;
  };
  const PosData& data(PartOfSpeech pos) const { return data_[static_cast<std::size_t>(pos)]; }

  std::filesystem::path dir_;
  std::array<PosData, 4> data_;
};

/// Without POS tags every token is lemmatised as a noun.
TokenSeq lemmatize(const TokenSeq& tokens, bool use_pos, const MorphyLexicon& lexicon);

}  // namespace ontoprep::text
