#pragma once

#include <compare>
#include <filesystem>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ontoprep/text/lemmatizer.hpp"
#include "ontoprep/text/stemmer.hpp"
#include "ontoprep/text/stopwords.hpp"
#include "ontoprep/text/tokenize.hpp"

namespace ontoprep::text {

enum class StepKind { Tokenise, Normalise, RemoveStopWords, Stem, Lemmatise };

struct Step {
  StepKind kind = StepKind::Tokenise;
  StemAlgorithm stemmer = StemAlgorithm::Porter;
  PorterMode porter_mode = PorterMode::NltkExtensions;
  bool use_pos = false;

  static Step tokenise() { return {StepKind::Tokenise}; }
  static Step normalise() { return {StepKind::Normalise}; }
  static Step remove_stop_words() { return {StepKind::RemoveStopWords}; }
  static Step stem(StemAlgorithm a, PorterMode m = PorterMode::NltkExtensions) {
    return {StepKind::Stem, a, m};
  }
  static Step lemmatise(bool use_pos) {
    return {StepKind::Lemmatise, StemAlgorithm::Porter, PorterMode::NltkExtensions, use_pos};
  }

  friend bool operator==(const Step&, const Step&) = default;
};

/// An ordered list of preprocessing steps plus the resources they need.
///
/// Spec strings are comma separated step codes:
///   T            tokenise
///   N            normalise
///   R            remove stop words
///   S:porter     stem (also S:porter-martin, S:porter-original,
///                S:snowball, S:lancaster)
///   L, L:pos     lemmatise as nouns / with suffix POS tags
/// The empty string (or "none") denotes the identity pipeline.
struct PipelineConfig {
  std::vector<Step> steps;
  /// Null means the bundled English list.
  std::shared_ptr<const StopList> stop_list;
  std::set<std::string, std::less<>> stop_list_keep;
  /// Required when a Lemmatise step is present.
  std::shared_ptr<const MorphyLexicon> lexicon;

  /// A Lemmatise step uses `lexicon`, or the bundled WordNet data when null.
  static PipelineConfig parse(std::string_view spec,
                              std::shared_ptr<const MorphyLexicon> lexicon = nullptr);

  /// Throws ConfigError when Tokenise is present but not first, a step kind
  /// repeats, both Stem and Lemmatise appear, or a Lemmatise step has no
  /// lexicon.
  void validate() const;

  bool has(StepKind kind) const;
  const Step* find(StepKind kind) const;

  /// Canonical spec string, e.g. "T,N,R,S:porter". "none" for no steps.
  std::string id() const;

  const StopList& effective_stop_list() const {
    return stop_list ? *stop_list : StopList::english();
  }
};

/// Lower-case words whose tokens skip stop-word removal, stemming and
/// lemmatisation.
class ReservedWordSet {
 public:
  ReservedWordSet() = default;
  ReservedWordSet(std::initializer_list<std::string_view> words);

  /// Lower-cases the word; empty words are ignored.
  void insert(std::string_view word);
  void merge(const ReservedWordSet& other);
  bool contains(std::string_view word) const;
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }
  const std::set<std::string, std::less<>>& words() const { return words_; }

  /// One word per line, sorted, trailing newline.
  std::string serialize() const;
  static ReservedWordSet parse(std::string_view text);
  static ReservedWordSet load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;

  friend bool operator==(const ReservedWordSet&, const ReservedWordSet&) = default;

 private:
  std::set<std::string, std::less<>> words_;
};

/// Output of the pipeline: surviving tokens joined by single spaces.
struct CanonicalKey {
  std::string text;

  bool empty() const { return text.empty(); }
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

/// Runs the configured steps over `text` and returns the token sequence.
/// Without a Tokenise step the whole text (whitespace collapsed) is one token.
TokenSeq run_pipeline(std::string_view text, const PipelineConfig& config,
                      const ReservedWordSet* reserved = nullptr);

CanonicalKey apply_pipeline(std::string_view text, const PipelineConfig& config,
                            const ReservedWordSet* reserved = nullptr);

/// Tokens after tokenise + normalise only, regardless of the configuration.
TokenSeq surface_tokens(std::string_view text);

/// The configuration's stop-word, stem and lemma steps applied to one word.
/// Unlike run_pipeline there is no empty-result guard: a stop word maps to "".
std::string reduce_word(std::string_view word, const PipelineConfig& config);

}  // namespace ontoprep::text

template <>
struct std::hash<ontoprep::text::CanonicalKey> {
  std::size_t operator()(const ontoprep::text::CanonicalKey& k) const noexcept {
    return std::hash<std::string>{}(k.text);
  }
};
