#include "ontoprep/text/lemmatizer.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <span>
#include <sstream>

#include "ontoprep/error.hpp"

namespace ontoprep::text {
namespace {

struct Substitution {
  std::string_view suffix;
  std::string_view replacement;
};

constexpr std::array<Substitution, 9> kNounRules{{{"s", ""},
                                                  {"ses", "s"},
                                                  {"ves", "f"},
                                                  {"xes", "x"},
                                                  {"zes", "z"},
                                                  {"ches", "ch"},
                                                  {"shes", "sh"},
                                                  {"men", "man"},
                                                  {"ies", "y"}}};
constexpr std::array<Substitution, 8> kVerbRules{{{"s", ""},
                                                  {"ies", "y"},
                                                  {"es", "e"},
                                                  {"es", ""},
                                                  {"ed", "e"},
                                                  {"ed", ""},
                                                  {"ing", "e"},
                                                  {"ing", ""}}};
constexpr std::array<Substitution, 4> kAdjectiveRules{{{"er", ""}, {"est", ""}, {"er", "e"}, {"est", "e"}}};

std::span<const Substitution> substitutions(PartOfSpeech pos) {
  switch (pos) {
    case PartOfSpeech::Noun:
      return kNounRules;
    case PartOfSpeech::Verb:
      return kVerbRules;
    case PartOfSpeech::Adjective:
      return kAdjectiveRules;
    case PartOfSpeech::Adverb:
      return {};
  }
  return {};
}

constexpr std::array<std::string_view, 4> kFileStem{"noun", "verb", "adj", "adv"};

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LexiconUnavailable("cannot open WordNet file " + path.string());
  return in;
}

}  // namespace

std::string_view to_string(PartOfSpeech pos) {
  switch (pos) {
    case PartOfSpeech::Noun:
      return "Noun";
    case PartOfSpeech::Verb:
      return "Verb";
    case PartOfSpeech::Adjective:
      return "Adjective";
    case PartOfSpeech::Adverb:
      return "Adverb";
  }
  return "?";
}

PartOfSpeech tag_word(std::string_view word) {
  auto w = ascii_lower(word);
  if (w.size() > 4 && w.ends_with("ing")) return PartOfSpeech::Verb;
  if (w.size() > 3 && w.ends_with("ed")) return PartOfSpeech::Verb;
  if (w.size() > 4 && w.ends_with("ly")) return PartOfSpeech::Adverb;
  for (std::string_view suffix : {"ous", "ful", "ive", "able", "ible", "less", "ical", "ish"}) {
    if (w.size() > suffix.size() + 1 && w.ends_with(suffix)) return PartOfSpeech::Adjective;
  }
  return PartOfSpeech::Noun;
}

std::vector<std::pair<std::string, PartOfSpeech>> pos_tag(const TokenSeq& tokens) {
  std::vector<std::pair<std::string, PartOfSpeech>> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.emplace_back(t, tag_word(t));
  return out;
}

std::shared_ptr<const MorphyLexicon> MorphyLexicon::load(const std::filesystem::path& dir) {
  auto lex = std::make_shared<MorphyLexicon>();
  lex->dir_ = dir;
  std::string line;
  for (std::size_t p = 0; p < kFileStem.size(); ++p) {
    auto& data = lex->data_[p];
    auto index = open_or_throw(dir / ("index." + std::string(kFileStem[p])));
    while (std::getline(index, line)) {
      if (line.empty() || line[0] == ' ') continue;
      data.lemmas.insert(line.substr(0, line.find(' ')));
    }
    auto exc = open_or_throw(dir / (std::string(kFileStem[p]) + ".exc"));
    while (std::getline(exc, line)) {
      std::istringstream fields(line);
      std::string form;
      if (!(fields >> form)) continue;
      std::vector<std::string> bases;
      for (std::string b; fields >> b;) bases.push_back(std::move(b));
      data.exceptions[form] = std::move(bases);
    }
    if (data.lemmas.empty()) {
      throw LexiconUnavailable("WordNet index for " + std::string(kFileStem[p]) + " is empty in " +
                               dir.string());
    }
  }
  return lex;
}

std::filesystem::path MorphyLexicon::default_dir() {
  std::vector<std::filesystem::path> candidates;
  if (const char* env = std::getenv("ONTOPREP_DATA_DIR"); env && *env) {
    candidates.emplace_back(std::filesystem::path(env) / "wordnet");
  }
#ifdef ONTOPREP_SOURCE_DATA_DIR
  candidates.emplace_back(std::filesystem::path(ONTOPREP_SOURCE_DATA_DIR) / "wordnet");
#endif
#ifdef ONTOPREP_INSTALL_DATA_DIR
  candidates.emplace_back(std::filesystem::path(ONTOPREP_INSTALL_DATA_DIR) / "wordnet");
#endif
  for (const auto& c : candidates) {
    std::error_code ec;
    if (std::filesystem::exists(c / "index.noun", ec)) return c;
  }
  return candidates.empty() ? std::filesystem::path("wordnet") : candidates.front();
}

std::shared_ptr<const MorphyLexicon> MorphyLexicon::load_default() { return load(default_dir()); }

bool MorphyLexicon::is_lemma(std::string_view word, PartOfSpeech pos) const {
  return data(pos).lemmas.contains(std::string(word));
}

std::vector<std::string> MorphyLexicon::base_forms(std::string_view word, PartOfSpeech pos) const {
  const auto& d = data(pos);
  std::vector<std::string> forms{std::string(word)};
  if (auto it = d.exceptions.find(std::string(word)); it != d.exceptions.end()) {
    forms.insert(forms.end(), it->second.begin(), it->second.end());
  } else {
    for (const auto& rule : substitutions(pos)) {
      if (word.ends_with(rule.suffix)) {
        forms.push_back(std::string(word.substr(0, word.size() - rule.suffix.size())) +
                        std::string(rule.replacement));
      }
    }
  }
  std::vector<std::string> out;
  for (auto& f : forms) {
    if (!d.lemmas.contains(f)) continue;
    if (std::find(out.begin(), out.end(), f) != out.end()) continue;
    out.push_back(std::move(f));
  }
  return out;
}

std::string MorphyLexicon::lemmatize_word(std::string_view word, PartOfSpeech pos) const {
  auto forms = base_forms(word, pos);
  if (forms.empty()) return std::string(word);
  const std::string* best = &forms.front();
  for (const auto& f : forms) {
    if (f.size() < best->size()) best = &f;
  }
  return *best;
}

TokenSeq lemmatize(const TokenSeq& tokens, bool use_pos, const MorphyLexicon& lexicon) {
  TokenSeq out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) {
    if (!is_alpha_word(t)) {
      out.push_back(t);
      continue;
    }
    auto pos = use_pos ? tag_word(t) : PartOfSpeech::Noun;
    out.push_back(lexicon.lemmatize_word(t, pos));
  }
  return out;
}

}  // namespace ontoprep::text
