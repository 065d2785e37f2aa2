#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "ontoprep/text/stemmer.hpp"

namespace ontoprep::text {
namespace {

bool is_vowel_letter(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

// Conditions on the stem left after removing a suffix. The Head* variants
// look at the whole word minus a fixed count, as NLTK does.
enum class Cond {
  None,
  PositiveMeasure,
  MeasureAbove1,
  Ion,
  ContainsVowel,
  ConsonantBefore,
  DoubleNotLsz,
  ShortCvc,
  HeadMinus3Positive,
  HeadMinus1Above1,
};

enum ModeMask : unsigned { kOriginal = 1, kMartin = 2, kNltk = 4, kAll = 7 };

struct Rule {
  std::string_view suffix;  // "*d": any doubled consonant
  std::string_view replacement;
  Cond cond = Cond::None;
  unsigned modes = kAll;
};

unsigned mask_of(PorterMode mode) {
  switch (mode) {
    case PorterMode::Original:
      return kOriginal;
    case PorterMode::MartinExtensions:
      return kMartin;
    case PorterMode::NltkExtensions:
      return kNltk;
  }
  return kNltk;
}

constexpr std::array<Rule, 4> kStep1a{{{"sses", "ss"}, {"ies", "i"}, {"ss", "ss"}, {"s", ""}}};

constexpr std::array<Rule, 5> kStep1bTail{{
    {"at", "ate"},
    {"bl", "ble"},
    {"iz", "ize"},
    {"*d", "", Cond::DoubleNotLsz},
    {"", "e", Cond::ShortCvc},
}};

constexpr auto P = Cond::PositiveMeasure;
constexpr std::array<Rule, 24> kStep2{{
    {"ational", "ate", P},
    {"tional", "tion", P},
    {"enci", "ence", P},
    {"anci", "ance", P},
    {"izer", "ize", P},
    {"abli", "able", P, kOriginal},
    {"bli", "ble", P, kMartin | kNltk},
    {"alli", "al", P},
    {"entli", "ent", P},
    {"eli", "e", P},
    {"ousli", "ous", P},
    {"ization", "ize", P},
    {"ation", "ate", P},
    {"ator", "ate", P},
    {"alism", "al", P},
    {"iveness", "ive", P},
    {"fulness", "ful", P},
    {"ousness", "ous", P},
    {"aliti", "al", P},
    {"iviti", "ive", P},
    {"biliti", "ble", P},
    {"fulli", "ful", P, kNltk},
    {"logi", "log", Cond::HeadMinus3Positive, kNltk},
    {"logi", "log", P, kMartin},
}};

constexpr std::array<Rule, 7> kStep3{{
    {"icate", "ic", P},
    {"ative", "", P},
    {"alize", "al", P},
    {"iciti", "ic", P},
    {"ical", "ic", P},
    {"ful", "", P},
    {"ness", "", P},
}};

constexpr auto G = Cond::MeasureAbove1;
constexpr std::array<Rule, 19> kStep4{{
    {"al", "", G},   {"ance", "", G}, {"ence", "", G},     {"er", "", G},  {"ic", "", G},
    {"able", "", G}, {"ible", "", G}, {"ant", "", G},      {"ement", "", G}, {"ment", "", G},
    {"ent", "", G},  {"ion", "", Cond::Ion}, {"ou", "", G}, {"ism", "", G}, {"ate", "", G},
    {"iti", "", G},  {"ous", "", G},  {"ive", "", G},      {"ize", "", G},
}};

constexpr std::array<Rule, 1> kStep5b{{{"ll", "l", Cond::HeadMinus1Above1}}};

class PorterStemmer {
 public:
  explicit PorterStemmer(PorterMode mode) : mode_(mode), mask_(mask_of(mode)) {}

  std::string run(std::string word) const {
    if (mode_ == PorterMode::NltkExtensions) {
      if (auto irregular = irregular_form(word)) return *irregular;
    }
    if (mode_ != PorterMode::Original && word.size() <= 2) return word;
    word = step1a(std::move(word));
    word = step1b(std::move(word));
    word = step1c(std::move(word));
    word = step2(std::move(word));
    word = apply_rules(std::move(word), kStep3);
    word = apply_rules(std::move(word), kStep4);
    word = step5a(std::move(word));
    word = apply_rules(std::move(word), kStep5b);
    return word;
  }

 private:
  static std::optional<std::string> irregular_form(std::string_view word) {
    struct Entry {
      std::string_view form;
      std::string_view stem;
    };
    static constexpr std::array<Entry, 16> kPool{{
        {"sky", "sky"},         {"skies", "sky"},       {"dying", "die"},
        {"lying", "lie"},       {"tying", "tie"},       {"news", "news"},
        {"innings", "inning"},  {"inning", "inning"},   {"outings", "outing"},
        {"outing", "outing"},   {"cannings", "canning"}, {"canning", "canning"},
        {"howe", "howe"},       {"proceed", "proceed"}, {"exceed", "exceed"},
        {"succeed", "succeed"},
    }};
    for (const auto& e : kPool) {
      if (e.form == word) return std::string(e.stem);
    }
    return std::nullopt;
  }

  static bool is_consonant(std::string_view w, std::size_t i) {
    if (is_vowel_letter(w[i])) return false;
    if (w[i] == 'y') return i == 0 ? true : !is_consonant(w, i - 1);
    return true;
  }

  static int measure(std::string_view stem) {
    int m = 0;
    bool prev_consonant = true;
    for (std::size_t i = 0; i < stem.size(); ++i) {
      bool c = is_vowel_letter(stem[i]) ? false : stem[i] == 'y' ? (i == 0 || !prev_consonant) : true;
      if (i > 0 && !prev_consonant && c) ++m;
      prev_consonant = c;
    }
    return m;
  }

  static bool contains_vowel(std::string_view stem) {
    for (std::size_t i = 0; i < stem.size(); ++i) {
      if (!is_consonant(stem, i)) return true;
    }
    return false;
  }

  static bool ends_double_consonant(std::string_view w) {
    return w.size() >= 2 && w.back() == w[w.size() - 2] && is_consonant(w, w.size() - 1);
  }

  bool ends_cvc(std::string_view w) const {
    auto n = w.size();
    if (n >= 3 && is_consonant(w, n - 3) && !is_consonant(w, n - 2) && is_consonant(w, n - 1) &&
        w.back() != 'w' && w.back() != 'x' && w.back() != 'y') {
      return true;
    }
    return mode_ == PorterMode::NltkExtensions && n == 2 && !is_consonant(w, 0) &&
           is_consonant(w, 1);
  }

  bool holds(Cond cond, std::string_view word, std::string_view stem) const {
    switch (cond) {
      case Cond::None:
        return true;
      case Cond::PositiveMeasure:
        return measure(stem) > 0;
      case Cond::MeasureAbove1:
        return measure(stem) > 1;
      case Cond::Ion:
        return measure(stem) > 1 && !stem.empty() && (stem.back() == 's' || stem.back() == 't');
      case Cond::ContainsVowel:
        return contains_vowel(stem);
      case Cond::ConsonantBefore:
        return stem.size() > 1 && is_consonant(stem, stem.size() - 1);
      case Cond::DoubleNotLsz:
        return word.back() != 'l' && word.back() != 's' && word.back() != 'z';
      case Cond::ShortCvc:
        return measure(stem) == 1 && ends_cvc(stem);
      case Cond::HeadMinus3Positive:
        return word.size() >= 3 && measure(word.substr(0, word.size() - 3)) > 0;
      case Cond::HeadMinus1Above1:
        return !word.empty() && measure(word.substr(0, word.size() - 1)) > 1;
    }
    return false;
  }

  // Applies the first rule whose suffix matches; a failing condition on that
  // rule leaves the word unchanged.
  template <std::size_t N>
  std::string apply_rules(std::string word, const std::array<Rule, N>& rules) const {
    for (const auto& rule : rules) {
      if (!(rule.modes & mask_)) continue;
      std::size_t cut = 0;
      std::string_view replacement = rule.replacement;
      if (rule.suffix == "*d") {
        if (!ends_double_consonant(word)) continue;
        cut = 1;  // drop one of the pair
      } else if (word.ends_with(rule.suffix)) {
        cut = rule.suffix.size();
      } else {
        continue;
      }
      std::string_view stem(word.data(), word.size() - cut);
      if (rule.suffix == "*d") stem = std::string_view(word.data(), word.size() - 2);
      if (!holds(rule.cond, word, stem)) return word;
      word.resize(word.size() - cut);
      word += replacement;
      return word;
    }
    return word;
  }

  std::string step1a(std::string word) const {
    if (mode_ == PorterMode::NltkExtensions && word.ends_with("ies") && word.size() == 4) {
      return word.substr(0, 1) + "ie";
    }
    return apply_rules(std::move(word), kStep1a);
  }

  std::string step1b(std::string word) const {
    if (mode_ == PorterMode::NltkExtensions && word.ends_with("ied")) {
      return word.substr(0, word.size() - 3) + (word.size() == 4 ? "ie" : "i");
    }
    if (word.ends_with("eed")) {
      std::string_view stem(word.data(), word.size() - 3);
      if (measure(stem) > 0) word.resize(word.size() - 1);
      return word;
    }
    std::size_t cut = 0;
    for (std::string_view suffix : {std::string_view("ed"), std::string_view("ing")}) {
      if (word.ends_with(suffix) &&
          contains_vowel(std::string_view(word.data(), word.size() - suffix.size()))) {
        cut = suffix.size();
        break;
      }
    }
    if (cut == 0) return word;
    word.resize(word.size() - cut);
    return apply_rules(std::move(word), kStep1bTail);
  }

  std::string step1c(std::string word) const {
    auto cond = mode_ == PorterMode::NltkExtensions ? Cond::ConsonantBefore : Cond::ContainsVowel;
    if (word.ends_with('y') && holds(cond, word, std::string_view(word.data(), word.size() - 1))) {
      word.back() = 'i';
    }
    return word;
  }

  std::string step2(std::string word) const {
    if (mode_ == PorterMode::NltkExtensions && word.ends_with("alli") &&
        measure(std::string_view(word.data(), word.size() - 4)) > 0) {
      word.resize(word.size() - 2);
      return step2(std::move(word));
    }
    return apply_rules(std::move(word), kStep2);
  }

  std::string step5a(std::string word) const {
    if (word.ends_with('e')) {
      std::string_view stem(word.data(), word.size() - 1);
      int m = measure(stem);
      if (m > 1 || (m == 1 && !ends_cvc(stem))) word.pop_back();
    }
    return word;
  }

  PorterMode mode_;
  unsigned mask_;
};

}  // namespace

std::string porter_stem(std::string_view word, PorterMode mode) {
  return PorterStemmer(mode).run(ascii_lower(word));
}

}  // namespace ontoprep::text
