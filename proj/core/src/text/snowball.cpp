#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "ontoprep/text/stemmer.hpp"

namespace ontoprep::text {
namespace {

// 'y' is a vowel here; 'Y' marks a y that acts as a consonant.
bool is_v(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
}

bool is_v_wxy(char c) { return is_v(c) || c == 'w' || c == 'x' || c == 'Y'; }

bool is_valid_li(char c) {
  return std::string_view("cdeghkmnrt").find(c) != std::string_view::npos;
}

// Returns the longest entry that `s` ends with, or "" when none does.
template <std::size_t N>
std::string_view longest_suffix(std::string_view s, const std::array<std::string_view, N>& table) {
  std::string_view best;
  for (auto entry : table) {
    if (entry.size() > best.size() && s.ends_with(entry)) best = entry;
  }
  return best;
}

class Porter2 {
 public:
  explicit Porter2(std::string word) : w_(std::move(word)) {}

  std::string run() {
    if (auto e = exception(w_)) return std::string(*e);
    if (w_.size() < 3) return w_;
    prelude();
    mark_regions();
    step1a();
    step1b();
    step1c();
    step2();
    step3();
    step4();
    step5();
    std::replace(w_.begin(), w_.end(), 'Y', 'y');
    return w_;
  }

 private:
  static std::optional<std::string_view> exception(std::string_view w) {
    struct Entry {
      std::string_view form;
      std::string_view stem;
    };
    static constexpr std::array<Entry, 15> kTable{{
        {"andes", "andes"}, {"atlas", "atlas"},   {"bias", "bias"},   {"cosmos", "cosmos"},
        {"early", "earli"}, {"gently", "gentl"},  {"howe", "howe"},   {"idly", "idl"},
        {"news", "news"},   {"only", "onli"},     {"singly", "singl"}, {"skies", "sky"},
        {"skis", "ski"},    {"sky", "sky"},       {"ugly", "ugli"},
    }};
    for (const auto& e : kTable) {
      if (e.form == w) return e.stem;
    }
    return std::nullopt;
  }

  void prelude() {
    if (!w_.empty() && w_[0] == '\'') w_.erase(0, 1);
    if (!w_.empty() && w_[0] == 'y') w_[0] = 'Y';
    for (std::size_t i = 1; i < w_.size(); ++i) {
      if (w_[i] == 'y' && is_v(w_[i - 1])) w_[i] = 'Y';
    }
  }

  // Position just past the first non-vowel that follows a vowel, at or after `from`.
  std::size_t region_start(std::size_t from) const {
    std::size_t i = from;
    while (i < w_.size() && !is_v(w_[i])) ++i;
    if (i >= w_.size()) return w_.size();
    ++i;
    while (i < w_.size() && is_v(w_[i])) ++i;
    if (i >= w_.size()) return w_.size();
    return i + 1;
  }

  void mark_regions() {
    static constexpr std::array<std::string_view, 9> kPrefixes{
        "arsen", "commun", "emerg", "gener", "inter", "later", "organ", "past", "univers"};
    std::size_t prefix = 0;
    for (auto p : kPrefixes) {
      if (std::string_view(w_).starts_with(p)) prefix = std::max(prefix, p.size());
    }
    if (prefix > 0) {
      p1_ = prefix;
    } else {
      p1_ = region_start(0);
      if (p1_ >= w_.size()) {
        p1_ = p2_ = w_.size();
        return;
      }
    }
    p2_ = region_start(p1_);
  }

  bool in_r1(std::size_t pos) const { return p1_ <= pos; }
  bool in_r2(std::size_t pos) const { return p2_ <= pos; }

  static bool shortv(std::string_view s) {
    auto n = s.size();
    if (n >= 3 && !is_v_wxy(s[n - 1]) && is_v(s[n - 2]) && !is_v(s[n - 3])) return true;
    if (n == 2 && !is_v(s[1]) && is_v(s[0])) return true;
    return s.ends_with("past");
  }

  static bool has_vowel(std::string_view s) { return std::any_of(s.begin(), s.end(), is_v); }

  void replace_tail(std::size_t start, std::string_view with) {
    w_.replace(start, std::string::npos, with);
  }

  void step1a() {
    static constexpr std::array<std::string_view, 3> kApostrophe{"'", "'s'", "'s"};
    if (auto a = longest_suffix(w_, kApostrophe); !a.empty()) w_.resize(w_.size() - a.size());

    static constexpr std::array<std::string_view, 6> kSuffixes{"ied", "s", "ies", "sses", "ss", "us"};
    auto suffix = longest_suffix(w_, kSuffixes);
    if (suffix.empty()) return;
    std::size_t start = w_.size() - suffix.size();
    if (suffix == "sses") {
      replace_tail(start, "ss");
    } else if (suffix == "ied" || suffix == "ies") {
      replace_tail(start, start >= 2 ? "i" : "ie");
    } else if (suffix == "s") {
      if (start >= 1 && has_vowel(std::string_view(w_).substr(0, start - 1))) w_.pop_back();
    }
  }

  void step1b() {
    static constexpr std::array<std::string_view, 6> kSuffixes{"ed",   "eed",   "ing",
                                                                "edly", "eedly", "ingly"};
    auto suffix = longest_suffix(w_, kSuffixes);
    if (suffix.empty()) return;
    std::size_t start = w_.size() - suffix.size();
    std::string_view head = std::string_view(w_).substr(0, start);

    if (suffix == "eed" || suffix == "eedly") {
      if (in_r1(start) && head != "succ" && head != "proc" && head != "exc") {
        replace_tail(start, "ee");
      }
      return;
    }
    if (suffix == "ing") {
      static constexpr std::array<std::string_view, 7> kIngStems{"even", "cann", "inn", "earr",
                                                                  "herr", "out",  "y"};
      auto stem = longest_suffix(head, kIngStems);
      if (stem == "y") {
        if (head.size() == 2 && !is_v(head[0])) {
          replace_tail(start - 1, "ie");
          return;
        }
      } else if (!stem.empty() && stem.size() == head.size()) {
        return;
      }
    }

    if (!has_vowel(head)) return;
    w_.resize(start);

    static constexpr std::array<std::string_view, 12> kEndings{
        "bb", "dd", "ff", "gg", "bl", "mm", "nn", "pp", "rr", "at", "tt", "iz"};
    auto ending = longest_suffix(w_, kEndings);
    if (ending == "at" || ending == "bl" || ending == "iz") {
      w_ += 'e';
    } else if (!ending.empty()) {
      bool aeo_double = w_.size() == 3 && (w_[0] == 'a' || w_[0] == 'e' || w_[0] == 'o');
      if (!aeo_double) w_.pop_back();
    } else if (p1_ == w_.size() && shortv(w_)) {
      w_ += 'e';
    }
  }

  void step1c() {
    // The consonant before the y must not be the first letter.
    auto n = w_.size();
    if (n < 3) return;
    if ((w_[n - 1] == 'y' || w_[n - 1] == 'Y') && !is_v(w_[n - 2])) w_[n - 1] = 'i';
  }

  void step2() {
    static constexpr std::array<std::string_view, 25> kSuffixes{
        "anci",    "enci",  "ogi",     "li",      "bli",     "abli",    "alli",
        "fulli",   "lessli", "ousli",  "entli",   "aliti",   "biliti",  "iviti",
        "tional",  "ational", "alism", "ation",   "ization", "izer",    "ator",
        "iveness", "fulness", "ousness", "ogist"};
    auto suffix = longest_suffix(w_, kSuffixes);
    if (suffix.empty()) return;
    std::size_t start = w_.size() - suffix.size();
    if (!in_r1(start)) return;

    struct Replacement {
      std::string_view suffix;
      std::string_view with;
    };
    static constexpr std::array<Replacement, 21> kPlain{{
        {"tional", "tion"}, {"enci", "ence"},    {"anci", "ance"},   {"abli", "able"},
        {"entli", "ent"},   {"izer", "ize"},     {"ization", "ize"}, {"ational", "ate"},
        {"ation", "ate"},   {"ator", "ate"},     {"alli", "al"},     {"aliti", "al"},
        {"alism", "al"},    {"fulli", "ful"},    {"fulness", "ful"}, {"ousli", "ous"},
        {"ousness", "ous"}, {"iviti", "ive"},    {"iveness", "ive"}, {"bli", "ble"},
        {"biliti", "ble"},
    }};
    for (const auto& r : kPlain) {
      if (r.suffix == suffix) {
        replace_tail(start, r.with);
        return;
      }
    }
    if (suffix == "ogist") {
      replace_tail(start, "og");
    } else if (suffix == "ogi") {
      if (start >= 1 && w_[start - 1] == 'l') replace_tail(start, "og");
    } else if (suffix == "lessli") {
      replace_tail(start, "less");
    } else if (suffix == "li") {
      if (start >= 1 && is_valid_li(w_[start - 1])) w_.resize(start);
    }
  }

  void step3() {
    static constexpr std::array<std::string_view, 9> kSuffixes{
        "icate", "ative", "alize", "iciti", "ical", "tional", "ational", "ful", "ness"};
    auto suffix = longest_suffix(w_, kSuffixes);
    if (suffix.empty()) return;
    std::size_t start = w_.size() - suffix.size();
    if (!in_r1(start)) return;
    if (suffix == "tional") {
      replace_tail(start, "tion");
    } else if (suffix == "ational") {
      replace_tail(start, "ate");
    } else if (suffix == "alize") {
      replace_tail(start, "al");
    } else if (suffix == "icate" || suffix == "iciti" || suffix == "ical") {
      replace_tail(start, "ic");
    } else if (suffix == "ful" || suffix == "ness") {
      w_.resize(start);
    } else if (suffix == "ative") {
      if (in_r2(start)) w_.resize(start);
    }
  }

  void step4() {
    static constexpr std::array<std::string_view, 18> kSuffixes{
        "ic",  "ance", "ence", "able", "ible", "ate", "ive", "ize",  "iti",
        "al",  "ism",  "ion",  "er",   "ous",  "ant", "ent", "ment", "ement"};
    auto suffix = longest_suffix(w_, kSuffixes);
    if (suffix.empty()) return;
    std::size_t start = w_.size() - suffix.size();
    if (!in_r2(start)) return;
    if (suffix == "ion") {
      if (start >= 1 && (w_[start - 1] == 's' || w_[start - 1] == 't')) w_.resize(start);
    } else {
      w_.resize(start);
    }
  }

  void step5() {
    if (w_.empty()) return;
    std::size_t start = w_.size() - 1;
    if (w_.back() == 'e') {
      if (in_r2(start) || (in_r1(start) && !shortv(std::string_view(w_).substr(0, start)))) {
        w_.resize(start);
      }
    } else if (w_.back() == 'l') {
      if (in_r2(start) && start >= 1 && w_[start - 1] == 'l') w_.resize(start);
    }
  }

  std::string w_;
  std::size_t p1_ = 0;
  std::size_t p2_ = 0;
};

}  // namespace

std::string snowball_english_stem(std::string_view word) { return Porter2(ascii_lower(word)).run(); }

}  // namespace ontoprep::text
