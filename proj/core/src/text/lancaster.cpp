#include <array>
#include <string>
#include <string_view>

#include "ontoprep/text/stemmer.hpp"

namespace ontoprep::text {
namespace {

// Rule syntax: reversed ending, optional '*' (word must be intact), number of
// letters to remove, letters to append, then '>' to continue or '.' to stop.
constexpr std::array<std::string_view, 115> kRules{
    "ai*2.",     "a*1.",     "bb1.",     "city3s.",  "ci2>",     "cn1t>",    "dd1.",
    "dei3y>",    "deec2ss.", "dee1.",    "de2>",     "dooh4>",   "e1>",      "feil1v.",
    "fi2>",      "gni3>",    "gai3y.",   "ga2>",     "gg1.",     "ht*2.",    "hsiug5ct.",
    "hsi3>",     "i*1.",     "i1y>",     "ji1d.",    "juf1s.",   "ju1d.",    "jo1d.",
    "jeh1r.",    "jrev1t.",  "jsim2t.",  "jn1d.",    "j1s.",     "lbaifi6.", "lbai4y.",
    "lba3>",     "lbi3.",    "lib2l>",   "lc1.",     "lufi4y.",  "luf3>",    "lu2.",
    "lai3>",     "lau3>",    "la2>",     "ll1.",     "mui3.",    "mu*2.",    "msi3>",
    "mm1.",      "nois4j>",  "noix4ct.", "noi3>",    "nai3>",    "na2>",     "nee0.",
    "ne2>",      "nn1.",     "pihs4>",   "pp1.",     "re2>",     "rae0.",    "ra2.",
    "ro2>",      "ru2>",     "rr1.",     "rt1>",     "rei3y>",   "sei3y>",   "sis2.",
    "si2>",      "ssen4>",   "ss0.",     "suo3>",    "su*2.",    "s*1>",     "s0.",
    "tacilp4y.", "ta2>",     "tnem4>",   "tne3>",    "tna3>",    "tpir2b.",  "tpro2b.",
    "tcud1.",    "tpmus2.",  "tpec2iv.", "tulo2v.",  "tsis0.",   "tsi3>",    "tt1.",
    "uqi3.",     "ugo1.",    "vis3j>",   "vie0.",    "vi2>",     "ylb1>",    "yli3y>",
    "ylp0.",     "yl2>",     "ygo1.",    "yhp1.",    "ymo1.",    "ypo1.",    "yti3>",
    "yte3>",     "ytl2.",    "yrtsi5.",  "yra3>",    "yro3>",    "yfi3.",    "ycn2t>",
    "yca3>",     "zi2>",     "zy1s.",
};

struct Rule {
  std::string ending;  // in reading order
  bool intact_only = false;
  std::size_t remove = 0;
  std::string append;
  bool stop = false;
};

Rule parse_rule(std::string_view text) {
  Rule r;
  std::size_t i = 0;
  while (i < text.size() && text[i] >= 'a' && text[i] <= 'z') ++i;
  r.ending.assign(text.rbegin() + static_cast<std::ptrdiff_t>(text.size() - i), text.rend());
  if (i < text.size() && text[i] == '*') {
    r.intact_only = true;
    ++i;
  }
  r.remove = static_cast<std::size_t>(text[i++] - '0');
  std::size_t append_start = i;
  while (i < text.size() && text[i] >= 'a' && text[i] <= 'z') ++i;
  r.append = std::string(text.substr(append_start, i - append_start));
  r.stop = i < text.size() && text[i] == '.';
  return r;
}

const std::array<Rule, kRules.size()>& rules() {
  static const auto parsed = [] {
    std::array<Rule, kRules.size()> out;
    for (std::size_t i = 0; i < kRules.size(); ++i) out[i] = parse_rule(kRules[i]);
    return out;
  }();
  return parsed;
}

bool is_lancaster_vowel(char c) { return std::string_view("aeiouy").find(c) != std::string_view::npos; }

bool acceptable(const std::string& word, std::size_t remove) {
  if (word.size() < remove) return false;
  std::size_t left = word.size() - remove;
  if (is_lancaster_vowel(word[0])) return left >= 2;
  return left >= 3 && (is_lancaster_vowel(word[1]) || is_lancaster_vowel(word[2]));
}

}  // namespace

std::string lancaster_stem(std::string_view input) {
  std::string word = ascii_lower(input);
  const std::string intact = word;
  bool proceed = true;
  while (proceed && !word.empty()) {
    char last = word.back();
    bool applied = false;
    for (const auto& rule : rules()) {
      if (rule.ending.back() != last || !word.ends_with(rule.ending)) continue;
      if (rule.intact_only && word != intact) continue;
      if (!acceptable(word, rule.remove)) continue;
      word.resize(word.size() - rule.remove);
      word += rule.append;
      applied = true;
      if (rule.stop) proceed = false;
      break;
    }
    if (!applied) proceed = false;
  }
  return word;
}

}  // namespace ontoprep::text
