#include "ontoprep/text/stemmer.hpp"

namespace ontoprep::text {

std::string stem_word(std::string_view word, StemAlgorithm algorithm, PorterMode porter_mode) {
  if (!is_alpha_word(word)) return std::string(word);
  switch (algorithm) {
    case StemAlgorithm::Porter:
      return porter_stem(word, porter_mode);
    case StemAlgorithm::Snowball:
      return snowball_english_stem(word);
    case StemAlgorithm::Lancaster:
      return lancaster_stem(word);
  }
  return std::string(word);
}

TokenSeq stem(const TokenSeq& tokens, StemAlgorithm algorithm, PorterMode porter_mode) {
  TokenSeq out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(stem_word(t, algorithm, porter_mode));
  return out;
}

}  // namespace ontoprep::text
