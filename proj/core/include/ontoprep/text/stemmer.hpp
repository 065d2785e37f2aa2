#pragma once

#include <string>
#include <string_view>

#include "ontoprep/text/tokenize.hpp"

namespace ontoprep::text {

enum class StemAlgorithm { Porter, Snowball, Lancaster };

/// Porter variants. NltkExtensions is the behaviour of NLTK's default
/// PorterStemmer; MartinExtensions follows the author's published
/// implementation; Original is the 1980 rule set.
enum class PorterMode { NltkExtensions, MartinExtensions, Original };

std::string porter_stem(std::string_view word, PorterMode mode = PorterMode::NltkExtensions);

/// English (Porter2) Snowball stemmer.
std::string snowball_english_stem(std::string_view word);

/// Paice/Husk stemmer with the standard rule table.
std::string lancaster_stem(std::string_view word);

/// Stems one token. Tokens that are not purely alphabetic pass through
/// unchanged; alphabetic tokens are lower-cased first.
std::string stem_word(std::string_view word, StemAlgorithm algorithm,
                      PorterMode porter_mode = PorterMode::NltkExtensions);

TokenSeq stem(const TokenSeq& tokens, StemAlgorithm algorithm,
              PorterMode porter_mode = PorterMode::NltkExtensions);

}  // namespace ontoprep::text
