#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ontoprep::text {

/// Ordered tokens. Producers in this library never emit an empty token, and
/// order is significant: ["x","y"] and ["y","x"] are different sequences.
using TokenSeq = std::vector<std::string>;

/// Full-word tokenisation of an entity name or label.
///
/// Splits on whitespace, '_', '-' and separator punctuation
/// (. , ; : ! ? ' " ( ) [ ] { } / \ `), then inside each chunk at
///   - lower -> upper transitions        ("isReviewing"  -> is | Reviewing)
///   - letter <-> digit transitions      ("Chromosome1"  -> Chromosome | 1)
///   - the last capital of an upper run that precedes a lower-case letter
///                                       ("NCIThesaurus" -> NCI | Thesaurus)
/// An HTML tag span "<...>" is kept inside the surrounding token so that
/// normalisation can strip it. Other characters (non-ASCII bytes, & + * ...)
/// never create a boundary.
TokenSeq tokenize(std::string_view text);

/// Lower-cases one token, removes "<...>" spans, separators and punctuation.
/// Digits and special characters are preserved. May return "".
std::string normalize_token(std::string_view token);

/// normalize_token over every token; tokens that become empty are dropped.
TokenSeq normalize(const TokenSeq& tokens);

bool is_separator_or_punct(char c);

/// True for a non-empty run of ASCII letters.
bool is_alpha_word(std::string_view word);

std::string ascii_lower(std::string_view s);

std::string join(const TokenSeq& tokens, char sep = ' ');

}  // namespace ontoprep::text
