#include "ontoprep/text/tokenize.hpp"

#include <cctype>

namespace ontoprep::text {
namespace {

enum class CharClass { Upper, Lower, Digit, Other };

CharClass classify(char c) {
  auto u = static_cast<unsigned char>(c);
  if (u >= 'A' && u <= 'Z') return CharClass::Upper;
  if (u >= 'a' && u <= 'z') return CharClass::Lower;
  if (u >= '0' && u <= '9') return CharClass::Digit;
  return CharClass::Other;
}

bool is_letter(CharClass c) { return c == CharClass::Upper || c == CharClass::Lower; }

// Length of the tag starting at text[pos] == '<', or 0 when no '>' closes it.
std::size_t tag_length(std::string_view text, std::size_t pos) {
  auto close = text.find('>', pos + 1);
  if (close == std::string_view::npos) return 0;
  return close - pos + 1;
}

// Splits one separator-free chunk at case and digit boundaries.
void split_chunk(std::string_view chunk, TokenSeq& out) {
  std::string current;
  // Class of the previous word character, reset across tag spans.
  bool have_prev = false;
  CharClass prev = CharClass::Other;

  auto flush = [&] {
    if (!current.empty()) out.push_back(std::move(current));
    current.clear();
  };

  for (std::size_t i = 0; i < chunk.size(); ++i) {
    char c = chunk[i];
    if (c == '<') {
      if (auto len = tag_length(chunk, i); len > 0) {
        current.append(chunk.substr(i, len));
        i += len - 1;
        have_prev = false;
        continue;
      }
    }
    CharClass cls = classify(c);
    if (have_prev) {
      bool boundary = false;
      if (prev == CharClass::Lower && cls == CharClass::Upper) {
        boundary = true;
      } else if ((is_letter(prev) && cls == CharClass::Digit) ||
                 (prev == CharClass::Digit && is_letter(cls))) {
        boundary = true;
      } else if (prev == CharClass::Upper && cls == CharClass::Upper &&
                 i + 1 < chunk.size() && classify(chunk[i + 1]) == CharClass::Lower) {
        boundary = true;
      }
      if (boundary) flush();
    }
    current.push_back(c);
    prev = cls;
    have_prev = true;
  }
  flush();
}

}  // namespace

bool is_separator_or_punct(char c) {
  switch (c) {
    case ' ': case '\t': case '\n': case '\r': case '\f': case '\v':
    case '_': case '-':
    case '.': case ',': case ';': case ':': case '!': case '?':
    case '\'': case '"': case '(': case ')': case '[': case ']':
    case '{': case '}': case '/': case '\\': case '`':
      return true;
    default:
      return false;
  }
}

bool is_alpha_word(std::string_view word) {
  if (word.empty()) return false;
  for (char c : word) {
    if (!is_letter(classify(c))) return false;
  }
  return true;
}

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string join(const TokenSeq& tokens, char sep) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out.push_back(sep);
    out += t;
  }
  return out;
}

TokenSeq tokenize(std::string_view text) {
  TokenSeq out;
  std::size_t start = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '<') {
      if (auto len = tag_length(text, i); len > 0) {
        i += len;
        continue;
      }
    }
    if (is_separator_or_punct(text[i])) {
      if (i > start) split_chunk(text.substr(start, i - start), out);
      start = ++i;
      continue;
    }
    ++i;
  }
  if (start < text.size()) split_chunk(text.substr(start), out);
  return out;
}

std::string normalize_token(std::string_view token) {
  std::string out;
  out.reserve(token.size());
  for (std::size_t i = 0; i < token.size(); ++i) {
    char c = token[i];
    if (c == '<') {
      if (auto len = tag_length(token, i); len > 0) {
        i += len - 1;
        continue;
      }
    }
    if (is_separator_or_punct(c)) continue;
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    out.push_back(c);
  }
  return out;
}

TokenSeq normalize(const TokenSeq& tokens) {
  TokenSeq out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) {
    auto n = normalize_token(t);
    if (!n.empty()) out.push_back(std::move(n));
  }
  return out;
}

}  // namespace ontoprep::text
