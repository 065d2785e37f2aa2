#include <cstdint>
#include <string>
#include <unordered_map>

#include "io/rdf_sink.hpp"
#include "ontoprep/error.hpp"
#include "ontoprep/text/tokenize.hpp"

namespace ontoprep::io {
namespace {

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

bool is_name_start(char c) {
  auto u = static_cast<unsigned char>(c);
  return std::isalpha(u) || u >= 0x80 || c == '_';
}

bool is_name_char(char c) {
  auto u = static_cast<unsigned char>(c);
  return is_name_start(c) || std::isdigit(u) || c == '-';
}

class TurtleParser {
 public:
  TurtleParser(std::string_view src, const std::string& base, EntityCollector& sink)
      : src_(src), base_(base), sink_(sink) {}

  void parse() {
    skip_ws();
    while (!at_end()) {
      statement();
      skip_ws();
    }
  }

 private:
  // ---- character access -------------------------------------------------
  bool at_end() const { return pos_ >= src_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }
  char get() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  [[noreturn]] void error(const std::string& what) const {
    throw MalformedDocument("turtle: " + what, line_, col_);
  }
  void expect(char c) {
    if (peek() != c) error(std::string("expected '") + c + "'");
    get();
  }
  void skip_ws() {
    while (!at_end()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        get();
      } else if (c == '#') {
        while (!at_end() && peek() != '\n') get();
      } else {
        break;
      }
    }
  }
  bool keyword_ahead(std::string_view kw) const {
    if (src_.size() - pos_ < kw.size()) return false;
    if (text::ascii_lower(src_.substr(pos_, kw.size())) != kw) return false;
    char after = pos_ + kw.size() < src_.size() ? src_[pos_ + kw.size()] : ' ';
    return !is_name_char(after) && after != ':';
  }

  // ---- statements -------------------------------------------------------
  void statement() {
    if (peek() == '@') {
      get();
      if (keyword_ahead("prefix")) {
        for (int i = 0; i < 6; ++i) get();
        prefix_decl();
      } else if (keyword_ahead("base")) {
        for (int i = 0; i < 4; ++i) get();
        base_decl();
      } else {
        error("unknown directive");
      }
      skip_ws();
      expect('.');
      return;
    }
    if (keyword_ahead("prefix")) {
      for (int i = 0; i < 6; ++i) get();
      prefix_decl();
      return;
    }
    if (keyword_ahead("base")) {
      for (int i = 0; i < 4; ++i) get();
      base_decl();
      return;
    }
    triples();
    skip_ws();
    expect('.');
  }

  void prefix_decl() {
    skip_ws();
    std::string prefix;
    while (!at_end() && peek() != ':') {
      if (!is_name_char(peek()) && peek() != '.') error("bad prefix name");
      prefix.push_back(get());
    }
    expect(':');
    skip_ws();
    prefixes_[prefix] = iri_ref();
  }

  void base_decl() {
    skip_ws();
    base_ = iri_ref();
  }

  void triples() {
    Term subject;
    if (peek() == '[') {
      subject = blank_property_list();
      skip_ws();
      if (peek() == '.') return;
    } else {
      subject = subject_term();
    }
    skip_ws();
    predicate_object_list(subject);
  }

  Term subject_term() {
    char c = peek();
    if (c == '<') return Term::iri(iri_ref());
    if (c == '_' && peek(1) == ':') return blank_label();
    if (c == '(') return collection();
    return Term::iri(prefixed_name());
  }

  void predicate_object_list(const Term& subject) {
    while (true) {
      skip_ws();
      std::string predicate = verb();
      skip_ws();
      object_list(subject, predicate);
      skip_ws();
      if (peek() != ';') return;
      while (peek() == ';') {
        get();
        skip_ws();
      }
      char c = peek();
      if (c == '.' || c == ']' || at_end()) return;
    }
  }

  std::string verb() {
    if (peek() == 'a') {
      char after = peek(1);
      if (!is_name_char(after) && after != ':' && after != '.') {
        get();
        return std::string(kRdfType);
      }
    }
    if (peek() == '<') return iri_ref();
    return prefixed_name();
  }

  void object_list(const Term& subject, const std::string& predicate) {
    while (true) {
      skip_ws();
      Term o = object();
      sink_.triple(subject, predicate, o);
      skip_ws();
      if (peek() != ',') return;
      get();
    }
  }

  Term object() {
    char c = peek();
    if (c == '<') return Term::iri(iri_ref());
    if (c == '_' && peek(1) == ':') return blank_label();
    if (c == '[') return blank_property_list();
    if (c == '(') return collection();
    if (c == '"' || c == '\'') return literal();
    if (c == '+' || c == '-' || c == '.' || std::isdigit(static_cast<unsigned char>(c))) {
      return numeric_literal();
    }
    if (keyword_ahead("true") && src_.substr(pos_, 4) == "true") {
      for (int i = 0; i < 4; ++i) get();
      return Term::literal("true");
    }
    if (keyword_ahead("false") && src_.substr(pos_, 5) == "false") {
      for (int i = 0; i < 5; ++i) get();
      return Term::literal("false");
    }
    return Term::iri(prefixed_name());
  }

  Term blank_property_list() {
    expect('[');
    Term node = Term::blank("t" + std::to_string(++blank_counter_));
    skip_ws();
    if (peek() == ']') {
      get();
      return node;
    }
    predicate_object_list(node);
    skip_ws();
    expect(']');
    return node;
  }

  Term collection() {
    expect('(');
    static const std::string kFirst = std::string(kRdfNs) + "first";
    static const std::string kRest = std::string(kRdfNs) + "rest";
    static const std::string kNil = std::string(kRdfNs) + "nil";
    std::optional<Term> head;
    Term prev;
    skip_ws();
    while (peek() != ')') {
      if (at_end()) error("unterminated collection");
      Term cell = Term::blank("t" + std::to_string(++blank_counter_));
      Term item = object();
      sink_.triple(cell, kFirst, item);
      if (head) {
        sink_.triple(prev, kRest, cell);
      } else {
        head = cell;
      }
      prev = cell;
      skip_ws();
    }
    get();
    if (!head) return Term::iri(kNil);
    sink_.triple(prev, kRest, Term::iri(kNil));
    return *head;
  }

  Term blank_label() {
    get();
    get();
    std::string label;
    while (!at_end() && (is_name_char(peek()) || (peek() == '.' && is_name_char(peek(1))))) {
      label.push_back(get());
    }
    if (label.empty()) error("empty blank node label");
    return Term::blank("l" + label);
  }

  // ---- terminals --------------------------------------------------------
  std::uint32_t hex_escape(int digits) {
    std::uint32_t cp = 0;
    for (int i = 0; i < digits; ++i) {
      char c = at_end() ? '\0' : get();
      cp <<= 4;
      if (c >= '0' && c <= '9') {
        cp |= static_cast<std::uint32_t>(c - '0');
      } else if (c >= 'a' && c <= 'f') {
        cp |= static_cast<std::uint32_t>(c - 'a' + 10);
      } else if (c >= 'A' && c <= 'F') {
        cp |= static_cast<std::uint32_t>(c - 'A' + 10);
      } else {
        error("bad hex escape");
      }
    }
    return cp;
  }

  std::string iri_ref() {
    expect('<');
    std::string raw;
    while (true) {
      if (at_end()) error("unterminated IRI");
      char c = get();
      if (c == '>') break;
      if (c == '\\') {
        char k = at_end() ? '\0' : get();
        if (k == 'u') {
          append_utf8(raw, hex_escape(4));
        } else if (k == 'U') {
          append_utf8(raw, hex_escape(8));
        } else {
          error("bad escape in IRI");
        }
        continue;
      }
      if (c == ' ' || c == '\n' || c == '<' || c == '"') error("illegal character in IRI");
      raw.push_back(c);
    }
    return resolve_iri(base_, raw);
  }

  std::string prefixed_name() {
    std::string prefix;
    while (!at_end() && peek() != ':') {
      char c = peek();
      if (!(is_name_char(c) || (c == '.' && !prefix.empty() && is_name_char(peek(1))))) {
        error(prefix.empty() ? "expected an IRI, prefixed name or literal" : "bad prefixed name");
      }
      prefix.push_back(get());
    }
    if (at_end()) error("unexpected end of input");
    get();
    auto it = prefixes_.find(prefix);
    if (it == prefixes_.end()) error("undefined prefix \"" + prefix + "\"");
    std::string local;
    while (!at_end()) {
      char c = peek();
      if (is_name_char(c) || c == ':') {
        local.push_back(get());
      } else if (c == '.' && (is_name_char(peek(1)) || peek(1) == ':' || peek(1) == '%')) {
        local.push_back(get());
      } else if (c == '%') {
        local.push_back(get());
        for (int i = 0; i < 2; ++i) {
          if (!std::isxdigit(static_cast<unsigned char>(peek()))) error("bad percent escape");
          local.push_back(get());
        }
      } else if (c == '\\') {
        get();
        if (at_end()) error("dangling escape");
        local.push_back(get());
      } else {
        break;
      }
    }
    return it->second + local;
  }

  Term literal() {
    char quote = get();
    bool long_form = peek() == quote && peek(1) == quote;
    if (long_form) {
      get();
      get();
    }
    std::string value;
    while (true) {
      if (at_end()) error("unterminated string");
      char c = peek();
      if (long_form) {
        if (c == quote && peek(1) == quote && peek(2) == quote) {
          get();
          get();
          get();
          break;
        }
      } else {
        if (c == quote) {
          get();
          break;
        }
        if (c == '\n' || c == '\r') error("newline in short string");
      }
      get();
      if (c == '\\') {
        if (at_end()) error("dangling escape");
        char k = get();
        switch (k) {
          case 't': value.push_back('\t'); break;
          case 'b': value.push_back('\b'); break;
          case 'n': value.push_back('\n'); break;
          case 'r': value.push_back('\r'); break;
          case 'f': value.push_back('\f'); break;
          case '"': value.push_back('"'); break;
          case '\'': value.push_back('\''); break;
          case '\\': value.push_back('\\'); break;
          case 'u': append_utf8(value, hex_escape(4)); break;
          case 'U': append_utf8(value, hex_escape(8)); break;
          default: error("bad string escape");
        }
        continue;
      }
      value.push_back(c);
    }
    std::string lang;
    if (peek() == '@') {
      get();
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-')) {
        lang.push_back(get());
      }
      if (lang.empty()) error("empty language tag");
    } else if (peek() == '^' && peek(1) == '^') {
      get();
      get();
      if (peek() == '<') {
        iri_ref();
      } else {
        prefixed_name();
      }
    }
    return Term::literal(std::move(value), std::move(lang));
  }

  Term numeric_literal() {
    std::string v;
    if (peek() == '+' || peek() == '-') v.push_back(get());
    bool any_digit = false;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v.push_back(get());
      any_digit = true;
    }
    if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      v.push_back(get());
      while (std::isdigit(static_cast<unsigned char>(peek()))) v.push_back(get());
      any_digit = true;
    }
    if (any_digit && (peek() == 'e' || peek() == 'E')) {
      v.push_back(get());
      if (peek() == '+' || peek() == '-') v.push_back(get());
      if (!std::isdigit(static_cast<unsigned char>(peek()))) error("bad exponent");
      while (std::isdigit(static_cast<unsigned char>(peek()))) v.push_back(get());
    }
    if (!any_digit) error("bad numeric literal");
    return Term::literal(std::move(v));
  }

  std::string_view src_;
  std::string base_;
  EntityCollector& sink_;
  std::unordered_map<std::string, std::string> prefixes_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
  std::size_t blank_counter_ = 0;
};

}  // namespace

void parse_turtle(std::string_view bytes, const std::string& base, EntityCollector& sink) {
  if (bytes.starts_with("\xEF\xBB\xBF")) bytes.remove_prefix(3);
  TurtleParser(bytes, base, sink).parse();
}

}  // namespace ontoprep::io
