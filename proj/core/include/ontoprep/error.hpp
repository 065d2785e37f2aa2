#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ontoprep {

/// Base of every error the toolkit raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax error in an ontology or alignment document.
class MalformedDocument : public Error {
 public:
  MalformedDocument(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}
  explicit MalformedDocument(const std::string& what) : Error(what) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_ = 0;
  std::size_t column_ = 0;
};

class UnsupportedFormat : public Error {
 public:
  using Error::Error;
};

class UnsupportedRelation : public Error {
 public:
  explicit UnsupportedRelation(std::string relation)
      : Error("unsupported alignment relation \"" + relation + "\""),
        relation_(std::move(relation)) {}
  const std::string& relation() const { return relation_; }

 private:
  std::string relation_;
};

class LexiconUnavailable : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

class EmptyEntityText : public Error {
 public:
  using Error::Error;
};

class ProviderUnavailable : public Error {
 public:
  using Error::Error;
};

/// Raised when the provider reports an exhausted quota or billing limit.
/// Never retried.
class QuotaExceeded : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace ontoprep
