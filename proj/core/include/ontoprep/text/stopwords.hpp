#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <string_view>

#include "ontoprep/text/tokenize.hpp"

namespace ontoprep::text {

/// An immutable set of lower-case stop words.
class StopList {
 public:
  StopList() = default;
  explicit StopList(std::set<std::string, std::less<>> words) : words_(std::move(words)) {}

  /// The bundled 179-word English list.
  static const StopList& english();

  /// One word per line; blank lines and lines starting with '#' are skipped.
  static StopList from_file(const std::filesystem::path& path);
  static StopList from_text(std::string_view text);

  bool contains(std::string_view word) const { return words_.find(word) != words_.end(); }
  std::size_t size() const { return words_.size(); }
  const std::set<std::string, std::less<>>& words() const { return words_; }

 private:
  std::set<std::string, std::less<>> words_;
};

/// Words listed in `keep` are never removed. When every token would be
/// removed the input is returned unchanged.
TokenSeq remove_stop_words(const TokenSeq& tokens, const StopList& stop_list,
                           const std::set<std::string, std::less<>>& keep = {});

}  // namespace ontoprep::text
