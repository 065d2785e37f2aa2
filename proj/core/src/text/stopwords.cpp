#include "ontoprep/text/stopwords.hpp"

#include <fstream>
#include <sstream>

#include "ontoprep/error.hpp"

namespace ontoprep::text {

// Generated at configure time from data/stopwords/english.txt.
extern const char* const kEnglishStopWords;

StopList StopList::from_text(std::string_view text) {
  std::set<std::string, std::less<>> words;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto last = line.find_last_not_of(" \t\r");
    words.insert(ascii_lower(line.substr(first, last - first + 1)));
  }
  return StopList(std::move(words));
}

StopList StopList::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read word list " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_text(buf.str());
}

const StopList& StopList::english() {
  static const StopList list = from_text(kEnglishStopWords);
  return list;
}

TokenSeq remove_stop_words(const TokenSeq& tokens, const StopList& stop_list,
                           const std::set<std::string, std::less<>>& keep) {
  TokenSeq out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) {
    if (stop_list.contains(t) && !keep.contains(t)) continue;
    out.push_back(t);
  }
  if (out.empty()) return tokens;
  return out;
}

}  // namespace ontoprep::text
