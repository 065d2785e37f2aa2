#include "ontoprep/text/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "ontoprep/error.hpp"

namespace ontoprep::text {
namespace {

std::string_view trim(std::string_view s) {
  auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::shared_ptr<const MorphyLexicon> cached_default_lexicon() {
  static std::mutex mu;
  static std::map<std::filesystem::path, std::shared_ptr<const MorphyLexicon>> cache;
  auto dir = MorphyLexicon::default_dir();
  std::lock_guard lock(mu);
  auto& slot = cache[dir];
  if (!slot) slot = MorphyLexicon::load(dir);
  return slot;
}

Step parse_step(std::string_view item) {
  auto colon = item.find(':');
  auto code = trim(item.substr(0, colon));
  auto arg = colon == std::string_view::npos ? std::string_view{} : trim(item.substr(colon + 1));
  auto lower_arg = ascii_lower(arg);

  if (code == "T" && arg.empty()) return Step::tokenise();
  if (code == "N" && arg.empty()) return Step::normalise();
  if (code == "R" && arg.empty()) return Step::remove_stop_words();
  if (code == "S") {
    if (lower_arg.empty() || lower_arg == "porter") return Step::stem(StemAlgorithm::Porter);
    if (lower_arg == "porter-martin") {
      return Step::stem(StemAlgorithm::Porter, PorterMode::MartinExtensions);
    }
    if (lower_arg == "porter-original") {
      return Step::stem(StemAlgorithm::Porter, PorterMode::Original);
    }
    if (lower_arg == "snowball") return Step::stem(StemAlgorithm::Snowball);
    if (lower_arg == "lancaster") return Step::stem(StemAlgorithm::Lancaster);
    throw ConfigError("unknown stemmer \"" + std::string(arg) + "\"");
  }
  if (code == "L") {
    if (lower_arg.empty() || lower_arg == "nopos") return Step::lemmatise(false);
    if (lower_arg == "pos") return Step::lemmatise(true);
    throw ConfigError("unknown lemmatiser option \"" + std::string(arg) + "\"");
  }
  throw ConfigError("unknown pipeline step \"" + std::string(item) + "\"");
}

std::string step_id(const Step& s) {
  switch (s.kind) {
    case StepKind::Tokenise:
      return "T";
    case StepKind::Normalise:
      return "N";
    case StepKind::RemoveStopWords:
      return "R";
    case StepKind::Stem:
      switch (s.stemmer) {
        case StemAlgorithm::Porter:
          switch (s.porter_mode) {
            case PorterMode::NltkExtensions:
              return "S:porter";
            case PorterMode::MartinExtensions:
              return "S:porter-martin";
            case PorterMode::Original:
              return "S:porter-original";
          }
          break;
        case StemAlgorithm::Snowball:
          return "S:snowball";
        case StemAlgorithm::Lancaster:
          return "S:lancaster";
      }
      break;
    case StepKind::Lemmatise:
      return s.use_pos ? "L:pos" : "L";
  }
  return "?";
}

std::string collapse_whitespace(std::string_view text) {
  std::string out;
  bool pending_space = false;
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

bool is_reserved(const ReservedWordSet* reserved, const std::string& token) {
  return reserved && !reserved->empty() && reserved->contains(ascii_lower(token));
}

}  // namespace

PipelineConfig PipelineConfig::parse(std::string_view spec,
                                     std::shared_ptr<const MorphyLexicon> lexicon) {
  PipelineConfig config;
  auto body = trim(spec);
  if (body.empty() || body == "none" || body == "\xE2\x88\x85") return config;

  std::size_t start = 0;
  while (start <= body.size()) {
    auto comma = body.find(',', start);
    auto item = trim(body.substr(start, comma == std::string_view::npos ? body.size() - start
                                                                           : comma - start));
    if (item.empty()) throw ConfigError("empty step in pipeline \"" + std::string(spec) + "\"");
    // Compact forms such as "TN" or "TNR".
    if (item.size() > 1 && item.find_first_not_of("TNR") == std::string_view::npos) {
      for (char c : item) config.steps.push_back(parse_step(std::string_view(&c, 1)));
    } else {
      config.steps.push_back(parse_step(item));
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (config.has(StepKind::Lemmatise)) {
    config.lexicon = lexicon ? std::move(lexicon) : cached_default_lexicon();
  }
  config.validate();
  return config;
}

void PipelineConfig::validate() const {
  std::set<StepKind> seen;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (!seen.insert(steps[i].kind).second) {
      throw ConfigError("pipeline step " + step_id(steps[i]) + " appears more than once");
    }
    if (steps[i].kind == StepKind::Tokenise && i != 0) {
      throw ConfigError("tokenise must be the first pipeline step");
    }
  }
  if (seen.contains(StepKind::Stem) && seen.contains(StepKind::Lemmatise)) {
    throw ConfigError("a pipeline may stem or lemmatise, not both");
  }
  if (seen.contains(StepKind::Lemmatise) && !lexicon) {
    throw ConfigError("lemmatise step configured without a WordNet lexicon");
  }
}

bool PipelineConfig::has(StepKind kind) const { return find(kind) != nullptr; }

const Step* PipelineConfig::find(StepKind kind) const {
  for (const auto& s : steps) {
    if (s.kind == kind) return &s;
  }
  return nullptr;
}

std::string PipelineConfig::id() const {
  if (steps.empty()) return "none";
  std::string out;
  for (const auto& s : steps) {
    if (!out.empty()) out.push_back(',');
    out += step_id(s);
  }
  return out;
}

ReservedWordSet::ReservedWordSet(std::initializer_list<std::string_view> words) {
  for (auto w : words) insert(w);
}

void ReservedWordSet::insert(std::string_view word) {
  auto w = ascii_lower(trim(word));
  if (!w.empty()) words_.insert(std::move(w));
}

void ReservedWordSet::merge(const ReservedWordSet& other) {
  words_.insert(other.words_.begin(), other.words_.end());
}

bool ReservedWordSet::contains(std::string_view word) const {
  return words_.find(word) != words_.end();
}

std::string ReservedWordSet::serialize() const {
  std::string out;
  for (const auto& w : words_) {
    out += w;
    out.push_back('\n');
  }
  return out;
}

ReservedWordSet ReservedWordSet::parse(std::string_view text) {
  ReservedWordSet set;
  std::size_t start = 0;
  while (start < text.size()) {
    auto nl = text.find('\n', start);
    auto line = trim(text.substr(start, nl == std::string_view::npos ? text.size() - start
                                                                     : nl - start));
    if (!line.empty() && line.front() != '#') set.insert(line);
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  return set;
}

ReservedWordSet ReservedWordSet::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read reserved-word file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

void ReservedWordSet::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write reserved-word file " + path.string());
  out << serialize();
}

TokenSeq run_pipeline(std::string_view text, const PipelineConfig& config,
                      const ReservedWordSet* reserved) {
  TokenSeq tokens;
  if (config.has(StepKind::Tokenise)) {
    tokens = tokenize(text);
  } else if (auto whole = collapse_whitespace(text); !whole.empty()) {
    tokens.push_back(std::move(whole));
  }

  for (const auto& step : config.steps) {
    switch (step.kind) {
      case StepKind::Tokenise:
        break;
      case StepKind::Normalise:
        tokens = normalize(tokens);
        break;
      case StepKind::RemoveStopWords: {
        const auto& stop = config.effective_stop_list();
        auto is_stop = [&](const std::string& t) {
          return stop.contains(t) && !config.stop_list_keep.contains(t);
        };
        // The empty-result guard looks at stop words only, so reserving a
        // word never turns a guarded sequence into a shorter one.
        if (std::all_of(tokens.begin(), tokens.end(), is_stop)) break;
        std::erase_if(tokens, [&](const std::string& t) {
          return is_stop(t) && !is_reserved(reserved, t);
        });
        break;
      }
      case StepKind::Stem:
        for (auto& t : tokens) {
          if (!is_reserved(reserved, t)) t = stem_word(t, step.stemmer, step.porter_mode);
        }
        break;
      case StepKind::Lemmatise:
        for (auto& t : tokens) {
          if (is_reserved(reserved, t) || !is_alpha_word(t)) continue;
          auto pos = step.use_pos ? tag_word(t) : PartOfSpeech::Noun;
          t = config.lexicon->lemmatize_word(t, pos);
        }
        break;
    }
  }
  return tokens;
}

CanonicalKey apply_pipeline(std::string_view text, const PipelineConfig& config,
                            const ReservedWordSet* reserved) {
  return CanonicalKey{join(run_pipeline(text, config, reserved))};
}

TokenSeq surface_tokens(std::string_view text) { return normalize(tokenize(text)); }

std::string reduce_word(std::string_view word, const PipelineConfig& config) {
  std::string w(word);
  for (const auto& step : config.steps) {
    switch (step.kind) {
      case StepKind::Tokenise:
      case StepKind::Normalise:
        break;
      case StepKind::RemoveStopWords:
        if (config.effective_stop_list().contains(w) && !config.stop_list_keep.contains(w)) {
          return {};
        }
        break;
      case StepKind::Stem:
        w = stem_word(w, step.stemmer, step.porter_mode);
        break;
      case StepKind::Lemmatise:
        if (is_alpha_word(w)) {
          w = config.lexicon->lemmatize_word(w, step.use_pos ? tag_word(w) : PartOfSpeech::Noun);
        }
        break;
    }
  }
  return w;
}

}  // namespace ontoprep::text
