#include "ontoprep/llm.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <ctime>
#include <thread>

#include "ontoprep/text/pipeline.hpp"

namespace ontoprep::llm {
namespace {

constexpr std::string_view kQuestion = "Is {Entity1} equivalent to {Entity2}? Answer yes or no.";
constexpr std::string_view kExample = "Example: Hair_root is equivalent to Hair_Root.\n";
constexpr std::string_view kExplain = "\nWrite a short explanation.";

struct Mentions {
  bool yes = false;
  bool no = false;
};

Mentions scan(std::string_view s) {
  Mentions m;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && !std::isalpha(static_cast<unsigned char>(s[i]))) ++i;
    auto start = i;
    while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) ++i;
    auto word = text::ascii_lower(s.substr(start, i - start));
    if (word == "yes") m.yes = true;
    if (word == "no") m.no = true;
  }
  return m;
}

std::string cache_key(std::string_view model, PromptTemplate id, std::string_view e1,
                      std::string_view e2) {
  return nlohmann::json::array({model, to_string(id), e1, e2}).dump();
}

std::string utc_timestamp() {
  auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

PromptTemplate parse_template(std::string_view name) {
  auto n = text::ascii_lower(name);
  if (n == "pt1") return PromptTemplate::PT1;
  if (n == "pt2") return PromptTemplate::PT2;
  if (n == "pt3") return PromptTemplate::PT3;
  if (n == "pt4") return PromptTemplate::PT4;
  throw ConfigError("unknown prompt template \"" + std::string(name) + "\"");
}

std::string_view to_string(PromptTemplate id) {
  switch (id) {
    case PromptTemplate::PT1:
      return "PT1";
    case PromptTemplate::PT2:
      return "PT2";
    case PromptTemplate::PT3:
      return "PT3";
    case PromptTemplate::PT4:
      return "PT4";
  }
  return "PT1";
}

std::string_view template_body(PromptTemplate id) {
  static const std::string pt1(kQuestion);
  static const std::string pt2 = std::string(kExample) + std::string(kQuestion);
  static const std::string pt3 = std::string(kQuestion) + std::string(kExplain);
  static const std::string pt4 = pt2 + std::string(kExplain);
  switch (id) {
    case PromptTemplate::PT1:
      return pt1;
    case PromptTemplate::PT2:
      return pt2;
    case PromptTemplate::PT3:
      return pt3;
    case PromptTemplate::PT4:
      return pt4;
  }
  return pt1;
}

std::string render_prompt(PromptTemplate id, std::string_view entity1, std::string_view entity2) {
  if (entity1.empty() || entity2.empty()) {
    throw EmptyEntityText("prompt needs two non-empty entity texts");
  }
  constexpr std::string_view kFirst = "{Entity1}";
  constexpr std::string_view kSecond = "{Entity2}";
  auto body = template_body(id);
  std::string out;
  // One pass over the template, so entity texts are never rescanned.
  for (std::size_t i = 0; i < body.size();) {
    if (body.substr(i).starts_with(kFirst)) {
      out += entity1;
      i += kFirst.size();
    } else if (body.substr(i).starts_with(kSecond)) {
      out += entity2;
      i += kSecond.size();
    } else {
      out += body[i++];
    }
  }
  return out;
}

Answer parse_verdict(std::string_view raw) {
  auto end = raw.find_first_of(".!?\n");
  auto first = scan(raw.substr(0, end));
  if (first.yes != first.no) return first.yes ? Answer::Yes : Answer::No;
  auto all = scan(raw);
  if (all.yes != all.no) return all.yes ? Answer::Yes : Answer::No;
  return Answer::Unparseable;
}

void ProviderConfig::validate() const {
  if (temperature != 0.0) throw ConfigError("provider temperature must be 0");
  if (max_in_flight == 0) throw ConfigError("max_in_flight must be positive");
  if (kind == "http") {
    if (endpoint.empty()) throw ConfigError("http provider needs an endpoint");
    if (model_name.empty()) throw ConfigError("http provider needs a model name");
  } else if (kind != "stub") {
    throw ConfigError("unknown provider kind \"" + kind + "\"");
  }
}

ProviderConfig ProviderConfig::stub() {
  ProviderConfig c;
  c.kind = "stub";
  c.model_name = "stub";
  return c;
}

std::string StubProvider::complete(const std::string& prompt) {
  ++requests_;
  constexpr std::string_view kHead = "Is ";
  constexpr std::string_view kMid = " equivalent to ";
  constexpr std::string_view kTail = "? Answer yes or no.";
  auto start = prompt.rfind(std::string("\n") + std::string(kHead));
  start = start == std::string::npos ? (prompt.starts_with(kHead) ? 0 : std::string::npos)
                                     : start + 1;
  auto stop = start == std::string::npos ? std::string::npos : prompt.find(kTail, start);
  auto question = start == std::string::npos || stop == std::string::npos
                      ? std::string_view{}
                      : std::string_view(prompt).substr(start + kHead.size(),
                                                        stop - start - kHead.size());
  auto mid = question.find(kMid);
  if (mid == std::string_view::npos) return "I cannot tell from this prompt.";
  auto a = text::surface_tokens(question.substr(0, mid));
  auto b = text::surface_tokens(question.substr(mid + kMid.size()));
  bool explain = prompt.ends_with(kExplain);
  if (a == b) {
    return explain ? "Yes. Both names reduce to the same words." : "Yes, they are equivalent.";
  }
  return explain ? "No. The names reduce to different words." : "No, they are not equivalent.";
}

std::unique_ptr<Provider> make_provider(const ProviderConfig& config) {
  config.validate();
  if (config.kind == "stub") return std::make_unique<StubProvider>();
  const char* key = std::getenv(config.api_key_env.c_str());
  return std::make_unique<HttpProvider>(config, key ? key : "");
}

VerdictCache::VerdictCache(const std::filesystem::path& file) {
  if (std::ifstream in{file}) {
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      // A run killed mid-write leaves a truncated last line; skip it.
      auto j = nlohmann::json::parse(line, nullptr, false);
      if (j.is_discarded() || !j.is_object()) continue;
      try {
        auto key = cache_key(j.at("model").get<std::string>(),
                             parse_template(j.at("template").get<std::string>()),
                             j.at("e1").get<std::string>(), j.at("e2").get<std::string>());
        entries_[key] = {parse_answer(j.at("answer").get<std::string>()),
                         j.value("raw_text", std::string())};
      } catch (const std::exception&) {
        continue;
      }
    }
  }
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  out_.open(file, std::ios::binary | std::ios::app);
  if (!out_) throw Error("cannot open verdict cache " + file.string());
}

std::optional<VerdictCache::Entry> VerdictCache::find(std::string_view model, PromptTemplate id,
                                                      std::string_view entity1,
                                                      std::string_view entity2) const {
  std::lock_guard lock(mutex_);
  auto it = entries_.find(cache_key(model, id, entity1, entity2));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void VerdictCache::store(std::string_view model, PromptTemplate id, std::string_view entity1,
                         std::string_view entity2, const Entry& entry) {
  std::lock_guard lock(mutex_);
  entries_[cache_key(model, id, entity1, entity2)] = entry;
  if (!out_.is_open()) return;
  nlohmann::ordered_json j;
  j["model"] = model;
  j["template"] = to_string(id);
  j["e1"] = entity1;
  j["e2"] = entity2;
  j["answer"] = to_string(entry.answer);
  j["raw_text"] = entry.raw_text;
  j["timestamp"] = utc_timestamp();
  out_ << j.dump() << '\n';
  out_.flush();
}

std::size_t VerdictCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

LlmVerdict classify_pair(Provider& provider, const ProviderConfig& config, PromptTemplate id,
                         std::string_view entity1, std::string_view entity2, VerdictCache& cache) {
  LlmVerdict verdict;
  verdict.model = provider.model();
  verdict.template_id = id;
  if (auto hit = cache.find(verdict.model, id, entity1, entity2)) {
    verdict.answer = hit->answer;
    verdict.raw_text = hit->raw_text;
    verdict.cached = true;
    return verdict;
  }
  auto prompt = render_prompt(id, entity1, entity2);
  auto backoff = config.retry_backoff;
  for (std::size_t attempt = 0;; ++attempt) {
    try {
      verdict.raw_text = provider.complete(prompt);
      break;
    } catch (const TransientError& e) {
      if (attempt >= config.retry_limit) {
        throw ProviderUnavailable("provider failed after " + std::to_string(attempt + 1) +
                                  " attempts: " + e.what());
      }
      std::this_thread::sleep_for(backoff);
      backoff *= 2;
    }
  }
  verdict.answer = parse_verdict(verdict.raw_text);
  cache.store(verdict.model, id, entity1, entity2, {verdict.answer, verdict.raw_text});
  return verdict;
}

std::string_view to_string(CellDecision decision) {
  switch (decision) {
    case CellDecision::ConfirmedByKeys:
      return "confirmed-by-keys";
    case CellDecision::KeptYes:
      return "kept-yes";
    case CellDecision::RemovedNo:
      return "removed-no";
    case CellDecision::KeptUnparseable:
      return "kept-unparseable";
  }
  return "?";
}

std::string audit_jsonl(const std::vector<AuditRecord>& audit) {
  std::string out;
  for (const auto& r : audit) {
    nlohmann::ordered_json j;
    j["entity1"] = r.entity1;
    j["entity2"] = r.entity2;
    j["text1"] = r.text1;
    j["text2"] = r.text2;
    j["decision"] = to_string(r.decision);
    j["cached"] = r.cached;
    if (!r.raw_text.empty()) j["raw_text"] = r.raw_text;
    out += j.dump();
    out += '\n';
  }
  return out;
}

}  // namespace ontoprep::llm
