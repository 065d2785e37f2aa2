#include <toml.hpp>

#include <set>

#include "ontoprep/error.hpp"
#include "ontoprep/experiment.hpp"

namespace ontoprep {
namespace {

namespace fs = std::filesystem;

toml::table parse_toml(std::string_view text, const std::string& origin) {
  try {
    return toml::parse(text, origin);
  } catch (const toml::parse_error& e) {
    const auto& where = e.source().begin;
    throw ConfigError(origin + ":" + std::to_string(where.line) + ":" +
                      std::to_string(where.column) + ": " + std::string(e.description()));
  }
}

template <typename T>
std::optional<T> get(const toml::table& t, std::string_view key) {
  const auto* node = t.get(key);
  if (!node) return std::nullopt;
  if (auto v = node->value<T>()) return v;
  throw ConfigError("manifest key \"" + std::string(key) + "\" has the wrong type");
}

std::string require(const toml::table& t, std::string_view key, std::string_view where) {
  auto v = get<std::string>(t, key);
  if (!v || v->empty()) {
    throw ConfigError(std::string(where) + " needs a \"" + std::string(key) + "\" entry");
  }
  return *v;
}

/// A string or an array of strings.
std::vector<std::string> string_list(const toml::table& t, std::string_view key) {
  std::vector<std::string> out;
  const auto* node = t.get(key);
  if (!node) return out;
  if (auto s = node->value<std::string>()) {
    out.push_back(*s);
    return out;
  }
  const auto* arr = node->as_array();
  if (!arr) throw ConfigError("manifest key \"" + std::string(key) + "\" must be a string list");
  for (const auto& item : *arr) {
    auto s = item.value<std::string>();
    if (!s) throw ConfigError("manifest key \"" + std::string(key) + "\" must hold strings");
    out.push_back(*s);
  }
  return out;
}

fs::path resolve(const fs::path& base, const std::string& p) {
  fs::path path(p);
  return path.is_absolute() ? path : (base / path).lexically_normal();
}

llm::ProviderConfig provider_from(const toml::table& t) {
  llm::ProviderConfig c;
  if (auto v = get<std::string>(t, "kind")) c.kind = *v;
  if (auto v = get<std::string>(t, "endpoint")) c.endpoint = *v;
  if (auto v = get<std::string>(t, "model")) c.model_name = *v;
  if (auto v = get<double>(t, "temperature")) c.temperature = *v;
  if (auto v = get<std::int64_t>(t, "max_in_flight")) c.max_in_flight = static_cast<std::size_t>(*v);
  if (auto v = get<std::int64_t>(t, "retry_limit")) c.retry_limit = static_cast<std::size_t>(*v);
  if (auto v = get<std::int64_t>(t, "timeout_ms")) c.timeout = std::chrono::milliseconds(*v);
  if (auto v = get<std::int64_t>(t, "retry_backoff_ms")) {
    c.retry_backoff = std::chrono::milliseconds(*v);
  }
  if (auto v = get<std::string>(t, "auth_header")) c.auth_header = *v;
  if (auto v = get<std::string>(t, "auth_prefix")) c.auth_prefix = *v;
  if (auto v = get<std::string>(t, "api_key_env")) c.api_key_env = *v;
  if (c.kind == "stub" && c.model_name.empty()) c.model_name = "stub";
  c.validate();
  return c;
}

}  // namespace

llm::ProviderConfig llm::ProviderConfig::load(const std::filesystem::path& path) {
  auto table = parse_toml(read_file(path), path.string());
  // Accept either a bare provider file or one with a [provider] table.
  if (const auto* inner = table.get_as<toml::table>("provider")) return provider_from(*inner);
  return provider_from(table);
}

RepairMode parse_repair_mode(std::string_view name) {
  if (name == "none") return RepairMode::None;
  if (name == "logic") return RepairMode::Logic;
  if (name == "llm") return RepairMode::Llm;
  if (name == "combined") return RepairMode::Combined;
  throw ConfigError("unknown repair mode \"" + std::string(name) + "\"");
}

std::string_view to_string(RepairMode mode) {
  switch (mode) {
    case RepairMode::None:
      return "none";
    case RepairMode::Logic:
      return "logic";
    case RepairMode::Llm:
      return "llm";
    case RepairMode::Combined:
      return "combined";
  }
  return "none";
}

ExperimentConfig ExperimentConfig::parse(std::string_view toml_text, const fs::path& base_dir) {
  auto t = parse_toml(toml_text, (base_dir / "manifest").string());
  ExperimentConfig c;
  if (auto v = get<std::string>(t, "track")) c.track = *v;
  c.track_root = resolve(base_dir, get<std::string>(t, "track_root").value_or("."));
  c.output_dir = resolve(base_dir, get<std::string>(t, "output_dir").value_or("out"));
  if (auto v = get<std::string>(t, "label_policy")) c.label_policy = parse_label_policy(*v);
  if (auto v = get<std::string>(t, "format")) c.format = parse_format(*v);
  c.annotation_props = string_list(t, "annotation_props");
  if (auto v = get<std::string>(t, "template")) c.template_id = llm::parse_template(*v);
  if (auto v = get<std::int64_t>(t, "jobs")) {
    if (*v < 1) throw ConfigError("jobs must be at least 1");
    c.jobs = static_cast<std::size_t>(*v);
  }
  c.cache = resolve(base_dir, get<std::string>(t, "cache").value_or(""));
  if (!t.contains("cache")) c.cache = c.output_dir / "llm-cache.jsonl";

  auto modes = string_list(t, "repair");
  if (!modes.empty()) {
    c.repairs.clear();
    for (const auto& m : modes) c.repairs.push_back(parse_repair_mode(m));
  }
  if (const auto* p = t.get_as<toml::table>("provider")) c.provider = provider_from(*p);

  std::set<std::string, std::less<>> keep;
  for (const auto& w : string_list(t, "stop_keep")) keep.insert(text::ascii_lower(w));
  if (auto file = get<std::string>(t, "stop_keep_file")) {
    auto words = text::StopList::from_file(resolve(base_dir, *file));
    keep.insert(words.words().begin(), words.words().end());
  }
  std::shared_ptr<const text::MorphyLexicon> lexicon;
  if (auto dir = get<std::string>(t, "wordnet")) {
    lexicon = text::MorphyLexicon::load(resolve(base_dir, *dir));
  }

  if (const auto* arr = t.get_as<toml::array>("pipelines")) {
    for (const auto& node : *arr) {
      const auto* p = node.as_table();
      if (!p) throw ConfigError("[[pipelines]] entries must be tables");
      auto steps = get<std::string>(*p, "steps").value_or("");
      PipelineSpec spec{get<std::string>(*p, "id").value_or(""),
                        text::PipelineConfig::parse(steps, lexicon)};
      if (spec.id.empty()) spec.id = spec.config.id();
      spec.config.stop_list_keep = keep;
      c.pipelines.push_back(std::move(spec));
    }
  }
  if (const auto* arr = t.get_as<toml::array>("pairs")) {
    for (const auto& node : *arr) {
      const auto* p = node.as_table();
      if (!p) throw ConfigError("[[pairs]] entries must be tables");
      PairSpec pair;
      pair.source = resolve(c.track_root, require(*p, "source", "[[pairs]]"));
      pair.target = resolve(c.track_root, require(*p, "target", "[[pairs]]"));
      pair.reference = resolve(c.track_root, require(*p, "reference", "[[pairs]]"));
      pair.id = get<std::string>(*p, "id").value_or(pair.source.stem().string() + "-" +
                                                    pair.target.stem().string());
      c.pairs.push_back(std::move(pair));
    }
  }
  c.validate();
  return c;
}

ExperimentConfig ExperimentConfig::load(const fs::path& manifest) {
  return parse(read_file(manifest), manifest.parent_path());
}

void ExperimentConfig::validate() const {
  if (pairs.empty()) throw ConfigError("manifest lists no [[pairs]]");
  if (pipelines.empty()) throw ConfigError("manifest lists no [[pipelines]]");
  if (repairs.empty()) throw ConfigError("manifest lists no repair mode");
  std::set<std::string> ids;
  for (const auto& p : pipelines) {
    if (!ids.insert(p.id).second) throw ConfigError("duplicate pipeline id \"" + p.id + "\"");
  }
  ids.clear();
  for (const auto& p : pairs) {
    if (!ids.insert(p.id).second) throw ConfigError("duplicate pair id \"" + p.id + "\"");
    for (const auto* path : {&p.source, &p.target, &p.reference}) {
      if (!fs::exists(*path)) {
        throw ConfigError("pair " + p.id + ": file not found: " + path->string());
      }
    }
  }
  std::set<RepairMode> seen;
  for (auto m : repairs) {
    if (!seen.insert(m).second) {
      throw ConfigError("repair mode \"" + std::string(to_string(m)) + "\" listed twice");
    }
    if ((m == RepairMode::Llm || m == RepairMode::Combined) && !provider) {
      throw ConfigError("repair mode \"" + std::string(to_string(m)) + "\" needs a [provider]");
    }
  }
  if (provider) provider->validate();
  if (jobs == 0) throw ConfigError("jobs must be at least 1");
}

}  // namespace ontoprep
