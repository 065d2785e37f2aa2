#pragma once

#include <atomic>
#include <chrono>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ontoprep/error.hpp"
#include "ontoprep/model.hpp"
#include "ontoprep/ontology_io.hpp"
#include "ontoprep/verdict.hpp"

namespace ontoprep::llm {

enum class PromptTemplate { PT1, PT2, PT3, PT4 };

/// "PT1".."PT4", case-insensitive. Throws ConfigError.
PromptTemplate parse_template(std::string_view name);
std::string_view to_string(PromptTemplate id);
/// Body with {Entity1} and {Entity2} placeholders.
std::string_view template_body(PromptTemplate id);

/// Plain placeholder substitution. Throws EmptyEntityText.
std::string render_prompt(PromptTemplate id, std::string_view entity1, std::string_view entity2);

/// The first sentence decides when it holds "yes" or "no" but not both;
/// otherwise the whole text must hold exactly one of them.
Answer parse_verdict(std::string_view raw);

struct LlmVerdict {
  Answer answer = Answer::Unparseable;
  std::string raw_text;
  std::string model;
  PromptTemplate template_id = PromptTemplate::PT1;
  bool cached = false;
};

struct ProviderConfig {
  /// "http" or "stub".
  std::string kind = "http";
  std::string endpoint;
  std::string model_name;
  double temperature = 0.0;
  std::size_t max_in_flight = 4;
  std::size_t retry_limit = 3;
  std::chrono::milliseconds timeout{30000};
  /// Doubles after each failed attempt.
  std::chrono::milliseconds retry_backoff{500};
  std::string auth_header = "Authorization";
  std::string auth_prefix = "Bearer ";
  std::string api_key_env = "LLM_API_KEY";

  /// Throws ConfigError unless temperature is 0, max_in_flight is positive and
  /// an http provider has an endpoint and a model.
  void validate() const;

  static ProviderConfig stub();
  /// TOML file with the keys above (timeouts as *_ms integers).
  static ProviderConfig load(const std::filesystem::path& path);
};

/// A retryable transport failure: connection errors, 408, 429 without a
/// quota message, 5xx.
class TransientError : public ProviderUnavailable {
 public:
  using ProviderUnavailable::ProviderUnavailable;
};

class Provider {
 public:
  virtual ~Provider() = default;
  /// One chat completion at temperature 0. Throws TransientError,
  /// QuotaExceeded or ProviderUnavailable.
  virtual std::string complete(const std::string& prompt) = 0;
  virtual std::string model() const = 0;
};

/// Chat-completion over HTTP(S): POST {model, temperature, messages} and read
/// choices[0].message.content.
class HttpProvider final : public Provider {
 public:
  HttpProvider(ProviderConfig config, std::string api_key);
  std::string complete(const std::string& prompt) override;
  std::string model() const override { return config_.model_name; }

 private:
  ProviderConfig config_;
  std::string api_key_;
  std::string origin_;
  std::string path_;
};

/// Offline provider: answers yes exactly when the two entity texts in the
/// prompt tokenise and normalise to the same words.
class StubProvider final : public Provider {
 public:
  std::string complete(const std::string& prompt) override;
  std::string model() const override { return "stub"; }
  std::size_t requests() const { return requests_.load(); }

 private:
  std::atomic<std::size_t> requests_{0};
};

/// Builds the provider named by config.kind; http reads its key from
/// config.api_key_env.
std::unique_ptr<Provider> make_provider(const ProviderConfig& config);

/// Verdicts keyed by (model, template, entity1, entity2). With a file, earlier
/// records are loaded and new ones appended one JSON object per line.
class VerdictCache {
 public:
  VerdictCache() = default;
  explicit VerdictCache(const std::filesystem::path& file);

  struct Entry {
    Answer answer = Answer::Unparseable;
    std::string raw_text;
  };

  std::optional<Entry> find(std::string_view model, PromptTemplate id, std::string_view entity1,
                            std::string_view entity2) const;
  void store(std::string_view model, PromptTemplate id, std::string_view entity1,
             std::string_view entity2, const Entry& entry);
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::unordered_map<std::string, Entry> entries_;
  std::ofstream out_;
};

/// Cached verdict when available, else one provider request (retried on
/// TransientError up to retry_limit times). Throws ProviderUnavailable once
/// retries are exhausted and QuotaExceeded immediately.
LlmVerdict classify_pair(Provider& provider, const ProviderConfig& config, PromptTemplate id,
                         std::string_view entity1, std::string_view entity2, VerdictCache& cache);

enum class CellDecision { ConfirmedByKeys, KeptYes, RemovedNo, KeptUnparseable };
std::string_view to_string(CellDecision decision);

struct AuditRecord {
  std::string entity1;
  std::string entity2;
  std::string text1;
  std::string text2;
  CellDecision decision = CellDecision::ConfirmedByKeys;
  bool cached = false;
  std::string raw_text;
};

struct RepairOptions {
  PromptTemplate template_id = PromptTemplate::PT1;
  LabelPolicy label_policy = LabelPolicy::NameThenLabel;
};

struct RepairReport {
  Alignment alignment;
  /// One record per input cell, in cell order.
  std::vector<AuditRecord> audit;
  /// Verdicts that were not served from the cache.
  std::size_t requests = 0;
  std::size_t confirmed_by_keys = 0;
  std::size_t removed = 0;
  std::size_t unparseable = 0;
};

/// Keeps cells whose sides share tokenise + normalise keys, asks the provider
/// about the rest and drops those answered "no". Throws Error when a cell
/// names an entity missing from its ontology.
RepairReport repair_alignment(const Alignment& alignment, const OntologyDoc& source,
                              const OntologyDoc& target, Provider& provider,
                              const ProviderConfig& config, VerdictCache& cache,
                              const RepairOptions& options = {});

/// One JSON object per line.
std::string audit_jsonl(const std::vector<AuditRecord>& audit);

}  // namespace ontoprep::llm
