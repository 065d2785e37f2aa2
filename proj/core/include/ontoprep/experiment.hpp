#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ontoprep/llm.hpp"
#include "ontoprep/metrics.hpp"
#include "ontoprep/ontology_io.hpp"
#include "ontoprep/text/pipeline.hpp"

namespace ontoprep {

enum class RepairMode { None, Logic, Llm, Combined };

/// "none" / "logic" / "llm" / "combined". Throws ConfigError.
RepairMode parse_repair_mode(std::string_view name);
std::string_view to_string(RepairMode mode);

struct PairSpec {
  std::string id;
  std::filesystem::path source;
  std::filesystem::path target;
  std::filesystem::path reference;
};

struct PipelineSpec {
  std::string id;
  text::PipelineConfig config;
};

/// A sweep over ontology pairs x pipelines x repair modes.
///
/// Manifest (TOML), paths relative to the manifest's directory:
///
///   track = "conference"
///   track_root = "conference"          # pair paths are relative to this
///   output_dir = "out"
///   label_policy = "name-first"
///   repair = ["none", "logic"]         # or a single string
///   stop_keep = ["and", "or"]          # or stop_keep_file = "keep.txt"
///   wordnet = "wordnet"                # optional lexicon directory
///   format = "rdfxml"                  # optional; sniffed otherwise
///   annotation_props = ["http://..."]
///   template = "PT1"
///   cache = "llm-cache.jsonl"          # default <output_dir>/llm-cache.jsonl
///   jobs = 4
///   [provider]                         # required for llm / combined
///   kind = "stub"
///   [[pipelines]]
///   id = "TN"
///   steps = "T,N"
///   [[pairs]]
///   id = "cmt-conference"
///   source = "cmt.owl"
///   target = "conference.owl"
///   reference = "reference/cmt-conference.rdf"
struct ExperimentConfig {
  std::string track = "track";
  std::filesystem::path track_root;
  std::filesystem::path output_dir;
  std::vector<PairSpec> pairs;
  std::vector<PipelineSpec> pipelines;
  std::vector<RepairMode> repairs{RepairMode::None};
  LabelPolicy label_policy = LabelPolicy::NameThenLabel;
  std::optional<RdfFormat> format;
  std::vector<std::string> annotation_props;
  std::optional<llm::ProviderConfig> provider;
  llm::PromptTemplate template_id = llm::PromptTemplate::PT1;
  std::filesystem::path cache;
  std::size_t jobs = 1;

  /// Throws ConfigError when a path is missing, an id repeats, a list is
  /// empty, or an LLM repair mode has no provider.
  void validate() const;

  static ExperimentConfig load(const std::filesystem::path& manifest);
  static ExperimentConfig parse(std::string_view toml_text, const std::filesystem::path& base_dir);
};

struct ReservedDensityRow {
  std::string alignment_id;
  std::string config_id;
  std::size_t reserved_words = 0;
  std::size_t entities = 0;
  double density = 0.0;
};

struct RunSummary {
  /// In manifest order: pairs, then pipelines, then repair modes.
  std::vector<ReportRow> rows;
  std::vector<ReservedDensityRow> densities;
  std::vector<std::string> errors;
  /// Config labels never run: logic and combined repair need T and N.
  std::vector<std::string> skipped;
  std::size_t resumed = 0;
  std::size_t llm_requests = 0;

  int exit_code() const { return errors.empty() ? 0 : 2; }
};

/// Row label: the pipeline id, suffixed "+logic", "+llm" or "+combined".
std::string config_label(std::string_view pipeline_id, RepairMode mode);

/// Runs every job, writing under output_dir:
///   results.csv, results.jsonl, reserved_density.csv, errors.log,
///   alignments/<pair>/<config>.rdf, reserved/<pair>/<config>.txt,
///   audit/<pair>/<config>.jsonl and records/ (resume state).
/// A job whose record carries the checksum of its current inputs is not rerun.
/// Failures are collected per job; the run continues. Logic and combined
/// repair are skipped for pipelines without T and N.
RunSummary run_experiment(const ExperimentConfig& config);

/// Hex SHA-256.
std::string sha256_hex(std::string_view bytes);

}  // namespace ontoprep
