#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

#include "ontoprep/error.hpp"
#include "ontoprep/experiment.hpp"
#include "ontoprep/logic_repair.hpp"
#include "ontoprep/matcher.hpp"
#include "ontoprep/text/lemmatizer.hpp"
#include "ontoprep/text/stopwords.hpp"

namespace {

namespace fs = std::filesystem;
using namespace ontoprep;

struct Shared {
  std::string format;
  std::string pipeline = "T,N";
  std::string label_policy = "name-first";
  std::string stop_keep;
  std::string wordnet;
  std::string reserved;
  std::string templ = "PT1";
  std::string provider;
  std::string cache;
  std::size_t jobs = 0;
  std::string out;
  std::vector<std::string> annotation_props;
};

void add_shared(CLI::App& cmd, Shared& s) {
  cmd.add_option("--format", s.format, "Ontology syntax: rdfxml or turtle (default: detect)");
  cmd.add_option("--label-policy", s.label_policy, "name-first or label-first")
      ->capture_default_str();
  cmd.add_option("--annotation", s.annotation_props, "Extra label predicate IRI (repeatable)");
}

void add_pipeline(CLI::App& cmd, Shared& s) {
  cmd.add_option("--pipeline", s.pipeline, "Step list, e.g. \"T,N,R,S:porter\"")
      ->capture_default_str();
  cmd.add_option("--stop-keep", s.stop_keep, "File of stop words never to remove");
  cmd.add_option("--wordnet", s.wordnet, "WordNet dict directory for L and L:pos");
}

text::PipelineConfig pipeline_of(const Shared& s) {
  std::shared_ptr<const text::MorphyLexicon> lexicon;
  if (!s.wordnet.empty()) lexicon = text::MorphyLexicon::load(s.wordnet);
  auto config = text::PipelineConfig::parse(s.pipeline == "none" ? "" : s.pipeline, lexicon);
  if (!s.stop_keep.empty()) {
    const auto keep = text::StopList::from_file(s.stop_keep);
    config.stop_list_keep.insert(keep.words().begin(), keep.words().end());
  }
  return config;
}

OntologyDoc ontology_of(const Shared& s, const std::string& path) {
  ParseOptions options;
  options.annotation_props = s.annotation_props;
  std::optional<RdfFormat> format;
  if (!s.format.empty()) format = parse_format(s.format);
  return load_ontology(path, format, options);
}

/// Writes to --out, or stdout when it is empty or "-".
void emit(const std::string& out, std::string_view bytes) {
  if (out.empty() || out == "-") {
    std::cout << bytes;
    std::cout.flush();
    return;
  }
  fs::path path(out);
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  write_file_atomic(path, bytes);
}

std::unique_ptr<llm::VerdictCache> cache_of(const std::string& path) {
  if (path.empty()) return std::make_unique<llm::VerdictCache>();
  return std::make_unique<llm::VerdictCache>(fs::path(path));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Preprocessing pipelines, string matching and repair for ontology alignment"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "ontoprep 0.1.0");
  Shared s;

  std::string source, target, alignment_file, reference_file, manifest, audit_file, rematch;
  bool json = false;

  auto* match = app.add_subcommand("match", "Match two ontologies by canonical-key equality");
  match->add_option("source", source)->required()->check(CLI::ExistingFile);
  match->add_option("target", target)->required()->check(CLI::ExistingFile);
  add_shared(*match, s);
  add_pipeline(*match, s);
  match->add_option("--reserved", s.reserved, "Reserved-word file exempting tokens from R/S/L");
  match->add_option("--out", s.out, "Alignment file (default: stdout)");

  auto* eval = app.add_subcommand("eval", "Score an alignment against a reference");
  eval->add_option("alignment", alignment_file)->required()->check(CLI::ExistingFile);
  eval->add_option("reference", reference_file)->required()->check(CLI::ExistingFile);
  eval->add_flag("--json", json, "Print a JSON record instead of CSV");
  eval->add_option("--out", s.out, "Report file (default: stdout)");

  auto* logic = app.add_subcommand("repair-logic", "Find the joint reserved-word set");
  logic->add_option("source", source)->required()->check(CLI::ExistingFile);
  logic->add_option("target", target)->required()->check(CLI::ExistingFile);
  add_shared(*logic, s);
  add_pipeline(*logic, s);
  logic->add_option("--out", s.out, "Reserved-word file (default: stdout)");
  logic->add_option("--rematch", rematch, "Also write the repaired alignment here");

  auto* llm_cmd = app.add_subcommand("repair-llm", "Check alignment cells with a language model");
  llm_cmd->add_option("alignment", alignment_file)->required()->check(CLI::ExistingFile);
  llm_cmd->add_option("source", source)->required()->check(CLI::ExistingFile);
  llm_cmd->add_option("target", target)->required()->check(CLI::ExistingFile);
  add_shared(*llm_cmd, s);
  llm_cmd->add_option("--template", s.templ, "PT1..PT4")->capture_default_str();
  llm_cmd->add_option("--provider", s.provider, "Provider config (TOML); \"stub\" for the offline stub")
      ->required();
  llm_cmd->add_option("--cache", s.cache, "Verdict cache file (JSONL)");
  llm_cmd->add_option("--out", s.out, "Repaired alignment (default: stdout)");
  llm_cmd->add_option("--audit", audit_file, "Per-cell decisions (JSONL)");

  auto* sweep = app.add_subcommand("sweep", "Run an experiment manifest");
  sweep->add_option("manifest", manifest)->required()->check(CLI::ExistingFile);
  sweep->add_option("--jobs", s.jobs, "Parallel jobs (overrides the manifest)");
  sweep->add_option("--out", s.out, "Output directory (overrides the manifest)");
  sweep->add_option("--provider", s.provider, "Provider config (overrides the manifest)");
  sweep->add_option("--cache", s.cache, "Verdict cache file (overrides the manifest)");
  sweep->add_option("--template", s.templ, "PT1..PT4 (overrides the manifest)");

  auto* density = app.add_subcommand("reserved-density", "Reserved words per entity, in percent");
  density->add_option("reserved", s.reserved)->required()->check(CLI::ExistingFile);
  density->add_option("source", source)->required()->check(CLI::ExistingFile);
  density->add_option("target", target)->required()->check(CLI::ExistingFile);
  add_shared(*density, s);

  CLI11_PARSE(app, argc, argv);

  try {
    auto policy = parse_label_policy(s.label_policy);

    if (*match) {
      text::ReservedWordSet reserved;
      if (!s.reserved.empty()) reserved = text::ReservedWordSet::load(s.reserved);
      MatchOptions options{policy, s.reserved.empty() ? nullptr : &reserved};
      auto result =
          match_ontologies(ontology_of(s, source), ontology_of(s, target), pipeline_of(s), options);
      emit(s.out, write_alignment(result));
      std::cerr << result.size() << " correspondences\n";
    } else if (*eval) {
      ReportRow row;
      row.alignment_id = fs::path(alignment_file).stem().string();
      row.config_id = "-";
      auto produced = load_alignment(alignment_file);
      row.report = evaluate(produced, load_alignment(reference_file));
      row.provenance = produced.provenance;
      emit(s.out, json ? json_record(row) + '\n' : csv_header() + csv_row(row));
    } else if (*logic) {
      auto src = ontology_of(s, source);
      auto tgt = ontology_of(s, target);
      auto config = pipeline_of(s);
      auto reserved = build_joint_reserved_set(src, tgt, config, policy);
      emit(s.out, reserved.serialize());
      std::cerr << reserved.size() << " reserved words\n";
      if (!rematch.empty()) {
        auto result = match_ontologies(src, tgt, config, MatchOptions{policy, &reserved});
        emit(rematch, write_alignment(result));
      }
    } else if (*llm_cmd) {
      auto config =
          s.provider == "stub" ? llm::ProviderConfig::stub() : llm::ProviderConfig::load(s.provider);
      auto provider = llm::make_provider(config);
      auto cache = cache_of(s.cache);
      auto report = llm::repair_alignment(load_alignment(alignment_file), ontology_of(s, source),
                                          ontology_of(s, target), *provider, config, *cache,
                                          {llm::parse_template(s.templ), policy});
      emit(s.out, write_alignment(report.alignment));
      if (!audit_file.empty()) emit(audit_file, llm::audit_jsonl(report.audit));
      std::cerr << report.confirmed_by_keys << " confirmed by keys, " << report.removed
                << " removed, " << report.unparseable << " unparseable, " << report.requests
                << " requests\n";
    } else if (*sweep) {
      auto config = ExperimentConfig::load(manifest);
      if (s.jobs > 0) config.jobs = s.jobs;
      if (!s.out.empty()) {
        config.output_dir = s.out;
        if (s.cache.empty() && config.cache.parent_path() != config.output_dir) {
          config.cache = config.output_dir / "llm-cache.jsonl";
        }
      }
      if (!s.provider.empty()) {
        config.provider =
            s.provider == "stub" ? llm::ProviderConfig::stub() : llm::ProviderConfig::load(s.provider);
      }
      if (!s.cache.empty()) config.cache = s.cache;
      if (sweep->count("--template")) config.template_id = llm::parse_template(s.templ);
      auto summary = run_experiment(config);
      std::cerr << summary.rows.size() << " rows (" << summary.resumed << " resumed), "
                << summary.errors.size() << " errors, " << summary.llm_requests
                << " LLM requests; reports in " << config.output_dir.string() << '\n';
      for (const auto& label : summary.skipped) {
        std::cerr << "skipped " << label << ": logic repair needs T and N\n";
      }
      for (const auto& e : summary.errors) std::cerr << "error: " << e << '\n';
      return summary.exit_code();
    } else if (*density) {
      auto reserved = text::ReservedWordSet::load(s.reserved);
      std::cout << format_real(reserved_density(reserved, ontology_of(s, source),
                                                ontology_of(s, target)))
                << '\n';
    }
  } catch (const std::exception& e) {
    std::cerr << "ontoprep: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
