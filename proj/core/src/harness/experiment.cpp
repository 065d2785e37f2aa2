#include "ontoprep/experiment.hpp"

#include <openssl/evp.h>

#include <json.hpp>

#include <atomic>
#include <cctype>
#include <memory>
#include <mutex>
#include <thread>

#include "ontoprep/error.hpp"
#include "ontoprep/logic_repair.hpp"
#include "ontoprep/matcher.hpp"

namespace ontoprep {
namespace {

namespace fs = std::filesystem;

constexpr std::string_view kRecordVersion = "ontoprep-record-1";

struct LoadedPair {
  OntologyDoc source;
  OntologyDoc target;
  Alignment reference;
  std::string input_digest;
  std::string error;
};

struct Job {
  std::size_t pair = 0;
  std::size_t pipeline = 0;
  RepairMode mode = RepairMode::None;
};

struct JobResult {
  std::optional<ReportRow> row;
  std::optional<ReservedDensityRow> density;
  std::size_t llm_requests = 0;
  bool resumed = false;
  std::string error;
};

bool uses_llm(RepairMode m) { return m == RepairMode::Llm || m == RepairMode::Combined; }
bool uses_logic(RepairMode m) { return m == RepairMode::Logic || m == RepairMode::Combined; }

std::string slug(std::string_view s) {
  std::string out;
  for (char c : s) {
    bool keep = std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '+' ||
                c == '.';
    out += keep ? c : '_';
  }
  return out.empty() ? "_" : out;
}

OntologyDoc load_doc(const fs::path& path, const std::string& bytes, const ExperimentConfig& config) {
  ParseOptions options;
  options.annotation_props = config.annotation_props;
  options.base_iri = "file://" + fs::absolute(path).lexically_normal().generic_string();
  auto format = config.format ? *config.format : detect_format(path, bytes);
  auto doc = parse_ontology(bytes, format, options);
  doc.source_path = path.string();
  return doc;
}

LoadedPair load_pair(const PairSpec& spec, const ExperimentConfig& config) {
  LoadedPair pair;
  try {
    auto source = read_file(spec.source);
    auto target = read_file(spec.target);
    auto reference = read_file(spec.reference);
    pair.source = load_doc(spec.source, source, config);
    pair.target = load_doc(spec.target, target, config);
    pair.reference = read_alignment(reference);
    pair.input_digest = sha256_hex(source) + sha256_hex(target) + sha256_hex(reference);
  } catch (const std::exception& e) {
    pair.error = e.what();
  }
  return pair;
}

std::string job_checksum(const ExperimentConfig& config, const LoadedPair& pair,
                         const PipelineSpec& pipeline, RepairMode mode) {
  std::string s(kRecordVersion);
  s += '\n' + pair.input_digest;
  s += "\npipeline=" + pipeline.config.id();
  s += "\nkeep=";
  for (const auto& w : pipeline.config.stop_list_keep) s += w + ' ';
  if (pipeline.config.lexicon) s += "\nwordnet=" + pipeline.config.lexicon->source_dir().string();
  s += "\nrepair=" + std::string(to_string(mode));
  s += "\nlabel-policy=" + std::string(to_string(config.label_policy));
  s += "\nformat=" + std::string(config.format ? to_string(*config.format) : "auto");
  for (const auto& a : config.annotation_props) s += "\nannotation=" + a;
  if (uses_llm(mode) && config.provider) {
    s += "\nprovider=" + config.provider->kind + "/" + config.provider->model_name + "/" +
         std::string(llm::to_string(config.template_id));
  }
  return sha256_hex(s);
}

class Runner {
 public:
  explicit Runner(const ExperimentConfig& config) : config_(config) {}

  RunSummary run() {
    for (const auto& spec : config_.pairs) pairs_.push_back(load_pair(spec, config_));
    for (std::size_t p = 0; p < config_.pairs.size(); ++p) {
      for (std::size_t q = 0; q < config_.pipelines.size(); ++q) {
        for (auto mode : config_.repairs) {
          const auto& steps = config_.pipelines[q].config;
          bool logic_ready =
              steps.has(text::StepKind::Tokenise) && steps.has(text::StepKind::Normalise);
          if (uses_logic(mode) && !logic_ready) {
            if (p == 0) skipped_.push_back(config_label(config_.pipelines[q].id, mode));
            continue;
          }
          jobs_.push_back({p, q, mode});
        }
      }
    }
    results_.resize(jobs_.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < jobs_.size(); i = next++) results_[i] = run_job(jobs_[i]);
    };
    {
      std::vector<std::jthread> pool;
      auto n = std::min(config_.jobs, jobs_.size());
      for (std::size_t i = 0; i < n; ++i) pool.emplace_back(worker);
    }

    RunSummary summary;
    summary.skipped = skipped_;
    std::string csv = csv_header();
    std::string jsonl;
    std::string density_csv = "track,alignment_id,config_id,reserved_words,entities,density\n";
    std::string errors;
    for (std::size_t i = 0; i < jobs_.size(); ++i) {
      auto& r = results_[i];
      if (!r.error.empty()) {
        auto line = label(jobs_[i]) + ": " + r.error;
        summary.errors.push_back(line);
        errors += line + '\n';
        continue;
      }
      csv += csv_row(*r.row);
      jsonl += json_record(*r.row) + '\n';
      if (r.density) {
        const auto& d = *r.density;
        density_csv += csv_field(config_.track) + ',' + csv_field(d.alignment_id) + ',' +
                       csv_field(d.config_id) + ',' +
                       std::to_string(d.reserved_words) + ',' + std::to_string(d.entities) + ',' +
                       format_real(d.density) + '\n';
        summary.densities.push_back(d);
      }
      summary.resumed += r.resumed ? 1 : 0;
      summary.llm_requests += r.llm_requests;
      summary.rows.push_back(std::move(*r.row));
    }
    fs::create_directories(config_.output_dir);
    write_file_atomic(config_.output_dir / "results.csv", csv);
    write_file_atomic(config_.output_dir / "results.jsonl", jsonl);
    write_file_atomic(config_.output_dir / "reserved_density.csv", density_csv);
    write_file_atomic(config_.output_dir / "errors.log", errors);
    return summary;
  }

 private:
  std::string label(const Job& job) const {
    return config_.pairs[job.pair].id + "/" +
           config_label(config_.pipelines[job.pipeline].id, job.mode);
  }

  llm::Provider& provider() {
    std::call_once(provider_once_, [&] {
      provider_ = llm::make_provider(*config_.provider);
      cache_ = std::make_unique<llm::VerdictCache>(config_.cache);
    });
    return *provider_;
  }

  JobResult run_job(const Job& job) {
    JobResult result;
    try {
      const auto& pair = pairs_[job.pair];
      if (!pair.error.empty()) throw Error(pair.error);
      if (uses_llm(job.mode) && quota_exhausted_) {
        throw QuotaExceeded("skipped: provider quota exhausted earlier in this run");
      }
      execute(job, pair, result);
    } catch (const QuotaExceeded& e) {
      quota_exhausted_ = true;
      result.error = std::string("quota exceeded: ") + e.what();
    } catch (const std::exception& e) {
      result.error = e.what();
    }
    return result;
  }

  void execute(const Job& job, const LoadedPair& pair, JobResult& result) {
    const auto& spec = config_.pairs[job.pair];
    const auto& pipeline = config_.pipelines[job.pipeline];
    auto config_id = config_label(pipeline.id, job.mode);
    auto file = slug(config_id);
    auto pair_dir = slug(spec.id);
    auto record_path = config_.output_dir / "records" / pair_dir / (file + ".json");
    auto alignment_path = config_.output_dir / "alignments" / pair_dir / (file + ".rdf");
    auto checksum = job_checksum(config_, pair, pipeline, job.mode);

    if (fs::exists(record_path) && fs::exists(alignment_path)) {
      auto record = nlohmann::json::parse(read_file(record_path), nullptr, false);
      if (!record.is_discarded() && record.value("checksum", "") == checksum) {
        result.row = parse_json_record(record.at("row").dump());
        if (record.contains("density")) {
          const auto& d = record["density"];
          result.density = ReservedDensityRow{spec.id, config_id,
                                              d.at("reserved_words").get<std::size_t>(),
                                              d.at("entities").get<std::size_t>(),
                                              d.at("density").get<double>()};
        }
        result.resumed = true;
        return;
      }
    }

    text::ReservedWordSet reserved;
    MatchOptions options{config_.label_policy, nullptr};
    if (uses_logic(job.mode)) {
      reserved = build_joint_reserved_set(pair.source, pair.target, pipeline.config,
                                          config_.label_policy);
      options.reserved = &reserved;
      auto entities = pair.source.entities.size() + pair.target.entities.size();
      result.density = ReservedDensityRow{spec.id, config_id, reserved.size(), entities,
                                          entities ? reserved_density(reserved, pair.source,
                                                                      pair.target)
                                                   : 0.0};
      auto reserved_path = config_.output_dir / "reserved" / pair_dir / (file + ".txt");
      fs::create_directories(reserved_path.parent_path());
      write_file_atomic(reserved_path, reserved.serialize());
    }
    auto alignment = match_ontologies(pair.source, pair.target, pipeline.config, options);

    if (uses_llm(job.mode)) {
      auto& llm_provider = provider();
      llm::RepairOptions repair_options{config_.template_id, config_.label_policy};
      auto report = llm::repair_alignment(alignment, pair.source, pair.target, llm_provider,
                                          *config_.provider, *cache_, repair_options);
      alignment = std::move(report.alignment);
      result.llm_requests = report.requests;
      auto audit_path = config_.output_dir / "audit" / pair_dir / (file + ".jsonl");
      fs::create_directories(audit_path.parent_path());
      write_file_atomic(audit_path, llm::audit_jsonl(report.audit));
    }

    ReportRow row{config_.track, spec.id, config_id, evaluate(alignment, pair.reference),
                  alignment.provenance};
    fs::create_directories(alignment_path.parent_path());
    write_file_atomic(alignment_path, write_alignment(alignment));

    nlohmann::ordered_json record;
    record["checksum"] = checksum;
    record["row"] = nlohmann::json::parse(json_record(row));
    if (result.density) {
      record["density"] = {{"reserved_words", result.density->reserved_words},
                           {"entities", result.density->entities},
                           {"density", result.density->density}};
    }
    fs::create_directories(record_path.parent_path());
    write_file_atomic(record_path, record.dump(2) + '\n');
    result.row = std::move(row);
  }

  const ExperimentConfig& config_;
  std::vector<LoadedPair> pairs_;
  std::vector<Job> jobs_;
  std::vector<std::string> skipped_;
  std::vector<JobResult> results_;
  std::once_flag provider_once_;
  std::unique_ptr<llm::Provider> provider_;
  std::unique_ptr<llm::VerdictCache> cache_;
  std::atomic<bool> quota_exhausted_{false};
};

}  // namespace

std::string config_label(std::string_view pipeline_id, RepairMode mode) {
  std::string out(pipeline_id);
  if (mode != RepairMode::None) out += "+" + std::string(to_string(mode));
  return out;
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(len * 2);
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xF];
  }
  return out;
}

RunSummary run_experiment(const ExperimentConfig& config) {
  config.validate();
  return Runner(config).run();
}

}  // namespace ontoprep
