#include <atomic>
#include <exception>
#include <map>
#include <thread>

#include "ontoprep/llm.hpp"
#include "ontoprep/text/pipeline.hpp"

namespace ontoprep::llm {
namespace {

std::unordered_map<std::string_view, const EntityRef*> by_iri(const OntologyDoc& doc) {
  std::unordered_map<std::string_view, const EntityRef*> out;
  out.reserve(doc.entities.size());
  for (const auto& e : doc.entities) out.emplace(e.iri, &e);
  return out;
}

std::string text_of(const std::unordered_map<std::string_view, const EntityRef*>& index,
                    const std::string& iri, LabelPolicy policy, const char* side) {
  auto it = index.find(iri);
  if (it == index.end()) {
    throw Error(std::string("alignment cell names ") + iri + ", which is not in the " + side +
                " ontology");
  }
  auto text = display_text(*it->second, policy);
  return text.empty() ? local_name_of(iri) : text;
}

}  // namespace

RepairReport repair_alignment(const Alignment& alignment, const OntologyDoc& source,
                              const OntologyDoc& target, Provider& provider,
                              const ProviderConfig& config, VerdictCache& cache,
                              const RepairOptions& options) {
  auto source_index = by_iri(source);
  auto target_index = by_iri(target);

  RepairReport report;
  report.alignment.source_ontology = alignment.source_ontology;
  report.alignment.target_ontology = alignment.target_ontology;
  report.alignment.provenance = alignment.provenance;
  if (!report.alignment.provenance.empty()) report.alignment.provenance += "; ";
  report.alignment.provenance += "llm-repair=" + provider.model() + "/" +
                                 std::string(to_string(options.template_id));

  // Step 1: cells whose surface keys agree need no question.
  std::vector<const Correspondence*> cells;
  std::vector<bool> confirmed;
  std::map<std::pair<std::string, std::string>, std::optional<LlmVerdict>> questions;
  for (const auto& cell : alignment.cells()) {
    AuditRecord record;
    record.entity1 = cell.entity1;
    record.entity2 = cell.entity2;
    record.text1 = text_of(source_index, cell.entity1, options.label_policy, "source");
    record.text2 = text_of(target_index, cell.entity2, options.label_policy, "target");
    bool same = text::surface_tokens(record.text1) == text::surface_tokens(record.text2);
    if (!same) questions.emplace(std::make_pair(record.text1, record.text2), std::nullopt);
    cells.push_back(&cell);
    confirmed.push_back(same);
    report.audit.push_back(std::move(record));
  }

  // Step 2: distinct text pairs, at most max_in_flight requests at a time.
  std::vector<decltype(questions)::iterator> pending;
  for (auto it = questions.begin(); it != questions.end(); ++it) pending.push_back(it);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < pending.size() && !stop; i = next++) {
      try {
        const auto& texts = pending[i]->first;
        pending[i]->second =
            classify_pair(provider, config, options.template_id, texts.first, texts.second, cache);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        stop = true;
      }
    }
  };
  {
    auto n = std::min(config.max_in_flight, pending.size());
    std::vector<std::jthread> pool;
    pool.reserve(n);
    for (std::size_t i = 0; i < n; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  for (const auto& [texts, verdict] : questions) {
    if (!verdict->cached) ++report.requests;
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    auto& record = report.audit[i];
    if (confirmed[i]) {
      ++report.confirmed_by_keys;
      report.alignment.insert(*cells[i]);
      continue;
    }
    const auto& verdict = *questions.at({record.text1, record.text2});
    record.cached = verdict.cached;
    record.raw_text = verdict.raw_text;
    switch (verdict.answer) {
      case Answer::Yes:
        record.decision = CellDecision::KeptYes;
        report.alignment.insert(*cells[i]);
        break;
      case Answer::No:
        record.decision = CellDecision::RemovedNo;
        ++report.removed;
        break;
      case Answer::Unparseable:
        record.decision = CellDecision::KeptUnparseable;
        ++report.unparseable;
        report.alignment.insert(*cells[i]);
        break;
    }
  }
  return report;
}

}  // namespace ontoprep::llm
