#include "ontoprep/matcher.hpp"

namespace ontoprep {

std::size_t CanonicalIndex::entity_count() const {
  std::size_t n = 0;
  for (const auto& [key, entities] : buckets) n += entities.size();
  return n;
}

CanonicalIndex canonical_index(const OntologyDoc& ontology, const text::PipelineConfig& config,
                               const MatchOptions& options) {
  CanonicalIndex index;
  for (const auto& entity : ontology.entities) {
    auto display = display_text(entity, options.label_policy);
    if (display.empty()) {
      ++index.skipped;
      continue;
    }
    auto key = text::apply_pipeline(display, config, options.reserved);
    if (key.empty()) {
      ++index.skipped;
      continue;
    }
    index.buckets[{std::move(key), category_of(entity.kind)}].push_back(entity);
  }
  return index;
}

Alignment join_indexes(const CanonicalIndex& source, const CanonicalIndex& target) {
  Alignment out;
  // Probe from the smaller side; the cell set sorts the result either way.
  bool swap = source.buckets.size() > target.buckets.size();
  const auto& probe = swap ? target : source;
  const auto& build = swap ? source : target;
  for (const auto& [key, probe_entities] : probe.buckets) {
    auto hit = build.buckets.find(key);
    if (hit == build.buckets.end()) continue;
    const auto& sources = swap ? hit->second : probe_entities;
    const auto& targets = swap ? probe_entities : hit->second;
    for (const auto& s : sources) {
      for (const auto& t : targets) out.insert({s.iri, t.iri, Relation::Equivalence, 1.0});
    }
  }
  return out;
}

std::string match_provenance(const text::PipelineConfig& config, const MatchOptions& options) {
  std::string p = "pipeline=" + config.id();
  p += "; label-policy=" + std::string(to_string(options.label_policy));
  p += "; categories=class,property(object+datatype)";
  if (!config.stop_list_keep.empty()) {
    p += "; stop-keep=";
    bool first = true;
    for (const auto& w : config.stop_list_keep) {
      if (!first) p += ',';
      p += w;
      first = false;
    }
  }
  if (options.reserved) p += "; reserved-words=" + std::to_string(options.reserved->size());
  return p;
}

Alignment match_ontologies(const OntologyDoc& source, const OntologyDoc& target,
                           const text::PipelineConfig& config, const MatchOptions& options) {
  auto out = join_indexes(canonical_index(source, config, options),
                          canonical_index(target, config, options));
  out.source_ontology = source.source_path;
  out.target_ontology = target.source_path;
  out.provenance = match_provenance(config, options);
  return out;
}

}  // namespace ontoprep
