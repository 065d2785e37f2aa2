#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "ontoprep/model.hpp"
#include "ontoprep/ontology_io.hpp"
#include "ontoprep/text/pipeline.hpp"

namespace ontoprep {

struct MatchOptions {
  LabelPolicy label_policy = LabelPolicy::NameThenLabel;
  /// Words that skip stop-word removal and stemming; may be null.
  const text::ReservedWordSet* reserved = nullptr;
};

struct BucketKey {
  text::CanonicalKey key;
  Category category = Category::Class;

  friend bool operator==(const BucketKey&, const BucketKey&) = default;
};

struct BucketKeyHash {
  std::size_t operator()(const BucketKey& b) const noexcept {
    return std::hash<text::CanonicalKey>{}(b.key) * 2 + static_cast<std::size_t>(b.category);
  }
};

/// Entities grouped by (canonical key, category). Buckets list entities in
/// document order.
struct CanonicalIndex {
  std::unordered_map<BucketKey, std::vector<EntityRef>, BucketKeyHash> buckets;
  /// Entities left out because their display text (or key) was empty.
  std::size_t skipped = 0;

  std::size_t entity_count() const;
};

CanonicalIndex canonical_index(const OntologyDoc& ontology, const text::PipelineConfig& config,
                               const MatchOptions& options = {});

/// Every pair of same-category entities with equal keys, confidence 1.0.
/// Provenance records the pipeline, label policy and reserved-set size.
Alignment match_ontologies(const OntologyDoc& source, const OntologyDoc& target,
                           const text::PipelineConfig& config, const MatchOptions& options = {});

/// Joins two prebuilt indexes.
Alignment join_indexes(const CanonicalIndex& source, const CanonicalIndex& target);

std::string match_provenance(const text::PipelineConfig& config, const MatchOptions& options);

}  // namespace ontoprep
