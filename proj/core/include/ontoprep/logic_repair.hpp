#pragma once

#include <string>
#include <vector>

#include "ontoprep/model.hpp"
#include "ontoprep/ontology_io.hpp"
#include "ontoprep/text/pipeline.hpp"

namespace ontoprep {

/// Words that, once exempted from stop-word removal and stemming, separate
/// entities of one ontology whose keys collide although their surface tokens
/// differ.
///
/// Phase 1: for each same-category pair with equal keys and unequal surface
/// (tokenise + normalise) tokens, collect the multiset symmetric difference
/// of the two token lists, or both token lists when that difference is empty.
/// Phase 2: drop every word the configuration leaves unchanged.
///
/// Throws ConfigError when the configuration lacks Tokenise or Normalise.
text::ReservedWordSet find_reserved_word_set(const OntologyDoc& ontology,
                                             const text::PipelineConfig& config,
                                             LabelPolicy policy = LabelPolicy::NameThenLabel);

/// Union of the per-ontology sets; pairs never span the two ontologies.
text::ReservedWordSet build_joint_reserved_set(const OntologyDoc& source, const OntologyDoc& target,
                                               const text::PipelineConfig& config,
                                               LabelPolicy policy = LabelPolicy::NameThenLabel);

/// Two entities of one ontology sharing a key while their surface tokens
/// differ.
struct KeyCollision {
  std::string entity1;
  std::string entity2;
  std::string key;

  friend bool operator==(const KeyCollision&, const KeyCollision&) = default;
};

/// Collisions under `config` with optional reserved words, ordered by IRI pair.
std::vector<KeyCollision> find_key_collisions(const OntologyDoc& ontology,
                                              const text::PipelineConfig& config,
                                              const text::ReservedWordSet* reserved = nullptr,
                                              LabelPolicy policy = LabelPolicy::NameThenLabel);

}  // namespace ontoprep
