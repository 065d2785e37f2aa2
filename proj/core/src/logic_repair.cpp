#include "ontoprep/logic_repair.hpp"

#include <algorithm>
#include <map>

#include "ontoprep/error.hpp"
#include "ontoprep/matcher.hpp"

namespace ontoprep {
namespace {

using text::TokenSeq;

void require_phase_one(const text::PipelineConfig& config) {
  if (!config.has(text::StepKind::Tokenise) || !config.has(text::StepKind::Normalise)) {
    throw ConfigError("reserved-word search needs a pipeline with T and N, got " + config.id());
  }
}

/// Visits each pair of entities in a bucket whose surface tokens differ.
template <typename Visit>
void for_each_collision(const OntologyDoc& ontology, const text::PipelineConfig& config,
                        const text::ReservedWordSet* reserved, LabelPolicy policy, Visit visit) {
  auto index = canonical_index(ontology, config, {policy, reserved});
  std::vector<const BucketKey*> keys;
  keys.reserve(index.buckets.size());
  for (const auto& [key, entities] : index.buckets) {
    if (entities.size() > 1) keys.push_back(&key);
  }
  // Bucket order is unspecified; sort so visits are reproducible.
  std::sort(keys.begin(), keys.end(), [](const BucketKey* a, const BucketKey* b) {
    if (a->category != b->category) return a->category < b->category;
    return a->key < b->key;
  });
  for (const auto* key : keys) {
    const auto& entities = index.buckets.at(*key);
    std::vector<TokenSeq> surface;
    surface.reserve(entities.size());
    for (const auto& e : entities) surface.push_back(text::surface_tokens(display_text(e, policy)));
    for (std::size_t i = 0; i < entities.size(); ++i) {
      for (std::size_t j = i + 1; j < entities.size(); ++j) {
        if (surface[i] == surface[j]) continue;
        visit(entities[i], surface[i], entities[j], surface[j], key->key);
      }
    }
  }
}

void add_symmetric_difference(const TokenSeq& a, const TokenSeq& b, text::ReservedWordSet& out) {
  std::map<std::string_view, long> balance;
  for (const auto& t : a) ++balance[t];
  for (const auto& t : b) --balance[t];
  bool any = false;
  for (const auto& [word, n] : balance) {
    if (n != 0) {
      out.insert(word);
      any = true;
    }
  }
  if (any) return;
  // Same multiset in a different order: keep every token.
  for (const auto& t : a) out.insert(t);
}

}  // namespace

text::ReservedWordSet find_reserved_word_set(const OntologyDoc& ontology,
                                             const text::PipelineConfig& config,
                                             LabelPolicy policy) {
  require_phase_one(config);
  text::ReservedWordSet candidates;
  for_each_collision(ontology, config, nullptr, policy,
                     [&](const EntityRef&, const TokenSeq& a, const EntityRef&, const TokenSeq& b,
                         const text::CanonicalKey&) { add_symmetric_difference(a, b, candidates); });

  text::ReservedWordSet reserved;
  for (const auto& w : candidates.words()) {
    if (text::reduce_word(w, config) != w) reserved.insert(w);
  }
  return reserved;
}

text::ReservedWordSet build_joint_reserved_set(const OntologyDoc& source, const OntologyDoc& target,
                                               const text::PipelineConfig& config,
                                               LabelPolicy policy) {
  auto joint = find_reserved_word_set(source, config, policy);
  joint.merge(find_reserved_word_set(target, config, policy));
  return joint;
}

std::vector<KeyCollision> find_key_collisions(const OntologyDoc& ontology,
                                              const text::PipelineConfig& config,
                                              const text::ReservedWordSet* reserved,
                                              LabelPolicy policy) {
  std::vector<KeyCollision> out;
  for_each_collision(ontology, config, reserved, policy,
                     [&](const EntityRef& a, const TokenSeq&, const EntityRef& b, const TokenSeq&,
                         const text::CanonicalKey& key) {
                       auto [lo, hi] = std::minmax(a.iri, b.iri);
                       out.push_back({lo, hi, key.text});
                     });
  std::sort(out.begin(), out.end(), [](const KeyCollision& x, const KeyCollision& y) {
    return std::tie(x.entity1, x.entity2) < std::tie(y.entity1, y.entity2);
  });
  return out;
}

}  // namespace ontoprep
