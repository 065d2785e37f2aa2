#pragma once

#include <array>
#include <random>
#include <string>
#include <string_view>
#include <unordered_set>

#include "ontoprep/matcher.hpp"
#include "ontoprep/model.hpp"
#include "ontoprep/ontology_io.hpp"
#include "ontoprep/text/pipeline.hpp"

namespace ontoprep::testing {

// Inflected forms, stop words and near-duplicates so that keys collide often.
inline constexpr std::array<std::string_view, 48> kVocabulary{
    "member", "members", "review", "reviews", "reviewing", "reviewed", "reviewer",
    "run", "running", "runs", "steer", "steering", "committee", "committees",
    "paper", "papers", "author", "authors", "accept", "accepted", "acceptance",
    "write", "writes", "written", "conference", "chair", "chairs", "event",
    "is", "was", "has", "have", "a", "an", "the", "of", "by", "and", "in", "to",
    "for", "not", "or", "x", "y", "organ", "organs", "organize"};

/// Random identifier built from 1-4 vocabulary words in a random naming style.
inline std::string random_name(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> word(0, kVocabulary.size() - 1);
  std::uniform_int_distribution<int> len(1, 4), style(0, 4);
  int n = len(rng);
  int s = style(rng);
  std::string out;
  for (int i = 0; i < n; ++i) {
    std::string w(kVocabulary[word(rng)]);
    bool cap = s == 2 || (s == 1 && i > 0);
    if (cap) w[0] = static_cast<char>(w[0] - 'a' + 'A');
    if (i > 0) {
      if (s == 0) out += '_';
      if (s == 3) out += '-';
      if (s == 4) out += ' ';
    }
    out += w;
  }
  return out;
}

/// Entities with unique IRIs; about one in eight has an opaque code as its
/// name and the readable text as a label.
inline OntologyDoc random_ontology(std::mt19937_64& rng, std::size_t max_entities,
                                   std::string_view ns) {
  std::uniform_int_distribution<std::size_t> count(0, max_entities);
  std::uniform_int_distribution<int> kind(0, 3), coded(0, 7);
  OntologyDoc doc;
  doc.source_path = std::string(ns);
  std::unordered_set<std::string> seen;
  std::size_t n = count(rng);
  for (std::size_t i = 0; i < n; ++i) {
    EntityRef e;
    int k = kind(rng);
    e.kind = k < 2    ? EntityKind::Class
             : k == 2 ? EntityKind::ObjectProperty
                      : EntityKind::DatatypeProperty;
    auto name = random_name(rng);
    if (coded(rng) == 0) {
      e.local_name = "C" + std::to_string(10000 + i);
      e.labels.push_back(name);
    } else {
      for (char& c : name) {
        if (c == ' ') c = '_';
      }
      e.local_name = name + (seen.count(name) ? "_" + std::to_string(i) : "");
    }
    e.iri = std::string(ns) + "#" + e.local_name;
    if (!seen.insert(e.local_name).second) continue;
    doc.entities.push_back(std::move(e));
  }
  return doc;
}

/// All-pairs comparison of keys within category.
inline Alignment brute_force_match(const OntologyDoc& source, const OntologyDoc& target,
                                   const text::PipelineConfig& config,
                                   const MatchOptions& options = {}) {
  Alignment out;
  for (const auto& s : source.entities) {
    auto ts = display_text(s, options.label_policy);
    if (ts.empty()) continue;
    auto ks = text::apply_pipeline(ts, config, options.reserved);
    for (const auto& t : target.entities) {
      if (category_of(s.kind) != category_of(t.kind)) continue;
      auto tt = display_text(t, options.label_policy);
      if (tt.empty()) continue;
      auto kt = text::apply_pipeline(tt, config, options.reserved);
      if (!ks.empty() && ks == kt) out.insert({s.iri, t.iri, Relation::Equivalence, 1.0});
    }
  }
  return out;
}

inline bool is_subset(const Alignment& small, const Alignment& big) {
  for (const auto& c : small.cells()) {
    if (!big.contains(c.entity1, c.entity2)) return false;
  }
  return true;
}

}  // namespace ontoprep::testing
