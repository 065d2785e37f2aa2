#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ontoprep {

enum class EntityKind { Class, ObjectProperty, DatatypeProperty };

/// Matching category: object and datatype properties share one pool.
enum class Category { Class, Property };

constexpr Category category_of(EntityKind kind) {
  return kind == EntityKind::Class ? Category::Class : Category::Property;
}

std::string_view to_string(EntityKind kind);
std::string_view to_string(Category category);

struct EntityRef {
  std::string iri;
  EntityKind kind = EntityKind::Class;
  std::string local_name;
  std::vector<std::string> labels;

  friend bool operator==(const EntityRef&, const EntityRef&) = default;
};

/// Substring after '#', else after the last '/'; the whole IRI if neither occurs.
std::string local_name_of(std::string_view iri);

struct OntologyDoc {
  std::string source_path;
  std::vector<EntityRef> entities;

  const EntityRef* find(std::string_view iri) const;

  friend bool operator==(const OntologyDoc&, const OntologyDoc&) = default;
};

enum class Relation { Equivalence };

struct Correspondence {
  std::string entity1;
  std::string entity2;
  Relation relation = Relation::Equivalence;
  double confidence = 1.0;

  friend bool operator==(const Correspondence&, const Correspondence&) = default;
};

/// Orders cells by (entity1, entity2); relation and confidence do not take part,
/// so a set keyed by this comparator holds at most one cell per pair.
struct ByEntityPair {
  bool operator()(const Correspondence& a, const Correspondence& b) const {
    if (a.entity1 != b.entity1) return a.entity1 < b.entity1;
    return a.entity2 < b.entity2;
  }
};

class Alignment {
 public:
  using CellSet = std::set<Correspondence, ByEntityPair>;

  std::string source_ontology;
  std::string target_ontology;
  std::string provenance;

  /// Adds a cell. Returns false (and keeps the existing cell) when the pair is
  /// already present. Throws std::invalid_argument on a confidence outside [0,1].
  bool insert(Correspondence cell);
  bool erase(std::string_view entity1, std::string_view entity2);
  bool contains(std::string_view entity1, std::string_view entity2) const;

  const CellSet& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }

  /// Cells compared as sets, confidence included.
  bool same_cells(const Alignment& other) const;

 private:
  CellSet cells_;
};

}  // namespace ontoprep
