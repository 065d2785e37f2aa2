#include "ontoprep/model.hpp"

#include <algorithm>
#include <stdexcept>

namespace ontoprep {

std::string_view to_string(EntityKind kind) {
  switch (kind) {
    case EntityKind::Class:
      return "Class";
    case EntityKind::ObjectProperty:
      return "ObjectProperty";
    case EntityKind::DatatypeProperty:
      return "DatatypeProperty";
  }
  return "?";
}

std::string_view to_string(Category category) {
  return category == Category::Class ? "Class" : "Property";
}

std::string local_name_of(std::string_view iri) {
  auto hash = iri.rfind('#');
  if (hash != std::string_view::npos) return std::string(iri.substr(hash + 1));
  auto slash = iri.rfind('/');
  if (slash != std::string_view::npos) return std::string(iri.substr(slash + 1));
  return std::string(iri);
}

const EntityRef* OntologyDoc::find(std::string_view iri) const {
  auto it = std::find_if(entities.begin(), entities.end(),
                         [&](const EntityRef& e) { return e.iri == iri; });
  return it == entities.end() ? nullptr : &*it;
}

bool Alignment::insert(Correspondence cell) {
  if (!(cell.confidence >= 0.0 && cell.confidence <= 1.0)) {
    throw std::invalid_argument("correspondence confidence outside [0,1]: " +
                                std::to_string(cell.confidence));
  }
  return cells_.insert(std::move(cell)).second;
}

bool Alignment::erase(std::string_view entity1, std::string_view entity2) {
  Correspondence probe{std::string(entity1), std::string(entity2)};
  return cells_.erase(probe) > 0;
}

bool Alignment::contains(std::string_view entity1, std::string_view entity2) const {
  Correspondence probe{std::string(entity1), std::string(entity2)};
  return cells_.count(probe) > 0;
}

bool Alignment::same_cells(const Alignment& other) const {
  return std::equal(cells_.begin(), cells_.end(), other.cells_.begin(), other.cells_.end());
}

}  // namespace ontoprep
