#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ontoprep/model.hpp"
#include "ontoprep/ontology_io.hpp"

namespace ontoprep::io {

inline constexpr std::string_view kRdfNs = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kOwlNs = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kXmlNs = "http://www.w3.org/XML/1998/namespace";
inline constexpr std::string_view kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";

struct Term {
  enum class Kind { Iri, Blank, Literal };
  Kind kind = Kind::Iri;
  std::string value;
  std::string lang;  // literals only

  static Term iri(std::string v) { return {Kind::Iri, std::move(v), {}}; }
  static Term blank(std::string v) { return {Kind::Blank, std::move(v), {}}; }
  static Term literal(std::string v, std::string lang = {}) {
    return {Kind::Literal, std::move(v), std::move(lang)};
  }
};

/// Consumes triples and keeps only entity typings and labels.
class EntityCollector {
 public:
  explicit EntityCollector(const ParseOptions& options);

  void triple(const Term& subject, std::string_view predicate, const Term& object);
  OntologyDoc finish(std::string source_path) &&;

 private:
  struct Label {
    std::string value;
    bool preferred_language = false;
  };
  struct Pending {
    EntityKind kind;
    std::vector<Label> labels;
    bool typed = false;
  };

  const ParseOptions& options_;
  std::vector<std::string> order_;
  std::unordered_map<std::string, Pending> subjects_;
};

/// RFC 3986 reference resolution, enough for the IRIs found in ontologies.
std::string resolve_iri(std::string_view base, std::string_view ref);

void parse_rdfxml(std::string_view bytes, const std::string& base, EntityCollector& sink);
void parse_turtle(std::string_view bytes, const std::string& base, EntityCollector& sink);

}  // namespace ontoprep::io
