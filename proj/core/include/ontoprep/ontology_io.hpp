#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ontoprep/model.hpp"

namespace ontoprep {

enum class RdfFormat { RdfXml, Turtle };

/// "rdfxml" / "turtle" (also "xml", "owl", "ttl"). Throws UnsupportedFormat.
RdfFormat parse_format(std::string_view name);
std::string_view to_string(RdfFormat format);

/// Picks the format from the file extension, falling back to sniffing the
/// first non-blank byte. Throws UnsupportedFormat when neither decides.
RdfFormat detect_format(const std::filesystem::path& path, std::string_view bytes);

inline constexpr std::string_view kRdfsLabel = "http://www.w3.org/2000/01/rdf-schema#label";

struct ParseOptions {
  /// Predicates whose literal values are collected as labels, besides rdfs:label.
  std::vector<std::string> annotation_props;
  /// Base for relative IRIs when the document declares none.
  std::string base_iri;
};

/// Extracts owl:Class, owl:ObjectProperty and owl:DatatypeProperty subjects
/// with their labels. Entities appear in the order of their first typing
/// triple; blank nodes are skipped. When a subject has labels tagged "en" or
/// untagged, labels in other languages are dropped.
/// Throws MalformedDocument with line and column on syntax errors.
OntologyDoc parse_ontology(std::string_view bytes, RdfFormat format, const ParseOptions& options = {});

OntologyDoc load_ontology(const std::filesystem::path& path,
                          std::optional<RdfFormat> format = std::nullopt,
                          const ParseOptions& options = {});

enum class LabelPolicy { NameThenLabel, LabelThenName };

/// "name-first" / "label-first". Throws ConfigError.
LabelPolicy parse_label_policy(std::string_view name);
std::string_view to_string(LabelPolicy policy);

/// A name is textual when it has at least one letter and more letters than
/// digits: "isReviewing" is, "C12345" and "MA_0000001" are not.
bool is_textual(std::string_view text);

/// NameThenLabel: the local name when textual, else the first label, else "".
/// LabelThenName: the first label when textual, else the local name, else "".
std::string display_text(const EntityRef& entity, LabelPolicy policy);

inline constexpr std::string_view kAlignmentNs =
    "http://knowledgeweb.semanticweb.org/heterogeneity/alignment";

/// Reads an Alignment-format RDF/XML document. A cell without a measure gets
/// confidence 1.0. Throws UnsupportedRelation for any relation other than "="
/// and MalformedDocument for syntax errors or incomplete cells.
Alignment read_alignment(std::string_view bytes);
Alignment load_alignment(const std::filesystem::path& path);

/// Serialises cells sorted by (entity1, entity2); output is byte-stable.
std::string write_alignment(const Alignment& alignment);
void save_alignment(const Alignment& alignment, const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);
/// Writes through a temporary file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, std::string_view bytes);

}  // namespace ontoprep
