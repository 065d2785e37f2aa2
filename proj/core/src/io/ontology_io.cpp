#include "ontoprep/ontology_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "io/rdf_sink.hpp"
#include "ontoprep/error.hpp"
#include "ontoprep/text/tokenize.hpp"

namespace ontoprep {
namespace io {
namespace {

struct IriParts {
  std::string_view scheme;
  std::optional<std::string_view> authority;
  std::string_view path;
  std::optional<std::string_view> query;
  std::optional<std::string_view> fragment;
};

IriParts split_iri(std::string_view s) {
  IriParts p;
  auto hash = s.find('#');
  if (hash != std::string_view::npos) {
    p.fragment = s.substr(hash + 1);
    s = s.substr(0, hash);
  }
  auto q = s.find('?');
  if (q != std::string_view::npos) {
    p.query = s.substr(q + 1);
    s = s.substr(0, q);
  }
  auto colon = s.find(':');
  auto first_delim = s.find_first_of("/?#");
  if (colon != std::string_view::npos && colon > 0 &&
      (first_delim == std::string_view::npos || colon < first_delim) &&
      std::isalpha(static_cast<unsigned char>(s[0]))) {
    p.scheme = s.substr(0, colon);
    s = s.substr(colon + 1);
  }
  if (s.starts_with("//")) {
    auto end = s.find('/', 2);
    p.authority = s.substr(2, end == std::string_view::npos ? std::string_view::npos : end - 2);
    s = end == std::string_view::npos ? std::string_view{} : s.substr(end);
  }
  p.path = s;
  return p;
}

std::string remove_dot_segments(std::string_view in) {
  std::string input(in);
  std::string output;
  while (!input.empty()) {
    if (input.starts_with("../")) {
      input.erase(0, 3);
    } else if (input.starts_with("./")) {
      input.erase(0, 2);
    } else if (input.starts_with("/./")) {
      input.erase(0, 2);
    } else if (input == "/.") {
      input = "/";
    } else if (input.starts_with("/../") || input == "/..") {
      input = input.size() == 3 ? "/" : input.substr(3);
      auto slash = output.rfind('/');
      output.erase(slash == std::string::npos ? 0 : slash);
    } else if (input == "." || input == "..") {
      input.clear();
    } else {
      auto next = input.find('/', input[0] == '/' ? 1 : 0);
      output += input.substr(0, next);
      input.erase(0, next == std::string::npos ? input.size() : next);
    }
  }
  return output;
}

std::string merge_paths(const IriParts& base, std::string_view ref_path) {
  if (base.authority && base.path.empty()) return "/" + std::string(ref_path);
  auto slash = base.path.rfind('/');
  if (slash == std::string_view::npos) return std::string(ref_path);
  return std::string(base.path.substr(0, slash + 1)) + std::string(ref_path);
}

std::string recompose(std::string_view scheme, const std::optional<std::string>& authority,
                      std::string_view path, const std::optional<std::string>& query,
                      const std::optional<std::string>& fragment) {
  std::string out;
  if (!scheme.empty()) {
    out += scheme;
    out += ':';
  }
  if (authority) {
    out += "//";
    out += *authority;
  }
  out += path;
  if (query) {
    out += '?';
    out += *query;
  }
  if (fragment) {
    out += '#';
    out += *fragment;
  }
  return out;
}

std::optional<std::string> opt(std::optional<std::string_view> v) {
  return v ? std::optional<std::string>(std::string(*v)) : std::nullopt;
}

}  // namespace

std::string resolve_iri(std::string_view base, std::string_view ref) {
  auto r = split_iri(ref);
  if (!r.scheme.empty()) {
    return recompose(r.scheme, opt(r.authority), remove_dot_segments(r.path), opt(r.query),
                     opt(r.fragment));
  }
  if (base.empty()) return std::string(ref);
  auto b = split_iri(base);
  std::optional<std::string> authority;
  std::string path;
  std::optional<std::string> query;
  if (r.authority) {
    authority = std::string(*r.authority);
    path = remove_dot_segments(r.path);
    query = opt(r.query);
  } else {
    authority = opt(b.authority);
    if (r.path.empty()) {
      path = std::string(b.path);
      query = r.query ? opt(r.query) : opt(b.query);
    } else {
      path = r.path.starts_with('/') ? remove_dot_segments(r.path)
                                     : remove_dot_segments(merge_paths(b, r.path));
      query = opt(r.query);
    }
  }
  return recompose(b.scheme, authority, path, query, opt(r.fragment));
}

EntityCollector::EntityCollector(const ParseOptions& options) : options_(options) {}

void EntityCollector::triple(const Term& subject, std::string_view predicate, const Term& object) {
  if (subject.kind != Term::Kind::Iri || subject.value.empty()) return;
  if (predicate == kRdfType) {
    if (object.kind != Term::Kind::Iri) return;
    std::optional<EntityKind> kind;
    if (object.value == std::string(kOwlNs) + "Class") {
      kind = EntityKind::Class;
    } else if (object.value == std::string(kOwlNs) + "ObjectProperty") {
      kind = EntityKind::ObjectProperty;
    } else if (object.value == std::string(kOwlNs) + "DatatypeProperty") {
      kind = EntityKind::DatatypeProperty;
    }
    if (!kind) return;
    auto& entry = subjects_[subject.value];
    if (!entry.typed) {
      entry.typed = true;
      entry.kind = *kind;
      order_.push_back(subject.value);
    }
    return;
  }
  if (object.kind != Term::Kind::Literal) return;
  bool is_label = predicate == kRdfsLabel ||
                  std::find(options_.annotation_props.begin(), options_.annotation_props.end(),
                            predicate) != options_.annotation_props.end();
  if (!is_label) return;
  auto lang = text::ascii_lower(object.lang);
  bool preferred = lang.empty() || lang == "en" || lang.starts_with("en-");
  subjects_[subject.value].labels.push_back({object.value, preferred});
}

OntologyDoc EntityCollector::finish(std::string source_path) && {
  OntologyDoc doc;
  doc.source_path = std::move(source_path);
  doc.entities.reserve(order_.size());
  for (const auto& iri : order_) {
    auto& pending = subjects_.at(iri);
    EntityRef e;
    e.iri = iri;
    e.kind = pending.kind;
    e.local_name = local_name_of(iri);
    bool any_preferred = std::any_of(pending.labels.begin(), pending.labels.end(),
                                     [](const Label& l) { return l.preferred_language; });
    for (auto& l : pending.labels) {
      if (any_preferred && !l.preferred_language) continue;
      e.labels.push_back(std::move(l.value));
    }
    doc.entities.push_back(std::move(e));
  }
  return doc;
}

}  // namespace io

RdfFormat parse_format(std::string_view name) {
  auto n = text::ascii_lower(name);
  if (n == "rdfxml" || n == "rdf/xml" || n == "xml" || n == "owl" || n == "rdf") {
    return RdfFormat::RdfXml;
  }
  if (n == "turtle" || n == "ttl") return RdfFormat::Turtle;
  throw UnsupportedFormat("unsupported ontology format \"" + std::string(name) + "\"");
}

std::string_view to_string(RdfFormat format) {
  return format == RdfFormat::RdfXml ? "rdfxml" : "turtle";
}

RdfFormat detect_format(const std::filesystem::path& path, std::string_view bytes) {
  auto ext = text::ascii_lower(path.extension().string());
  if (ext == ".ttl" || ext == ".turtle") return RdfFormat::Turtle;
  if (ext == ".rdf" || ext == ".xml") return RdfFormat::RdfXml;
  auto first = bytes.find_first_not_of(" \t\r\n\xEF\xBB\xBF");
  if (ext == ".owl") {
    // .owl is RDF/XML by convention but Turtle files carry it too.
    if (first == std::string_view::npos) return RdfFormat::RdfXml;
    auto head = text::ascii_lower(bytes.substr(first, 6));
    bool turtle = bytes[first] == '@' || head == "prefix" || head.starts_with("base");
    return turtle ? RdfFormat::Turtle : RdfFormat::RdfXml;
  }
  if (first == std::string_view::npos) {
    throw UnsupportedFormat("cannot determine format of empty document " + path.string());
  }
  if (bytes[first] == '<' && bytes.substr(first).starts_with("<?xml")) return RdfFormat::RdfXml;
  if (bytes[first] == '<' && bytes.substr(first, 4) == "<rdf") return RdfFormat::RdfXml;
  if (bytes[first] == '@' || bytes[first] == '#' || bytes[first] == '<' ||
      text::ascii_lower(bytes.substr(first, 6)) == "prefix") {
    return RdfFormat::Turtle;
  }
  throw UnsupportedFormat("cannot determine format of " + path.string());
}

OntologyDoc parse_ontology(std::string_view bytes, RdfFormat format, const ParseOptions& options) {
  io::EntityCollector sink(options);
  switch (format) {
    case RdfFormat::RdfXml:
      io::parse_rdfxml(bytes, options.base_iri, sink);
      break;
    case RdfFormat::Turtle:
      io::parse_turtle(bytes, options.base_iri, sink);
      break;
  }
  return std::move(sink).finish({});
}

OntologyDoc load_ontology(const std::filesystem::path& path, std::optional<RdfFormat> format,
                          const ParseOptions& options) {
  auto bytes = read_file(path);
  auto fmt = format ? *format : detect_format(path, bytes);
  ParseOptions opts = options;
  if (opts.base_iri.empty()) {
    opts.base_iri = "file://" + std::filesystem::absolute(path).lexically_normal().generic_string();
  }
  auto doc = parse_ontology(bytes, fmt, opts);
  doc.source_path = path.string();
  return doc;
}

LabelPolicy parse_label_policy(std::string_view name) {
  if (name == "name-first") return LabelPolicy::NameThenLabel;
  if (name == "label-first") return LabelPolicy::LabelThenName;
  throw ConfigError("unknown label policy \"" + std::string(name) + "\"");
}

std::string_view to_string(LabelPolicy policy) {
  return policy == LabelPolicy::NameThenLabel ? "name-first" : "label-first";
}

bool is_textual(std::string_view s) {
  std::size_t letters = 0;
  std::size_t digits = 0;
  for (char c : s) {
    auto u = static_cast<unsigned char>(c);
    if (std::isalpha(u) || u >= 0x80) {
      ++letters;
    } else if (std::isdigit(u)) {
      ++digits;
    }
  }
  return letters > 0 && letters > digits;
}

std::string display_text(const EntityRef& entity, LabelPolicy policy) {
  const std::string* first_label = entity.labels.empty() ? nullptr : &entity.labels.front();
  if (policy == LabelPolicy::NameThenLabel) {
    if (is_textual(entity.local_name)) return entity.local_name;
    return first_label ? *first_label : std::string();
  }
  if (first_label && is_textual(*first_label)) return *first_label;
  return entity.local_name;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view bytes) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace ontoprep
