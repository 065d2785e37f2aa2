#include <expat.h>

#include <algorithm>
#include <charconv>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "io/rdf_sink.hpp"
#include "ontoprep/error.hpp"
#include "ontoprep/ontology_io.hpp"

namespace ontoprep {
namespace {

constexpr char kNsSep = ' ';

std::string local_part(const XML_Char* name) {
  std::string s(name);
  auto sep = s.rfind(kNsSep);
  return sep == std::string::npos ? s : s.substr(sep + 1);
}

std::string trim(std::string_view s) {
  auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

class AlignmentReader {
 public:
  Alignment read(std::string_view bytes) {
    std::unique_ptr<std::remove_pointer_t<XML_Parser>, decltype(&XML_ParserFree)> parser(
        XML_ParserCreateNS(nullptr, kNsSep), &XML_ParserFree);
    if (!parser) throw Error("cannot allocate XML parser");
    parser_ = parser.get();
    XML_SetUserData(parser_, this);
    XML_SetElementHandler(parser_, &AlignmentReader::on_start, &AlignmentReader::on_end);
    XML_SetCharacterDataHandler(parser_, &AlignmentReader::on_text);
    if (XML_Parse(parser_, bytes.data(), static_cast<int>(bytes.size()), XML_TRUE) ==
        XML_STATUS_ERROR) {
      if (error_) std::rethrow_exception(error_);
      throw MalformedDocument(XML_ErrorString(XML_GetErrorCode(parser_)),
                              XML_GetCurrentLineNumber(parser_),
                              XML_GetCurrentColumnNumber(parser_) + 1);
    }
    if (error_) std::rethrow_exception(error_);
    return std::move(result_);
  }

 private:
  struct Cell {
    std::string entity1, entity2, relation = "=", measure;
    bool has_measure = false;
  };

  static void on_start(void* self, const XML_Char* name, const XML_Char** attrs) {
    auto* r = static_cast<AlignmentReader*>(self);
    try {
      r->start(local_part(name), attrs);
    } catch (...) {
      r->fail(std::current_exception());
    }
  }
  static void on_end(void* self, const XML_Char*) {
    auto* r = static_cast<AlignmentReader*>(self);
    try {
      r->end();
    } catch (...) {
      r->fail(std::current_exception());
    }
  }
  static void on_text(void* self, const XML_Char* s, int len) {
    auto* r = static_cast<AlignmentReader*>(self);
    r->text_.append(s, static_cast<std::size_t>(len));
  }

  void fail(std::exception_ptr e) {
    if (!error_) error_ = std::move(e);
    XML_StopParser(parser_, XML_FALSE);
  }

  [[noreturn]] void malformed(const std::string& what) const {
    throw MalformedDocument(what, XML_GetCurrentLineNumber(parser_),
                            XML_GetCurrentColumnNumber(parser_) + 1);
  }

  static std::string attr(const XML_Char** attrs, std::string_view local) {
    for (int i = 0; attrs[i]; i += 2) {
      if (local_part(attrs[i]) == local) return attrs[i + 1];
    }
    return {};
  }

  bool inside(std::string_view name) const {
    return std::find(path_.begin(), path_.end(), name) != path_.end();
  }

  void start(const std::string& name, const XML_Char** attrs) {
    text_.clear();
    if (name == "Cell") {
      if (cell_) malformed("nested Cell element");
      cell_.emplace();
    } else if (cell_ && (name == "entity1" || name == "entity2")) {
      auto res = attr(attrs, "resource");
      (name == "entity1" ? cell_->entity1 : cell_->entity2) = res;
    } else if (name == "Ontology" && !cell_ && (inside("onto1") || inside("onto2"))) {
      auto about = attr(attrs, "about");
      if (!about.empty()) (inside("onto1") ? result_.source_ontology : result_.target_ontology) = about;
    }
    path_.push_back(name);
  }

  void end() {
    if (path_.empty()) return;
    std::string name = std::move(path_.back());
    path_.pop_back();
    auto value = trim(text_);
    text_.clear();

    if (cell_) {
      if (name == "entity1" && cell_->entity1.empty()) cell_->entity1 = value;
      if (name == "entity2" && cell_->entity2.empty()) cell_->entity2 = value;
      if (name == "relation") cell_->relation = value;
      if (name == "measure") {
        cell_->measure = value;
        cell_->has_measure = true;
      }
      if (name == "Cell") finish_cell();
      return;
    }
    if ((name == "onto1" || name == "onto2") && !value.empty()) {
      auto& slot = name == "onto1" ? result_.source_ontology : result_.target_ontology;
      if (slot.empty()) slot = value;
    }
    if (name == "provenance") result_.provenance = value;
  }

  void finish_cell() {
    Cell cell = std::move(*cell_);
    cell_.reset();
    if (cell.entity1.empty() || cell.entity2.empty()) malformed("Cell without entity1/entity2");
    if (cell.relation != "=") throw UnsupportedRelation(cell.relation);
    double confidence = 1.0;
    if (cell.has_measure) {
      auto* first = cell.measure.data();
      auto* last = first + cell.measure.size();
      auto [ptr, ec] = std::from_chars(first, last, confidence);
      if (ec != std::errc() || ptr != last) malformed("bad measure \"" + cell.measure + "\"");
      if (!(confidence >= 0.0 && confidence <= 1.0)) {
        malformed("measure outside [0,1]: " + cell.measure);
      }
    }
    result_.insert({std::move(cell.entity1), std::move(cell.entity2), Relation::Equivalence,
                    confidence});
  }

  XML_Parser parser_ = nullptr;
  Alignment result_;
  std::vector<std::string> path_;
  std::optional<Cell> cell_;
  std::string text_;
  std::exception_ptr error_;
};

std::string xml_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string format_measure(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  std::string s(buf, ptr);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

}  // namespace

Alignment read_alignment(std::string_view bytes) { return AlignmentReader().read(bytes); }

Alignment load_alignment(const std::filesystem::path& path) { return read_alignment(read_file(path)); }

std::string write_alignment(const Alignment& alignment) {
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"utf-8\"?>\n";
  out += "<rdf:RDF xmlns=\"";
  out += kAlignmentNs;
  out += "\"\n         xmlns:rdf=\"http://www.w3.org/1999/02/22-rdf-syntax-ns#\"\n";
  out += "         xmlns:xsd=\"http://www.w3.org/2001/XMLSchema#\">\n";
  out += "<Alignment>\n  <xml>yes</xml>\n  <level>0</level>\n  <type>?\?</type>\n";
  if (!alignment.provenance.empty()) {
    out += "  <provenance>" + xml_escape(alignment.provenance) + "</provenance>\n";
  }
  out += "  <onto1><Ontology rdf:about=\"" + xml_escape(alignment.source_ontology) +
         "\"/></onto1>\n";
  out += "  <onto2><Ontology rdf:about=\"" + xml_escape(alignment.target_ontology) +
         "\"/></onto2>\n";
  // The cell set is already ordered by (entity1, entity2).
  for (const auto& c : alignment.cells()) {
    out += "  <map>\n    <Cell>\n";
    out += "      <entity1 rdf:resource=\"" + xml_escape(c.entity1) + "\"/>\n";
    out += "      <entity2 rdf:resource=\"" + xml_escape(c.entity2) + "\"/>\n";
    out += "      <relation>=</relation>\n";
    out += "      <measure rdf:datatype=\"http://www.w3.org/2001/XMLSchema#float\">" +
           format_measure(c.confidence) + "</measure>\n";
    out += "    </Cell>\n  </map>\n";
  }
  out += "</Alignment>\n</rdf:RDF>\n";
  return out;
}

void save_alignment(const Alignment& alignment, const std::filesystem::path& path) {
  write_file_atomic(path, write_alignment(alignment));
}

}  // namespace ontoprep
