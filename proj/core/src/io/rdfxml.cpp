#include <expat.h>

#include <memory>
#include <string>
#include <vector>

#include "io/rdf_sink.hpp"
#include "ontoprep/error.hpp"

namespace ontoprep::io {
namespace {

constexpr char kNsSep = ' ';

// Expat reports "namespace<sep>local"; RDF names are the concatenation.
std::string expand(const XML_Char* name) {
  std::string s(name);
  auto sep = s.find(kNsSep);
  if (sep != std::string::npos) s.erase(sep, 1);
  return s;
}

std::string rdf(std::string_view local) { return std::string(kRdfNs) + std::string(local); }

struct Frame {
  enum class Role {
    Root,        // rdf:RDF: children are node elements
    Node,        // node element: children are property elements
    Property,    // property element awaiting a literal or one node element
    Resource,    // parseType="Resource": children are property elements
    Collection,  // parseType="Collection": children are node elements
    Literal,     // parseType="Literal" or an inert subtree
    Closed,      // property with rdf:resource / rdf:nodeID
  };
  Role role = Role::Root;
  std::string base;
  std::string lang;
  Term subject;           // Node, Resource: the node; Property: the owner
  std::string predicate;  // Property, Literal, Collection, Closed
  std::string text;
  bool has_child_node = false;
  bool emits_literal = false;
  int inert_depth = 0;
};

class RdfXmlParser {
 public:
  RdfXmlParser(const std::string& base, EntityCollector& sink) : sink_(sink), doc_base_(base) {}

  void parse(std::string_view bytes) {
    std::unique_ptr<std::remove_pointer_t<XML_Parser>, decltype(&XML_ParserFree)> parser(
        XML_ParserCreateNS(nullptr, kNsSep), &XML_ParserFree);
    if (!parser) throw Error("cannot allocate XML parser");
    parser_ = parser.get();
    XML_SetUserData(parser_, this);
    XML_SetElementHandler(parser_, &RdfXmlParser::on_start, &RdfXmlParser::on_end);
    XML_SetCharacterDataHandler(parser_, &RdfXmlParser::on_text);
    if (XML_Parse(parser_, bytes.data(), static_cast<int>(bytes.size()), XML_TRUE) ==
        XML_STATUS_ERROR) {
      if (error_) std::rethrow_exception(error_);
      throw MalformedDocument(XML_ErrorString(XML_GetErrorCode(parser_)),
                              XML_GetCurrentLineNumber(parser_),
                              XML_GetCurrentColumnNumber(parser_) + 1);
    }
    if (error_) std::rethrow_exception(error_);
  }

 private:
  static void on_start(void* self, const XML_Char* name, const XML_Char** attrs) {
    auto* p = static_cast<RdfXmlParser*>(self);
    try {
      p->start(expand(name), attrs);
    } catch (...) {
      p->fail(std::current_exception());
    }
  }
  static void on_end(void* self, const XML_Char*) {
    auto* p = static_cast<RdfXmlParser*>(self);
    try {
      p->end();
    } catch (...) {
      p->fail(std::current_exception());
    }
  }
  static void on_text(void* self, const XML_Char* s, int len) {
    auto* p = static_cast<RdfXmlParser*>(self);
    if (p->stack_.empty()) return;
    auto& top = p->stack_.back();
    if (top.role == Frame::Role::Property || top.role == Frame::Role::Literal) {
      top.text.append(s, static_cast<std::size_t>(len));
    }
  }

  void fail(std::exception_ptr e) {
    if (!error_) error_ = std::move(e);
    XML_StopParser(parser_, XML_FALSE);
  }

  [[noreturn]] void malformed(const std::string& what) const {
    throw MalformedDocument(what, XML_GetCurrentLineNumber(parser_),
                            XML_GetCurrentColumnNumber(parser_) + 1);
  }

  Term new_blank() { return Term::blank("b" + std::to_string(++blank_counter_)); }

  void start(const std::string& name, const XML_Char** attrs) {
    Frame frame;
    const Frame* parent = stack_.empty() ? nullptr : &stack_.back();
    frame.base = parent ? parent->base : doc_base_;
    frame.lang = parent ? parent->lang : std::string();

    std::vector<std::pair<std::string, std::string>> other;
    std::string about, id, node_id, resource, parse_type, datatype;
    bool has_about = false, has_id = false, has_node_id = false, has_resource = false;
    for (int i = 0; attrs[i]; i += 2) {
      std::string an = expand(attrs[i]);
      std::string av = attrs[i + 1];
      if (an == std::string(kXmlNs) + "base") {
        frame.base = resolve_iri(frame.base, av);
      } else if (an == std::string(kXmlNs) + "lang") {
        frame.lang = av;
      } else if (an.starts_with(kXmlNs) || an.starts_with("xml")) {
        // other xml:* attributes carry no RDF meaning
      } else if (an == rdf("about")) {
        about = av, has_about = true;
      } else if (an == rdf("ID")) {
        id = av, has_id = true;
      } else if (an == rdf("nodeID")) {
        node_id = av, has_node_id = true;
      } else if (an == rdf("resource")) {
        resource = av, has_resource = true;
      } else if (an == rdf("parseType")) {
        parse_type = av;
      } else if (an == rdf("datatype")) {
        datatype = av;
      } else {
        other.emplace_back(std::move(an), std::move(av));
      }
    }

    Frame::Role parent_role = parent ? parent->role : Frame::Role::Root;
    if (parent && (parent_role == Frame::Role::Literal || parent_role == Frame::Role::Closed)) {
      // Markup inside a literal or under an already-resolved property is inert.
      stack_.back().inert_depth++;
      return;
    }

    bool node_position = !parent || parent_role == Frame::Role::Root ||
                         parent_role == Frame::Role::Property ||
                         parent_role == Frame::Role::Collection;

    if (!parent && name == rdf("RDF")) {
      frame.role = Frame::Role::Root;
      stack_.push_back(std::move(frame));
      return;
    }

    if (node_position) {
      if (parent_role == Frame::Role::Property && parent->has_child_node) {
        malformed("property element holds more than one node");
      }
      Term subject;
      if (has_about) {
        subject = Term::iri(resolve_iri(frame.base, about));
      } else if (has_id) {
        subject = Term::iri(resolve_iri(frame.base, "#" + id));
      } else if (has_node_id) {
        subject = Term::blank("n" + node_id);
      } else {
        subject = new_blank();
      }
      if (name != rdf("Description")) sink_.triple(subject, kRdfType, Term::iri(name));
      for (const auto& [an, av] : other) {
        if (an == rdf("type")) {
          sink_.triple(subject, kRdfType, Term::iri(resolve_iri(frame.base, av)));
        } else {
          sink_.triple(subject, an, Term::literal(av, frame.lang));
        }
      }
      if (parent && parent_role == Frame::Role::Property) {
        auto& owner = stack_.back();
        owner.has_child_node = true;
        sink_.triple(owner.subject, owner.predicate, subject);
      }
      frame.role = Frame::Role::Node;
      frame.subject = std::move(subject);
      stack_.push_back(std::move(frame));
      return;
    }

    // Property element under a Node or Resource frame.
    frame.subject = parent->subject;
    frame.predicate = name;
    if (has_resource || has_node_id) {
      Term object = has_resource ? Term::iri(resolve_iri(frame.base, resource))
                                 : Term::blank("n" + node_id);
      sink_.triple(frame.subject, frame.predicate, object);
      frame.role = Frame::Role::Closed;
    } else if (parse_type == "Resource") {
      Term object = new_blank();
      sink_.triple(frame.subject, frame.predicate, object);
      frame.role = Frame::Role::Resource;
      frame.subject = object;
    } else if (parse_type == "Collection") {
      frame.role = Frame::Role::Collection;
    } else if (!parse_type.empty()) {
      frame.role = Frame::Role::Literal;
      frame.emits_literal = true;
    } else if (!other.empty()) {
      // Property attributes describe an anonymous node.
      Term object = new_blank();
      sink_.triple(frame.subject, frame.predicate, object);
      for (const auto& [an, av] : other) {
        if (an == rdf("type")) {
          sink_.triple(object, kRdfType, Term::iri(resolve_iri(frame.base, av)));
        } else {
          sink_.triple(object, an, Term::literal(av, frame.lang));
        }
      }
      frame.role = Frame::Role::Closed;
    } else {
      frame.role = Frame::Role::Property;
      frame.emits_literal = true;
    }
    stack_.push_back(std::move(frame));
  }

  void end() {
    if (stack_.empty()) return;
    auto& top = stack_.back();
    if (top.inert_depth > 0) {
      top.inert_depth--;
      return;
    }
    if (top.emits_literal && !top.has_child_node) {
      sink_.triple(top.subject, top.predicate, Term::literal(top.text, top.lang));
    }
    stack_.pop_back();
  }

  EntityCollector& sink_;
  std::string doc_base_;
  XML_Parser parser_ = nullptr;
  std::vector<Frame> stack_;
  std::exception_ptr error_;
  std::size_t blank_counter_ = 0;
};

}  // namespace

void parse_rdfxml(std::string_view bytes, const std::string& base, EntityCollector& sink) {
  RdfXmlParser(base, sink).parse(bytes);
}

}  // namespace ontoprep::io
