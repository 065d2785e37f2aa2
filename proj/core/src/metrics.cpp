#include "ontoprep/metrics.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>

#include "ontoprep/error.hpp"

namespace ontoprep {
namespace {

double ratio(std::uint64_t num, std::uint64_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

std::string_view to_string(Answer answer) {
  switch (answer) {
    case Answer::Yes:
      return "yes";
    case Answer::No:
      return "no";
    case Answer::Unparseable:
      return "unparseable";
  }
  return "unparseable";
}

Answer parse_answer(std::string_view name) {
  if (name == "yes") return Answer::Yes;
  if (name == "no") return Answer::No;
  if (name == "unparseable") return Answer::Unparseable;
  throw ConfigError("unknown answer \"" + std::string(name) + "\"");
}

EvalReport report_from_counts(std::uint64_t tp, std::uint64_t fp, std::uint64_t fn) {
  EvalReport r;
  r.tp = tp;
  r.fp = fp;
  r.fn = fn;
  r.alignment_size = tp + fp;
  r.reference_size = tp + fn;
  r.precision = ratio(tp, tp + fp);
  r.recall = ratio(tp, tp + fn);
  double sum = r.precision + r.recall;
  r.f1 = sum == 0.0 ? 0.0 : 2.0 * r.precision * r.recall / sum;
  return r;
}

EvalReport evaluate(const Alignment& alignment, const Alignment& reference) {
  // Both cell sets are ordered by pair, so a merge walk counts the overlap.
  std::uint64_t tp = 0;
  const auto& a = alignment.cells();
  const auto& r = reference.cells();
  ByEntityPair less;
  auto ia = a.begin();
  auto ir = r.begin();
  while (ia != a.end() && ir != r.end()) {
    if (less(*ia, *ir)) {
      ++ia;
    } else if (less(*ir, *ia)) {
      ++ir;
    } else {
      ++tp;
      ++ia;
      ++ir;
    }
  }
  return report_from_counts(tp, a.size() - tp, r.size() - tp);
}

bool improvement_condition(std::uint64_t delta_tp, std::uint64_t delta_fp, std::uint64_t tp,
                           std::uint64_t fp) {
  if (tp + fp == 0) throw EmptyInput("improvement condition needs tp+fp > 0");
  __extension__ typedef unsigned __int128 wide;
  // (tp+dtp)/(tp+dtp+fp+dfp) > tp/(tp+fp), cross-multiplied.
  wide lhs = static_cast<wide>(tp + delta_tp) * (tp + fp);
  wide rhs = static_cast<wide>(tp) * (tp + delta_tp + fp + delta_fp);
  return lhs > rhs;
}

double discovery_rate(std::span<const Answer> answers, Answer expected) {
  if (answers.empty()) throw EmptyInput("discovery rate of an empty verdict list");
  auto hits = std::count(answers.begin(), answers.end(), expected);
  return static_cast<double>(hits) / static_cast<double>(answers.size());
}

double reserved_density(const text::ReservedWordSet& reserved, const OntologyDoc& source,
                        const OntologyDoc& target) {
  auto entities = source.entities.size() + target.entities.size();
  if (entities == 0) throw EmptyInput("reserved density over two empty ontologies");
  return 100.0 * static_cast<double>(reserved.size()) / static_cast<double>(entities);
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string format_real(double value) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

std::string csv_header() { return "track,alignment_id,config_id,tp,fp,fn,precision,recall,f1\n"; }

std::string csv_row(const ReportRow& row) {
  const auto& r = row.report;
  std::string out = csv_field(row.track) + ',' + csv_field(row.alignment_id) + ',' +
                    csv_field(row.config_id);
  for (auto n : {r.tp, r.fp, r.fn}) out += ',' + std::to_string(n);
  for (auto x : {r.precision, r.recall, r.f1}) out += ',' + format_real(x);
  out += '\n';
  return out;
}

std::string json_record(const ReportRow& row) {
  const auto& r = row.report;
  nlohmann::ordered_json j;
  j["track"] = row.track;
  j["alignment_id"] = row.alignment_id;
  j["config_id"] = row.config_id;
  j["tp"] = r.tp;
  j["fp"] = r.fp;
  j["fn"] = r.fn;
  j["precision"] = r.precision;
  j["recall"] = r.recall;
  j["f1"] = r.f1;
  j["alignment_size"] = r.alignment_size;
  j["reference_size"] = r.reference_size;
  j["provenance"] = row.provenance;
  return j.dump();
}

ReportRow parse_json_record(std::string_view line) {
  try {
    auto j = nlohmann::json::parse(line);
    ReportRow row;
    row.track = j.at("track").get<std::string>();
    row.alignment_id = j.at("alignment_id").get<std::string>();
    row.config_id = j.at("config_id").get<std::string>();
    row.provenance = j.value("provenance", std::string());
    row.report = report_from_counts(j.at("tp").get<std::uint64_t>(), j.at("fp").get<std::uint64_t>(),
                                    j.at("fn").get<std::uint64_t>());
    return row;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("bad report record: ") + e.what());
  }
}

}  // namespace ontoprep
