#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ontoprep/model.hpp"
#include "ontoprep/text/pipeline.hpp"
#include "ontoprep/verdict.hpp"

namespace ontoprep {

struct EvalReport {
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::uint64_t alignment_size = 0;
  std::uint64_t reference_size = 0;

  friend bool operator==(const EvalReport&, const EvalReport&) = default;
};

/// Scores from raw counts; zero denominators give 0.
EvalReport report_from_counts(std::uint64_t tp, std::uint64_t fp, std::uint64_t fn);

/// Cells are matched on (entity1, entity2); confidence is ignored.
EvalReport evaluate(const Alignment& alignment, const Alignment& reference);

/// True iff adding delta_tp true and delta_fp false positives strictly raises
/// precision tp/(tp+fp). Exact integer arithmetic. Throws EmptyInput when
/// tp+fp is zero.
bool improvement_condition(std::uint64_t delta_tp, std::uint64_t delta_fp, std::uint64_t tp,
                           std::uint64_t fp);

/// Fraction of answers equal to `expected`. Throws EmptyInput on no answers.
double discovery_rate(std::span<const Answer> answers, Answer expected);

/// Reserved words per 100 entities of the two ontologies. Throws EmptyInput
/// when both are empty.
double reserved_density(const text::ReservedWordSet& reserved, const OntologyDoc& source,
                        const OntologyDoc& target);

/// One evaluated (pair, pipeline, repair) combination.
struct ReportRow {
  std::string track;
  std::string alignment_id;
  std::string config_id;
  EvalReport report;
  std::string provenance;
};

/// Shortest decimal text that reads back to the same double.
std::string format_real(double value);

/// Quotes a CSV field when it holds a comma, quote or line break.
std::string csv_field(std::string_view field);

std::string csv_header();
/// track, alignment_id, config_id, tp, fp, fn, precision, recall, f1.
std::string csv_row(const ReportRow& row);
/// Single-line JSON object with every EvalReport field plus the labels and
/// provenance.
std::string json_record(const ReportRow& row);
ReportRow parse_json_record(std::string_view line);

}  // namespace ontoprep
