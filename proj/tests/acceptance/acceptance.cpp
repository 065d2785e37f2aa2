// Runs acceptance criteria 1-11 and prints one PASS/FAIL line per criterion.
//
//   ontoprep_acceptance [--only N]... [--track DIR] [--work DIR]
//
// The conference criteria (5, 8, 9, 11) use the bundled fixture track unless
// --track or OM_CONFERENCE_TRACK names another one: either a directory with a
// manifest.toml, or a MELT-style layout of <pair>/{source,target,reference}.rdf.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "ontoprep/experiment.hpp"
#include "ontoprep/llm.hpp"
#include "ontoprep/logic_repair.hpp"
#include "ontoprep/matcher.hpp"
#include "ontoprep/metrics.hpp"
#include "ontoprep/text/stemmer.hpp"
#include "support/metric_cases.hpp"
#include "support/synthetic.hpp"
#include "unit/fixture_util.hpp"

namespace {

namespace fs = std::filesystem;
using namespace ontoprep;
using Clock = std::chrono::steady_clock;

// Pinned thresholds.
constexpr double kWalkthroughSeconds = 1.0;
constexpr int kRepairOntologies = 1000;
constexpr double kRepairSeconds = 60.0;
constexpr int kMatcherPairs = 500;
constexpr std::size_t kMatcherMaxEntities = 100;
constexpr double kMatcherSeconds = 60.0;
constexpr double kLancasterAgreement = 0.999;
constexpr std::size_t kLancasterMinWords = 10000;
constexpr double kMetricTolerance = 1e-12;
constexpr int kImprovementTuples = 100000;
constexpr double kStemmerPairTolerance = 0.01;
constexpr double kDensityLimit = 10.0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  std::function<Outcome()> run;
};

class Checker {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok && failures_++ < 5) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  Outcome outcome(std::string summary) const {
    if (failures_ > 5) summary += "; +" + std::to_string(failures_ - 5) + " more failures";
    return {failures_ == 0, notes_.empty() ? summary : summary + "; " + notes_};
  }

 private:
  int failures_ = 0;
  std::string notes_;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fixed(double v, int digits = 3) {
  std::ostringstream os;
  os.precision(digits);
  os << std::fixed << v;
  return os.str();
}

OntologyDoc make_doc(std::string_view ns, std::initializer_list<std::pair<const char*, EntityKind>> items) {
  OntologyDoc d;
  for (const auto& [name, kind] : items) {
    d.entities.push_back({std::string(ns) + "#" + name, kind, name, {}});
  }
  return d;
}

text::PipelineConfig pipeline(std::string_view steps) { return text::PipelineConfig::parse(steps); }

// ---------------------------------------------------------------------------

Outcome walkthrough() {
  auto start = Clock::now();
  Checker c;
  auto source = make_doc("http://s", {{"reviews", EntityKind::ObjectProperty}});
  auto target = make_doc("http://t", {{"isReviewing", EntityKind::ObjectProperty}});
  auto tn = match_ontologies(source, target, pipeline("T,N"));
  auto full = match_ontologies(source, target, pipeline("T,N,R,S:porter"));
  c.require(tn.size() == 0, "T,N gave " + std::to_string(tn.size()) + " cells");
  c.require(full.size() == 1 && full.contains("http://s#reviews", "http://t#isReviewing"),
            "T,N,R,S:porter gave " + std::to_string(full.size()) + " cells");
  auto k1 = text::apply_pipeline("isReviewing", pipeline("T,N")).text;
  auto k2 = text::apply_pipeline("isReviewing", pipeline("T,N,R")).text;
  auto k3 = text::apply_pipeline("isReviewing", pipeline("T,N,R,S:porter")).text;
  c.require(k1 == "is reviewing", "T,N key \"" + k1 + "\"");
  c.require(k2 == "reviewing", "T,N,R key \"" + k2 + "\"");
  c.require(k3 == "review", "T,N,R,S key \"" + k3 + "\"");
  auto secs = seconds_since(start);
  c.require(secs < kWalkthroughSeconds, "took " + fixed(secs) + " s");
  return c.outcome("keys \"" + k1 + "\" -> \"" + k2 + "\" -> \"" + k3 + "\", cells 0 -> " +
                   std::to_string(full.size()));
}

Outcome reserved_example() {
  auto start = Clock::now();
  Checker c;
  auto o = make_doc("http://o", {{"was_a_member_of", EntityKind::ObjectProperty},
                                 {"has_members", EntityKind::ObjectProperty}});
  auto config = pipeline("T,N,R,S:porter");
  auto reserved = find_reserved_word_set(o, config);
  c.require(reserved == text::ReservedWordSet{"was", "a", "of", "has", "members"},
            "reserved set " + reserved.serialize());
  auto k1 = text::apply_pipeline("was_a_member_of", config, &reserved).text;
  auto k2 = text::apply_pipeline("has_members", config, &reserved).text;
  c.require(k1 == "was a member of", "key \"" + k1 + "\"");
  c.require(k2 == "has members", "key \"" + k2 + "\"");
  auto secs = seconds_since(start);
  c.require(secs < kWalkthroughSeconds, "took " + fixed(secs) + " s");
  std::string words;
  for (const auto& w : reserved.words()) words += (words.empty() ? "" : ",") + w;
  return c.outcome("{" + words + "}, keys \"" + k1 + "\" / \"" + k2 + "\"");
}

Outcome repair_guarantee() {
  auto start = Clock::now();
  Checker c;
  const std::vector<std::string> configs{"T,N,R,S:porter", "T,N,R,S:snowball",
                                         "T,N,R,S:lancaster", "T,N,R", "T,N,S:lancaster",
                                         "T,N,R,L"};
  std::mt19937_64 rng(20240601);
  std::size_t collisions_before = 0, violations = 0;
  for (int trial = 0; trial < kRepairOntologies; ++trial) {
    auto config = pipeline(configs[static_cast<std::size_t>(trial) % configs.size()]);
    auto o = testing::random_ontology(rng, 80, "http://o");
    auto reserved = find_reserved_word_set(o, config);
    // Pairs are compared within a kind category, as the matcher pools them.
    std::vector<std::string> texts;
    std::vector<Category> categories;
    for (const auto& e : o.entities) {
      auto t = display_text(e, LabelPolicy::NameThenLabel);
      if (t.empty()) continue;
      texts.push_back(std::move(t));
      categories.push_back(category_of(e.kind));
    }
    std::vector<text::TokenSeq> phase1;
    std::vector<text::CanonicalKey> plain, repaired;
    for (const auto& t : texts) {
      phase1.push_back(text::run_pipeline(t, pipeline("T,N")));
      plain.push_back(text::apply_pipeline(t, config));
      repaired.push_back(text::apply_pipeline(t, config, &reserved));
    }
    for (std::size_t i = 0; i < texts.size(); ++i) {
      for (std::size_t j = i + 1; j < texts.size(); ++j) {
        if (categories[i] != categories[j]) continue;
        if (phase1[i] == phase1[j] || plain[i] != plain[j]) continue;
        ++collisions_before;
        if (repaired[i] == repaired[j]) {
          ++violations;
          c.require(false, "\"" + texts[i] + "\" / \"" + texts[j] + "\" under " + config.id());
        }
      }
    }
  }
  auto secs = seconds_since(start);
  c.require(secs < kRepairSeconds, "took " + fixed(secs, 1) + " s");
  return c.outcome(std::to_string(kRepairOntologies) + " ontologies, " +
                   std::to_string(collisions_before) + " colliding pairs, " +
                   std::to_string(violations) + " violations, " + fixed(secs, 1) + " s");
}

Outcome matcher_oracle() {
  auto start = Clock::now();
  Checker c;
  const std::vector<std::string> configs{"",   "T",  "T,N",        "T,N,R",
                                         "T,N,R,S:porter", "T,N,R,S:lancaster", "T,N,L:pos"};
  std::mt19937_64 rng(777);
  std::size_t cells = 0, mismatches = 0;
  for (int trial = 0; trial < kMatcherPairs; ++trial) {
    auto config = pipeline(configs[static_cast<std::size_t>(trial) % configs.size()]);
    auto s = testing::random_ontology(rng, kMatcherMaxEntities, "http://s");
    auto t = testing::random_ontology(rng, kMatcherMaxEntities, "http://t");
    auto policy = trial % 2 ? LabelPolicy::LabelThenName : LabelPolicy::NameThenLabel;
    MatchOptions options{policy, nullptr};
    auto fast = match_ontologies(s, t, config, options);
    auto slow = testing::brute_force_match(s, t, config, options);
    cells += slow.size();
    bool same = fast.size() == slow.size() && testing::is_subset(slow, fast);
    if (!same) {
      ++mismatches;
      c.require(false, "trial " + std::to_string(trial) + " under " + config.id());
    }
  }
  auto secs = seconds_since(start);
  c.require(secs < kMatcherSeconds, "took " + fixed(secs, 1) + " s");
  return c.outcome(std::to_string(kMatcherPairs) + " pairs, " + std::to_string(cells) +
                   " oracle cells, " + std::to_string(mismatches) + " mismatches, " +
                   fixed(secs, 1) + " s");
}

Outcome stemmer_conformance() {
  Checker c;
  auto run = [&](const std::string& file, auto fn, std::size_t& total) {
    std::size_t matched = 0;
    total = 0;
    for (const auto& row : testing::read_tsv(testing::fixture_path("stemmers/" + file))) {
      if (row.size() != 2) continue;
      ++total;
      matched += fn(row[0]) == row[1];
    }
    return matched;
  };
  std::size_t np = 0, ns = 0, nl = 0;
  auto mp = run("porter_nltk.tsv", [](const std::string& w) { return text::porter_stem(w); }, np);
  auto ms = run("snowball_english.tsv",
                [](const std::string& w) { return text::snowball_english_stem(w); }, ns);
  auto ml = run("lancaster.tsv", [](const std::string& w) { return text::lancaster_stem(w); }, nl);
  c.require(np > 0 && mp == np, "porter " + std::to_string(mp) + "/" + std::to_string(np));
  c.require(ns > 0 && ms == ns, "snowball " + std::to_string(ms) + "/" + std::to_string(ns));
  double lancaster = nl ? static_cast<double>(ml) / static_cast<double>(nl) : 0.0;
  c.require(nl >= kLancasterMinWords, "lancaster list has " + std::to_string(nl) + " words");
  c.require(lancaster >= kLancasterAgreement, "lancaster agreement " + fixed(lancaster, 4));
  return c.outcome("porter " + std::to_string(mp) + "/" + std::to_string(np) + ", snowball " +
                   std::to_string(ms) + "/" + std::to_string(ns) + ", lancaster " +
                   std::to_string(ml) + "/" + std::to_string(nl));
}

Outcome metrics() {
  Checker c;
  for (std::size_t i = 0; i < testing::kMetricCases.size(); ++i) {
    const auto& m = testing::kMetricCases[i];
    Alignment a, r;
    std::uint64_t n = 0;
    auto cell = [&n] {
      auto id = std::to_string(n++);
      return Correspondence{"http://s#e" + id, "http://t#e" + id, Relation::Equivalence, 1.0};
    };
    for (std::uint64_t k = 0; k < m.tp; ++k) {
      auto x = cell();
      a.insert(x);
      r.insert(x);
    }
    for (std::uint64_t k = 0; k < m.fp; ++k) a.insert(cell());
    for (std::uint64_t k = 0; k < m.fn; ++k) r.insert(cell());
    auto rep = evaluate(a, r);
    bool ok = rep.tp == m.tp && rep.fp == m.fp && rep.fn == m.fn &&
              std::abs(rep.precision - m.precision) <= kMetricTolerance &&
              std::abs(rep.recall - m.recall) <= kMetricTolerance &&
              std::abs(rep.f1 - m.f1) <= kMetricTolerance;
    c.require(ok, "case " + std::to_string(i));
  }
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<std::uint64_t> n(0, 1000);
  int disagreements = 0, checked = 0;
  while (checked < kImprovementTuples) {
    auto tp = n(rng), fp = n(rng), dtp = n(rng), dfp = n(rng);
    if (tp + fp == 0) continue;
    ++checked;
    // Distinct fractions with denominators <= 4000 differ by far more than a
    // double's rounding, so comparing the recomputed precisions is exact.
    double before = report_from_counts(tp, fp, 0).precision;
    double after = report_from_counts(tp + dtp, fp + dfp, 0).precision;
    if (improvement_condition(dtp, dfp, tp, fp) != (after > before)) ++disagreements;
  }
  c.require(disagreements == 0, std::to_string(disagreements) + " improvement disagreements");
  return c.outcome(std::to_string(testing::kMetricCases.size()) + " hand cases, " +
                   std::to_string(checked) + " random tuples, " +
                   std::to_string(disagreements) + " disagreements");
}

// ---------------------------------------------------------------------------
// Conference track.

const std::vector<std::pair<std::string, std::string>> kTrackPipelines{
    {"none", ""},
    {"T", "T"},
    {"T,N", "T,N"},
    {"T,N,R", "T,N,R"},
    {"T,N,R,S:porter", "T,N,R,S:porter"},
    {"T,N,R,S:snowball", "T,N,R,S:snowball"},
    {"T,N,R,S:lancaster", "T,N,R,S:lancaster"},
};

struct Track {
  std::string origin;
  ExperimentConfig config;
  RunSummary summary;
  std::string error;

  /// Row for (pair id, config label); nullptr when the job failed.
  const ReportRow* row(const std::string& pair, const std::string& label) const {
    for (const auto& r : summary.rows) {
      if (r.alignment_id == pair && r.config_id == label) return &r;
    }
    return nullptr;
  }
};

std::vector<PairSpec> melt_pairs(const fs::path& root) {
  std::vector<PairSpec> pairs;
  for (const auto& entry : fs::directory_iterator(root)) {
    if (!entry.is_directory()) continue;
    auto dir = entry.path();
    PairSpec p{dir.filename().string(), dir / "source.rdf", dir / "target.rdf",
               dir / "reference.rdf"};
    if (fs::exists(p.source) && fs::exists(p.target) && fs::exists(p.reference)) {
      pairs.push_back(std::move(p));
    }
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const PairSpec& a, const PairSpec& b) { return a.id < b.id; });
  return pairs;
}

Track load_track(const fs::path& root, const fs::path& work) {
  Track t;
  t.origin = root.string();
  try {
    if (fs::exists(root / "manifest.toml")) {
      t.config = ExperimentConfig::load(root / "manifest.toml");
    } else {
      t.config.track = "conference";
      t.config.track_root = root;
      t.config.pairs = melt_pairs(root);
    }
    t.config.pipelines.clear();
    for (const auto& [id, steps] : kTrackPipelines) t.config.pipelines.push_back({id, pipeline(steps)});
    t.config.repairs = {RepairMode::None, RepairMode::Logic};
    t.config.output_dir = work / "conference";
    t.config.jobs = std::max(1u, std::thread::hardware_concurrency());
    fs::remove_all(t.config.output_dir);
    t.summary = run_experiment(t.config);
    if (!t.summary.errors.empty()) t.error = t.summary.errors.front();
  } catch (const std::exception& e) {
    t.error = e.what();
  }
  return t;
}

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  auto n = v.size();
  return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2.0;
}

Outcome monotonicity(const Track& track) {
  Checker c;
  if (!track.error.empty()) return {false, track.error};
  const std::vector<std::string> chain{"T", "T,N", "T,N,R"};
  const std::vector<std::string> finals{"T,N,R,S:porter", "T,N,R,S:snowball",
                                        "T,N,R,S:lancaster", "T,N,R,L", "T,N,R,L:pos"};
  std::size_t pairs = 0, links = 0;
  auto check_pair = [&](const std::string& id, const OntologyDoc& s, const OntologyDoc& t,
                        const Alignment* reference) {
    ++pairs;
    std::vector<Alignment> steps;
    for (const auto& p : chain) steps.push_back(match_ontologies(s, t, pipeline(p)));
    auto check = [&](const Alignment& small, const Alignment& big, const std::string& what) {
      ++links;
      c.require(testing::is_subset(small, big), id + ": " + what + " not a subset");
      if (reference) {
        c.require(evaluate(small, *reference).recall <= evaluate(big, *reference).recall,
                  id + ": recall drops at " + what);
      }
    };
    check(steps[0], steps[1], "T -> T,N");
    check(steps[1], steps[2], "T,N -> T,N,R");
    for (const auto& f : finals) check(steps[2], match_ontologies(s, t, pipeline(f)), "T,N,R -> " + f);
  };
  auto source = make_doc("http://s", {{"reviews", EntityKind::ObjectProperty}});
  auto target = make_doc("http://t", {{"isReviewing", EntityKind::ObjectProperty}});
  check_pair("walkthrough", source, target, nullptr);
  for (const auto& p : track.config.pairs) {
    auto s = load_ontology(p.source);
    auto t = load_ontology(p.target);
    auto r = load_alignment(p.reference);
    check_pair(p.id, s, t, &r);
  }
  return c.outcome(std::to_string(pairs) + " pairs, " + std::to_string(links) + " subset links");
}

Outcome directional(const Track& track) {
  Checker c;
  if (!track.error.empty()) return {false, track.error};
  std::vector<double> f1_none, f1_tn;
  int better_or_equal = 0, total = 0;
  for (const auto& p : track.config.pairs) {
    const auto* none = track.row(p.id, "none");
    const auto* tn = track.row(p.id, "T,N");
    const auto* plain = track.row(p.id, "T,N,R,S:lancaster");
    const auto* logic = track.row(p.id, "T,N,R,S:lancaster+logic");
    if (!none || !tn || !plain || !logic) return {false, p.id + ": missing rows"};
    f1_none.push_back(none->report.f1);
    f1_tn.push_back(tn->report.f1);
    ++total;
    better_or_equal += logic->report.precision >= plain->report.precision;
  }
  auto m_none = median(f1_none), m_tn = median(f1_tn);
  c.require(m_tn >= m_none, "median F1 T,N " + fixed(m_tn) + " < none " + fixed(m_none));
  c.require(2 * better_or_equal > total, "logic repair kept precision on only " +
                                             std::to_string(better_or_equal) + "/" +
                                             std::to_string(total));
  return c.outcome("median F1 none " + fixed(m_none) + ", T,N " + fixed(m_tn) +
                   "; lancaster precision with logic repair >= without on " +
                   std::to_string(better_or_equal) + "/" + std::to_string(total));
}

Outcome stemmer_pair(const Track& track) {
  Checker c;
  if (!track.error.empty()) return {false, track.error};
  double worst = 0.0;
  std::string worst_at;
  for (const auto& p : track.config.pairs) {
    const auto* a = track.row(p.id, "T,N,R,S:porter");
    const auto* b = track.row(p.id, "T,N,R,S:snowball");
    if (!a || !b) return {false, p.id + ": missing rows"};
    for (auto [x, y, name] : {std::tuple{a->report.precision, b->report.precision, "P"},
                              std::tuple{a->report.recall, b->report.recall, "R"},
                              std::tuple{a->report.f1, b->report.f1, "F1"}}) {
      auto d = std::abs(x - y);
      if (d > kStemmerPairTolerance) {
        c.require(false, p.id + " " + name + " differs by " + fixed(d));
      }
      if (d > worst) {
        worst = d;
        worst_at = p.id + " " + name;
      }
    }
  }
  return c.outcome("largest porter/snowball gap " + fixed(worst) +
                   (worst_at.empty() ? "" : " (" + worst_at + ")") + ", tolerance " +
                   fixed(kStemmerPairTolerance, 2));
}

Outcome llm_budget() {
  Checker c;
  auto source = load_ontology(testing::fixture_path("conference/conference.owl"));
  auto target = load_ontology(testing::fixture_path("conference/iasted.owl"));
  source.entities.push_back({"http://conference#isReviewing", EntityKind::ObjectProperty,
                             "isReviewing", {}});
  target.entities.push_back({"http://iasted#isReviewedBy", EntityKind::ObjectProperty,
                             "isReviewedBy", {}});
  auto alignment = match_ontologies(source, target, pipeline("T,N,R,S:lancaster"));
  auto config = llm::ProviderConfig::stub();

  // Cells whose surface tokens agree need no request.
  std::set<std::pair<std::string, std::string>> questions;
  Alignment keyed;
  std::map<std::string, std::string> text1, text2;
  for (const auto& e : source.entities) text1[e.iri] = display_text(e, LabelPolicy::NameThenLabel);
  for (const auto& e : target.entities) text2[e.iri] = display_text(e, LabelPolicy::NameThenLabel);
  for (const auto& cell : alignment.cells()) {
    const auto& a = text1.at(cell.entity1);
    const auto& b = text2.at(cell.entity2);
    if (text::surface_tokens(a) == text::surface_tokens(b)) {
      keyed.insert(cell);
    } else {
      questions.emplace(a, b);
    }
  }

  llm::StubProvider first_stub, second_stub;
  llm::VerdictCache first_cache, second_cache;
  auto first = llm::repair_alignment(alignment, source, target, first_stub, config, first_cache);
  auto second = llm::repair_alignment(alignment, source, target, second_stub, config, second_cache);
  c.require(write_alignment(first.alignment) == write_alignment(second.alignment),
            "repaired alignments differ");
  c.require(llm::audit_jsonl(first.audit) == llm::audit_jsonl(second.audit), "audits differ");
  c.require(testing::is_subset(first.alignment, alignment), "repair added cells");
  c.require(first_stub.requests() == questions.size(),
            std::to_string(first_stub.requests()) + " requests for " +
                std::to_string(questions.size()) + " unconfirmed text pairs");
  c.require(testing::is_subset(keyed, first.alignment), "a key-confirmed cell was dropped");

  llm::StubProvider keyed_stub;
  llm::VerdictCache keyed_cache;
  llm::repair_alignment(keyed, source, target, keyed_stub, config, keyed_cache);
  c.require(keyed_stub.requests() == 0, "key-confirmed cells cost " +
                                            std::to_string(keyed_stub.requests()) + " requests");

  auto warm = llm::repair_alignment(alignment, source, target, first_stub, config, first_cache);
  c.require(warm.requests == 0 && first_stub.requests() == questions.size(),
            "warm cache issued " + std::to_string(warm.requests) + " requests");
  c.require(write_alignment(warm.alignment) == write_alignment(first.alignment),
            "warm run differs");
  c.require(!first.alignment.contains("http://conference#isReviewing", "http://iasted#isReviewedBy"),
            "isReviewing / isReviewedBy kept");
  return c.outcome(std::to_string(alignment.size()) + " cells, " + std::to_string(keyed.size()) +
                   " confirmed by keys, " + std::to_string(questions.size()) +
                   " requests cold, " + std::to_string(warm.requests) + " warm, " +
                   std::to_string(first.alignment.size()) + " kept");
}

Outcome density(const Track& track) {
  Checker c;
  if (!track.error.empty()) return {false, track.error};
  double worst = 0.0;
  std::string worst_at;
  std::set<std::string> pairs_seen;
  for (const auto& d : track.summary.densities) {
    pairs_seen.insert(d.alignment_id);
    c.require(d.density < kDensityLimit, d.alignment_id + " " + d.config_id + " density " +
                                             fixed(d.density));
    if (d.density > worst) {
      worst = d.density;
      worst_at = d.alignment_id + " " + d.config_id;
    }
  }
  c.require(pairs_seen.size() == track.config.pairs.size(), "densities for " +
                                                                 std::to_string(pairs_seen.size()) +
                                                                 " pairs");
  auto csv = track.config.output_dir / "reserved_density.csv";
  c.require(fs::exists(csv), "no reserved_density.csv");
  return c.outcome(std::to_string(track.summary.densities.size()) + " values over " +
                   std::to_string(pairs_seen.size()) + " pairs, max " + fixed(worst) + " (" +
                   worst_at + "), limit " + fixed(kDensityLimit, 0));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> only;
  std::string track_dir, work_dir;
  app.add_option("--only", only, "Run just these criteria");
  app.add_option("--track", track_dir, "Conference track directory");
  app.add_option("--work", work_dir, "Scratch directory");
  CLI11_PARSE(app, argc, argv);

  if (track_dir.empty()) {
    const char* env = std::getenv("OM_CONFERENCE_TRACK");
    track_dir = env && *env ? env : testing::fixture_path("conference").string();
  }
  fs::path work = work_dir.empty() ? fs::temp_directory_path() / "ontoprep-acceptance" : fs::path(work_dir);

  std::optional<Track> track;
  auto conference = [&]() -> const Track& {
    if (!track) track = load_track(track_dir, work);
    return *track;
  };

  std::vector<Criterion> criteria{
      {1, "walkthrough pair", walkthrough},
      {2, "reserved-word example", reserved_example},
      {3, "repair guarantee", repair_guarantee},
      {4, "matcher equals brute force", matcher_oracle},
      {5, "pipeline monotonicity", [&] { return monotonicity(conference()); }},
      {6, "stemmer conformance", stemmer_conformance},
      {7, "metrics", metrics},
      {8, "directional conference check", [&] { return directional(conference()); }},
      {9, "porter/snowball agreement", [&] { return stemmer_pair(conference()); }},
      {10, "llm repair determinism and budget", llm_budget},
      {11, "reserved density", [&] { return density(conference()); }},
  };

  int failed = 0;
  for (const auto& cr : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), cr.id) == only.end()) continue;
    Outcome out;
    try {
      out = cr.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    failed += !out.pass;
    std::cout << "criterion " << (cr.id < 10 ? " " : "") << cr.id << ": "
              << (out.pass ? "PASS" : "FAIL") << "  " << cr.title << " -- " << out.detail
              << std::endl;
  }
  if (track) std::cout << "conference track: " << track->origin << std::endl;
  return failed == 0 ? 0 : 1;
}
