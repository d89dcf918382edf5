#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hq/extract.hpp"
#include "hq/taxonomy.hpp"
#include "hq/types.hpp"

namespace hq {

// Manually annotated truth for one entry.
struct GoldAnnotation {
  Entry entry;
  bool relevant = false;
  std::vector<EvaluationUnit> units;
};

// JSON-lines, one object per line:
//   {"entry": {"id","platform","time","text"}, "relevant": bool, "units": [...]}
std::vector<GoldAnnotation> load_gold(const std::string& path);
std::string gold_to_jsonl_line(const GoldAnnotation& gold);

// Greedy one-to-one unit matching: exact indicator first (gold order, then
// prediction order), remaining pairs on same category.
struct UnitMatch {
  std::size_t gold_index = 0;
  std::size_t pred_index = 0;
  bool indicator_exact = false;  // false -> matched at category level only
};

struct Alignment {
  std::vector<UnitMatch> matches;
  std::vector<std::size_t> unmatched_gold;  // misses
  std::vector<std::size_t> unmatched_pred;  // false positives
};

Alignment align_units(std::span<const EvaluationUnit> predicted,
                      std::span<const EvaluationUnit> gold);

struct MetricsReport {
  double relevance_accuracy = 0.0;
  double object_accuracy = 0.0;     // gold units matched at least at category level
  double indicator_accuracy = 0.0;  // gold units matched on exact indicator
  double sentiment_exact_accuracy = 0.0;       // over indicator-matched pairs
  double sentiment_within_one_accuracy = 0.0;  // |pred - gold| <= 1, same pairs
  double unit_exact_accuracy = 0.0;            // indicator + exact sentiment, over gold units

  std::array<std::array<std::int64_t, 2>, 2> relevance_confusion{};   // [gold][pred]
  std::array<std::array<std::int64_t, 5>, 5> sentiment_confusion{};   // classes -2..2

  std::size_t entries = 0;
  std::size_t gold_units = 0;
  std::size_t predicted_units = 0;
  std::size_t indicator_matched = 0;
  std::size_t category_matched = 0;  // category-level-only matches
};

// Throws ValidationError on empty input. Vacuous ratios (0/0) report 1.0 so a
// backend replayed against its own output always scores exactly 1.0.
MetricsReport compute_metrics(
    std::span<const std::pair<ExtractionResult, GoldAnnotation>> results);

struct BackendColumn {
  std::string name;
  bool complete = true;  // false when predictions were missing for some entries
  std::size_t covered_entries = 0;
  MetricsReport metrics;
};

struct ComparisonTable {
  std::vector<BackendColumn> columns;

  std::string to_csv() const;
  std::string to_text() const;  // aligned fixed-width table
  std::string to_json() const;
};

// Runs every backend over the gold corpus. A backend that cannot produce a
// prediction for an entry (MissingPrediction) gets an incomplete column over
// the entries it covered; other columns are unaffected.
ComparisonTable compare_backends(std::span<const GoldAnnotation> gold, const Taxonomy& taxonomy,
                                 const std::vector<const ExtractionBackend*>& backends);

}  // namespace hq
