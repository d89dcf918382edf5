#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hq/taxonomy.hpp"
#include "hq/types.hpp"

namespace hq {

// Per-indicator frequency and sentiment aggregates over a unit corpus.
struct IndicatorStats {
  IndicatorId id;
  std::int64_t frequency = 0;      // F_i: unit count
  double mean_sentiment = 0.0;     // mean of s
  double mean_abs_sentiment = 0.0; // mean of |s|  (default importance)
  double abs_mean_sentiment = 0.0; // |mean of s|  (alternative importance)
};

// One row per taxonomy indicator (zero-frequency rows included), sorted by id.
std::vector<IndicatorStats> indicator_stats(std::span<const EvaluationUnit> units,
                                            const Taxonomy& taxonomy);

// Natural-log dampened frequency: ln(F + 1).
double log_frequency(std::int64_t frequency);

enum class ImportanceMode { MeanAbs, AbsMean };

struct WeightConfig {
  bool use_log_frequency = true;              // false feeds raw F_i into the weights
  ImportanceMode importance = ImportanceMode::MeanAbs;
  double epsilon = 1e-12;                     // total-mass degeneracy guard, > 0
};

// Normalized indicator weights: W_i = I_i * Phi_i / sum_j I_j * Phi_j, where
// Phi is ln(F+1) or raw F per config. Covers every taxonomy indicator;
// zero-mass indicators carry weight 0.
struct WeightTable {
  struct Row {
    IndicatorId id;
    std::int64_t frequency = 0;
    double log_frequency = 0.0;
    double importance = 0.0;
    double weight = 0.0;
  };
  std::vector<Row> rows;  // sorted by id

  double weight(IndicatorId id) const;
  const Row* find(IndicatorId id) const;

  // CSV with header indicator_id,F,F_prime,I,W; doubles round-trip exactly.
  std::string to_csv() const;
  static WeightTable from_csv(const std::string& text);  // throws ParseError
};

// Throws DegenerateMass when every indicator's importance*frequency mass is
// (numerically) zero; the pipeline falls back to uniform weights with a warning.
WeightTable compute_weights(const std::vector<IndicatorStats>& stats, const WeightConfig& config);

// Uniform fallback across all indicators, used on degenerate mass.
WeightTable uniform_weights(const std::vector<IndicatorStats>& stats);

}  // namespace hq
