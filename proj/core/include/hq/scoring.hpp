#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hq/taxonomy.hpp"
#include "hq/types.hpp"
#include "hq/weights.hpp"

namespace hq {

// Mean unit sentiment per mentioned indicator within one community. Indicators
// without units stay absent here and are filled as neutral (0) at scoring time.
struct CommunitySentiment {
  std::string community_id;
  std::map<IndicatorId, double> mean_sentiment;      // mentioned indicators only
  std::map<IndicatorId, std::int64_t> unit_counts;
};

CommunitySentiment community_sentiment(const std::string& community_id,
                                       std::span<const EvaluationUnit> units);

// 1..5 total for one community: sum_i W_i * |S_i + 3| with neutral fill.
struct CommunityScore {
  std::string community_id;
  double total = 3.0;
  std::map<IndicatorId, double> contributions;  // W_i * |S_i + 3|, mentioned indicators
  double coverage = 0.0;                        // mentioned / taxonomy indicator count
};

CommunityScore total_score(const CommunitySentiment& sentiment, const WeightTable& weights);

// Citywide aggregate over covered communities.
struct CitySummary {
  double mean_total = 0.0;
  std::vector<double> deciles;  // 10%..90%, 9 interpolated quantiles
  // Category score = weighted category mean of |S_i + 3|, averaged over
  // communities; descending, so front() is the best-performing category.
  std::vector<std::pair<int, double>> category_ranking;
  std::size_t covered_communities = 0;
  std::size_t total_communities = 0;

  std::string to_json(const Taxonomy& taxonomy) const;
};

// Throws ValidationError on an empty score list.
CitySummary city_summary(std::span<const CommunityScore> scores,
                         std::span<const CommunitySentiment> sentiments,
                         const Taxonomy& taxonomy, const WeightTable& weights,
                         std::size_t total_communities);

}  // namespace hq
