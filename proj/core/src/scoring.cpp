#include "hq/scoring.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "hq/errors.hpp"
#include "hq/util.hpp"

namespace hq {

CommunitySentiment community_sentiment(const std::string& community_id,
                                       std::span<const EvaluationUnit> units) {
  CommunitySentiment cs;
  cs.community_id = community_id;
  std::map<IndicatorId, std::pair<std::int64_t, std::int64_t>> acc;  // id -> (sum, n)
  for (const EvaluationUnit& u : units) {
    auto& [sum, n] = acc[u.indicator];
    sum += u.sentiment.value;
    ++n;
  }
  for (const auto& [id, sum_n] : acc) {
    cs.mean_sentiment[id] = static_cast<double>(sum_n.first) / static_cast<double>(sum_n.second);
    cs.unit_counts[id] = sum_n.second;
  }
  return cs;
}

CommunityScore total_score(const CommunitySentiment& sentiment, const WeightTable& weights) {
  CommunityScore score;
  score.community_id = sentiment.community_id;
  double total = 0.0;
  for (const WeightTable::Row& row : weights.rows) {
    auto it = sentiment.mean_sentiment.find(row.id);
    double s = it == sentiment.mean_sentiment.end() ? 0.0 : it->second;  // neutral fill
    double contribution = row.weight * std::fabs(s + 3.0);
    total += contribution;
    if (it != sentiment.mean_sentiment.end()) {
      score.contributions[row.id] = contribution;
    }
  }
  score.total = total;
  score.coverage = weights.rows.empty()
                       ? 0.0
                       : static_cast<double>(sentiment.mean_sentiment.size()) /
                             static_cast<double>(weights.rows.size());
  return score;
}

namespace {

// Linear-interpolation quantile over a sorted sample.
double quantile_sorted(const std::vector<double>& sorted, double p) {
  if (sorted.size() == 1) return sorted.front();
  double pos = p * static_cast<double>(sorted.size() - 1);
  std::size_t lo = static_cast<std::size_t>(pos);
  if (lo + 1 >= sorted.size()) return sorted.back();
  double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace

CitySummary city_summary(std::span<const CommunityScore> scores,
                         std::span<const CommunitySentiment> sentiments,
                         const Taxonomy& taxonomy, const WeightTable& weights,
                         std::size_t total_communities) {
  if (scores.empty()) throw ValidationError("city summary needs at least one community score");

  CitySummary summary;
  summary.covered_communities = scores.size();
  summary.total_communities = std::max(total_communities, scores.size());

  double sum = 0.0;
  std::vector<double> totals;
  totals.reserve(scores.size());
  for (const CommunityScore& s : scores) {
    sum += s.total;
    totals.push_back(s.total);
  }
  summary.mean_total = sum / static_cast<double>(scores.size());

  std::sort(totals.begin(), totals.end());
  for (int decile = 1; decile <= 9; ++decile) {
    summary.deciles.push_back(quantile_sorted(totals, decile / 10.0));
  }

  // Category score per community: weighted mean of |S_i + 3| over the
  // category's indicators (neutral fill), which rescales the category's slice
  // of the total back onto the 1..5 range.
  std::map<int, double> category_weight;
  for (const WeightTable::Row& row : weights.rows) {
    category_weight[row.id.category] += row.weight;
  }
  std::map<int, std::pair<double, std::size_t>> category_acc;  // id -> (sum, n)
  for (const CommunitySentiment& cs : sentiments) {
    std::map<int, double> community_cat;  // category -> sum W_i |S_i+3|
    for (const WeightTable::Row& row : weights.rows) {
      auto it = cs.mean_sentiment.find(row.id);
      double s = it == cs.mean_sentiment.end() ? 0.0 : it->second;
      community_cat[row.id.category] += row.weight * std::fabs(s + 3.0);
    }
    for (const auto& [cat, weighted] : community_cat) {
      double wc = category_weight[cat];
      if (wc <= 0.0) continue;  // zero-weight category has no defined score
      auto& [acc_sum, acc_n] = category_acc[cat];
      acc_sum += weighted / wc;
      ++acc_n;
    }
  }
  for (const auto& [cat, acc] : category_acc) {
    summary.category_ranking.emplace_back(cat, acc.first / static_cast<double>(acc.second));
  }
  std::sort(summary.category_ranking.begin(), summary.category_ranking.end(),
            [](const auto& a, const auto& b) {
              if (a.second != b.second) return a.second > b.second;
              return a.first < b.first;
            });
  (void)taxonomy;
  return summary;
}

std::string CitySummary::to_json(const Taxonomy& taxonomy) const {
  nlohmann::json doc;
  doc["mean_total"] = mean_total;
  doc["deciles"] = deciles;
  doc["covered_communities"] = covered_communities;
  doc["total_communities"] = total_communities;
  doc["category_ranking"] = nlohmann::json::array();
  for (const auto& [cat, value] : category_ranking) {
    const Category* c = taxonomy.find_category(cat);
    doc["category_ranking"].push_back(
        {{"category", cat}, {"name", c ? c->name : ""}, {"score", value}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace hq
