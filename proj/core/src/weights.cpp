#include "hq/weights.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>

#include "hq/csv.hpp"
#include "hq/errors.hpp"
#include "hq/util.hpp"

namespace hq {

std::vector<IndicatorStats> indicator_stats(std::span<const EvaluationUnit> units,
                                            const Taxonomy& taxonomy) {
  struct Accum {
    std::int64_t n = 0;
    std::int64_t sum = 0;
    std::int64_t abs_sum = 0;
  };
  std::map<IndicatorId, Accum> acc;
  for (const EvaluationUnit& u : units) {
    Accum& a = acc[u.indicator];
    ++a.n;
    a.sum += u.sentiment.value;
    a.abs_sum += std::abs(u.sentiment.value);
  }

  std::vector<IndicatorStats> stats;
  stats.reserve(taxonomy.indicators().size());
  for (const Indicator& ind : taxonomy.indicators()) {
    IndicatorStats s;
    s.id = ind.id;
    auto it = acc.find(ind.id);
    if (it != acc.end() && it->second.n > 0) {
      const Accum& a = it->second;
      s.frequency = a.n;
      s.mean_sentiment = static_cast<double>(a.sum) / static_cast<double>(a.n);
      s.mean_abs_sentiment = static_cast<double>(a.abs_sum) / static_cast<double>(a.n);
      s.abs_mean_sentiment = std::fabs(s.mean_sentiment);
    }
    stats.push_back(s);
  }
  return stats;
}

double log_frequency(std::int64_t frequency) {
  return std::log(static_cast<double>(frequency) + 1.0);
}

double WeightTable::weight(IndicatorId id) const {
  const Row* row = find(id);
  return row ? row->weight : 0.0;
}

const WeightTable::Row* WeightTable::find(IndicatorId id) const {
  auto it = std::lower_bound(rows.begin(), rows.end(), id,
                             [](const Row& r, IndicatorId v) { return r.id < v; });
  return (it != rows.end() && it->id == id) ? &*it : nullptr;
}

std::string WeightTable::to_csv() const {
  std::string out = "indicator_id,F,F_prime,I,W\n";
  for (const Row& r : rows) {
    out += csv_join({r.id.str(), std::to_string(r.frequency), format_double(r.log_frequency),
                     format_double(r.importance), format_double(r.weight)});
  }
  return out;
}

WeightTable WeightTable::from_csv(const std::string& text) {
  CsvTable table = parse_csv(text, /*has_header=*/true);
  if (table.header != std::vector<std::string>{"indicator_id", "F", "F_prime", "I", "W"}) {
    throw ParseError("weight table: unexpected CSV header");
  }
  WeightTable wt;
  for (const auto& row : table.rows) {
    if (row.size() != 5) throw ParseError("weight table: wrong column count");
    Row r;
    auto id = IndicatorId::parse(row[0]);
    auto f = parse_int(row[1]);
    auto fp = parse_double(row[2]);
    auto imp = parse_double(row[3]);
    auto w = parse_double(row[4]);
    if (!id || !f || !fp || !imp || !w) {
      throw ParseError("weight table: bad row for id '" + row[0] + "'");
    }
    r.id = *id;
    r.frequency = *f;
    r.log_frequency = *fp;
    r.importance = *imp;
    r.weight = *w;
    wt.rows.push_back(r);
  }
  std::sort(wt.rows.begin(), wt.rows.end(), [](const Row& a, const Row& b) { return a.id < b.id; });
  return wt;
}

WeightTable compute_weights(const std::vector<IndicatorStats>& stats, const WeightConfig& config) {
  if (config.epsilon <= 0) throw ConfigError("weights.epsilon must be > 0");

  WeightTable table;
  table.rows.reserve(stats.size());
  double total_mass = 0.0;
  for (const IndicatorStats& s : stats) {
    WeightTable::Row row;
    row.id = s.id;
    row.frequency = s.frequency;
    row.log_frequency = log_frequency(s.frequency);
    row.importance = config.importance == ImportanceMode::MeanAbs ? s.mean_abs_sentiment
                                                                  : s.abs_mean_sentiment;
    double phi = config.use_log_frequency ? row.log_frequency : static_cast<double>(s.frequency);
    row.weight = row.importance * phi;  // unnormalized mass, normalized below
    total_mass += row.weight;
    table.rows.push_back(row);
  }
  if (total_mass <= config.epsilon) {
    throw DegenerateMass("all indicators have zero importance*frequency mass");
  }
  for (auto& row : table.rows) row.weight /= total_mass;
  std::sort(table.rows.begin(), table.rows.end(),
            [](const WeightTable::Row& a, const WeightTable::Row& b) { return a.id < b.id; });
  return table;
}

WeightTable uniform_weights(const std::vector<IndicatorStats>& stats) {
  WeightTable table;
  if (stats.empty()) return table;
  double w = 1.0 / static_cast<double>(stats.size());
  for (const IndicatorStats& s : stats) {
    WeightTable::Row row;
    row.id = s.id;
    row.frequency = s.frequency;
    row.log_frequency = log_frequency(s.frequency);
    row.importance = s.mean_abs_sentiment;
    row.weight = w;
    table.rows.push_back(row);
  }
  std::sort(table.rows.begin(), table.rows.end(),
            [](const WeightTable::Row& a, const WeightTable::Row& b) { return a.id < b.id; });
  return table;
}

}  // namespace hq
