#include "hq/report.hpp"

#include <algorithm>

#include <json.hpp>

#include "hq/csv.hpp"
#include "hq/errors.hpp"
#include "hq/util.hpp"

namespace hq {

PlatformDistribution platform_distribution(std::span<const AttributedUnit> units,
                                           const Taxonomy& taxonomy) {
  std::map<PlatformKind, std::map<int, std::int64_t>> counts;
  std::map<PlatformKind, std::int64_t> totals;
  for (const AttributedUnit& au : units) {
    ++counts[au.platform][au.unit.indicator.category];
    ++totals[au.platform];
  }
  (void)taxonomy;

  PlatformDistribution dist;
  for (const auto& [platform, per_category] : counts) {
    std::int64_t total = totals[platform];
    if (total == 0) continue;
    for (const auto& [category, n] : per_category) {
      dist.shares[platform][category] = static_cast<double>(n) / static_cast<double>(total);
    }
  }
  return dist;
}

std::string PlatformDistribution::to_csv(const Taxonomy& taxonomy) const {
  std::string out = "platform,category_id,category_name,share\n";
  for (const auto& [platform, per_category] : shares) {
    for (const auto& [category, share] : per_category) {
      const Category* c = taxonomy.find_category(category);
      out += csv_join({std::string(to_string(platform)), std::to_string(category),
                       c ? c->name : "", format_double(share)});
    }
  }
  return out;
}

std::string export_geojson(std::span<const Community> communities,
                           std::span<const CommunityScore> scores) {
  std::map<std::string, const CommunityScore*> by_id;
  for (const CommunityScore& s : scores) by_id[s.community_id] = &s;
  for (const CommunityScore& s : scores) {
    bool known = std::any_of(communities.begin(), communities.end(),
                             [&](const Community& c) { return c.id == s.community_id; });
    if (!known) {
      throw ValidationError("score references unknown community: " + s.community_id);
    }
  }

  nlohmann::json doc;
  doc["type"] = "FeatureCollection";
  doc["features"] = nlohmann::json::array();
  for (const Community& community : communities) {
    nlohmann::json feature;
    feature["type"] = "Feature";
    nlohmann::json props;
    props["id"] = community.id;
    props["name"] = community.name;
    auto it = by_id.find(community.id);
    if (it != by_id.end()) {
      props["total"] = it->second->total;
      props["coverage"] = it->second->coverage;
    } else {
      props["total"] = nullptr;
      props["coverage"] = nullptr;
    }
    feature["properties"] = std::move(props);

    // Rings are stored open; GeoJSON wants the closing vertex repeated.
    auto ring_json = [](const Ring& ring) {
      nlohmann::json jr = nlohmann::json::array();
      for (const LatLon& v : ring) jr.push_back({v.lon, v.lat});
      jr.push_back({ring.front().lon, ring.front().lat});
      return jr;
    };
    if (community.boundary.size() == 1) {
      feature["geometry"] = {{"type", "Polygon"},
                             {"coordinates", nlohmann::json::array({ring_json(community.boundary[0])})}};
    } else {
      nlohmann::json parts = nlohmann::json::array();
      for (const Ring& ring : community.boundary) {
        parts.push_back(nlohmann::json::array({ring_json(ring)}));
      }
      feature["geometry"] = {{"type", "MultiPolygon"}, {"coordinates", std::move(parts)}};
    }
    doc["features"].push_back(std::move(feature));
  }
  return doc.dump(2) + "\n";
}

std::string indicator_table_csv(const std::vector<IndicatorStats>& stats,
                                const WeightTable& weights, const Taxonomy& taxonomy) {
  if (stats.size() != weights.rows.size()) {
    throw ValidationError("indicator table: stats and weights cover different indicator sets");
  }
  std::vector<IndicatorStats> sorted = stats;
  std::sort(sorted.begin(), sorted.end(),
            [](const IndicatorStats& a, const IndicatorStats& b) { return a.id < b.id; });

  std::string out = "indicator_id,name,category,F,F_prime,I,W,mean_sentiment\n";
  for (const IndicatorStats& s : sorted) {
    const WeightTable::Row* row = weights.find(s.id);
    if (!row) {
      throw ValidationError("indicator table: weights missing indicator " + s.id.str());
    }
    const Indicator* ind = taxonomy.find(s.id);
    const Category* cat = ind ? taxonomy.find_category(ind->category) : nullptr;
    out += csv_join({s.id.str(), ind ? ind->name : "", cat ? cat->name : "",
                     std::to_string(s.frequency), format_double(row->log_frequency),
                     format_double(row->importance), format_double(row->weight),
                     format_double(s.mean_sentiment)});
  }
  return out;
}

}  // namespace hq
