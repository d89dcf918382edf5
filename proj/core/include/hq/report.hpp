#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "hq/scoring.hpp"
#include "hq/taxonomy.hpp"
#include "hq/types.hpp"
#include "hq/weights.hpp"

namespace hq {

// A unit plus the platform its entry came from.
struct AttributedUnit {
  PlatformKind platform;
  EvaluationUnit unit;
};

// Per platform, each category's share of that platform's units. Platforms with
// zero units are omitted; present platforms' shares sum to 1.
struct PlatformDistribution {
  std::map<PlatformKind, std::map<int, double>> shares;

  std::string to_csv(const Taxonomy& taxonomy) const;
};

PlatformDistribution platform_distribution(std::span<const AttributedUnit> units,
                                           const Taxonomy& taxonomy);

// Choropleth-ready FeatureCollection: every community becomes one feature with
// properties {id, name, total, coverage}; communities without a score carry
// total = null. Throws ValidationError on a score whose community is unknown.
std::string export_geojson(std::span<const Community> communities,
                           std::span<const CommunityScore> scores);

// One row per indicator (id, name, category, F, F_prime, I, W, mean_sentiment),
// sorted by id. Throws ValidationError when stats and weights cover different
// indicator sets.
std::string indicator_table_csv(const std::vector<IndicatorStats>& stats,
                                const WeightTable& weights, const Taxonomy& taxonomy);

}  // namespace hq
