#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hq/types.hpp"

namespace hq {

struct PoiRecord {
  std::string name;
  LatLon location;
  std::string community_id;  // empty when the POI carries no community ref
};

struct MatchPolicy {
  double fuzzy_threshold = 0.2;  // normalized edit distance, in [0, 1]
  // Generic suffixes stripped during name normalization, longest first.
  std::vector<std::string> strip_suffixes = {
      "residential district", "neighbourhood", "neighborhood", "community",
      "compound", "estates", "estate", "courts", "court", "gardens", "garden",
      "小区", "社区", "花园", "家园",
  };

  bool valid() const { return fuzzy_threshold >= 0.0 && fuzzy_threshold <= 1.0; }
};

// GeoJSON FeatureCollection of Polygon / MultiPolygon features with a "name"
// property. MultiPolygon parts share one Community. Throws ParseError on
// malformed documents and names any non-polygon feature.
std::vector<Community> load_communities(const std::string& path);
std::vector<Community> communities_from_geojson(const std::string& geojson_text);

// CSV columns: name,lat,lon[,community_id].
std::vector<PoiRecord> load_pois(const std::string& path);

// Ray casting, boundary-inclusive. When several communities contain the point
// the smallest total polygon area wins (nested AOIs resolve to the inner one);
// equal areas break toward the smaller community id.
std::optional<std::string> point_in_community(LatLon point, std::span<const Community> communities);

bool point_in_ring(LatLon point, const Ring& ring);
double ring_area(const Ring& ring);  // planar shoelace, absolute value

// Levenshtein distance over code points divided by the longer length; 0 for
// two empty strings.
double normalized_edit_distance(std::string_view a, std::string_view b);

// Lowercase, strip whitespace/punctuation, drop one generic suffix.
std::string normalize_place_name(std::string_view name, const MatchPolicy& policy);

// Exact normalized match first, then the best fuzzy candidate within the
// threshold; ties break toward the lexicographically smallest community id.
std::optional<std::string> match_name(std::string_view name, std::span<const Community> communities,
                                      const MatchPolicy& policy);

// Coordinate -> polygon test; community-name hint -> fuzzy match against
// community names, then against POIs that carry a community ref; else nothing.
struct Assignment {
  std::string community_id;
  enum class Method { Coordinate, CommunityName, PoiName } method = Method::Coordinate;
};

std::string_view to_string(Assignment::Method method);

class CommunityIndex {
 public:
  CommunityIndex(std::vector<Community> communities, std::vector<PoiRecord> pois,
                 MatchPolicy policy);

  const std::vector<Community>& communities() const { return communities_; }

  std::optional<Assignment> resolve(const GeoHint& hint) const;

 private:
  std::vector<Community> communities_;
  std::vector<PoiRecord> pois_;
  MatchPolicy policy_;
};

}  // namespace hq
