#include "hq/geo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include <json.hpp>

#include "hq/csv.hpp"
#include "hq/errors.hpp"
#include "hq/util.hpp"

namespace hq {

namespace {

Ring ring_from_coords(const nlohmann::json& coords, const std::string& feature_name) {
  Ring ring;
  for (const auto& pt : coords) {
    if (!pt.is_array() || pt.size() < 2) {
      throw ParseError("feature '" + feature_name + "': bad coordinate pair");
    }
    // GeoJSON order is [lon, lat].
    ring.push_back(LatLon{pt[1].get<double>(), pt[0].get<double>()});
  }
  // Normalize away the repeated closing vertex.
  if (ring.size() >= 2 && ring.front() == ring.back()) ring.pop_back();
  if (ring.size() < 3) {
    throw ParseError("feature '" + feature_name + "': ring has fewer than 3 distinct vertices");
  }
  return ring;
}

}  // namespace

std::vector<Community> communities_from_geojson(const std::string& geojson_text) {
  nlohmann::json doc = nlohmann::json::parse(geojson_text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) throw ParseError("GeoJSON: invalid JSON");
  if (doc.value("type", "") != "FeatureCollection" || !doc.contains("features")) {
    throw ParseError("GeoJSON: expected a FeatureCollection with features");
  }

  std::vector<Community> communities;
  std::size_t index = 0;
  for (const auto& feature : doc["features"]) {
    ++index;
    std::string name;
    if (feature.contains("properties") && feature["properties"].is_object()) {
      name = feature["properties"].value("name", "");
    }
    std::string label = name.empty() ? "#" + std::to_string(index) : name;
    if (!feature.contains("geometry") || !feature["geometry"].is_object()) {
      throw ParseError("feature '" + label + "': missing geometry");
    }
    const auto& geom = feature["geometry"];
    std::string type = geom.value("type", "");

    Community community;
    community.id = feature.contains("properties") && feature["properties"].contains("id")
                       ? feature["properties"]["id"].get<std::string>()
                       : "c" + std::to_string(index);
    community.name = name;

    if (type == "Polygon") {
      // Outer ring only; interior holes are out of scope for AOI data.
      if (geom["coordinates"].empty()) throw ParseError("feature '" + label + "': empty polygon");
      community.boundary.push_back(ring_from_coords(geom["coordinates"][0], label));
    } else if (type == "MultiPolygon") {
      for (const auto& polygon : geom["coordinates"]) {
        if (polygon.empty()) continue;
        community.boundary.push_back(ring_from_coords(polygon[0], label));
      }
      if (community.boundary.empty()) {
        throw ParseError("feature '" + label + "': empty multipolygon");
      }
    } else {
      throw ParseError("feature '" + label + "': geometry type '" + type +
                       "' is not Polygon or MultiPolygon");
    }

    if (feature["properties"].contains("centroid")) {
      const auto& c = feature["properties"]["centroid"];
      if (c.is_array() && c.size() == 2) {
        community.centroid = LatLon{c[1].get<double>(), c[0].get<double>()};
      }
    }
    communities.push_back(std::move(community));
  }
  std::set<std::string> seen;
  for (const Community& c : communities) {
    if (!seen.insert(c.id).second) {
      throw ParseError("GeoJSON: duplicate community id '" + c.id + "'");
    }
  }
  return communities;
}

std::vector<Community> load_communities(const std::string& path) {
  return communities_from_geojson(read_file(path));
}

std::vector<PoiRecord> load_pois(const std::string& path) {
  CsvTable table = read_csv(path, /*has_header=*/true);
  auto column = [&](std::string_view name) -> int {
    for (std::size_t i = 0; i < table.header.size(); ++i) {
      if (table.header[i] == name) return static_cast<int>(i);
    }
    return -1;
  };
  int name_col = column("name");
  int lat_col = column("lat");
  int lon_col = column("lon");
  int community_col = column("community_id");
  if (name_col < 0 || lat_col < 0 || lon_col < 0) {
    throw ParseError(path + ": POI CSV needs name, lat and lon columns");
  }

  std::vector<PoiRecord> pois;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    if (row.size() != table.header.size()) {
      throw ParseError(path + ": row " + std::to_string(r + 1) + " has wrong column count");
    }
    PoiRecord poi;
    poi.name = row[name_col];
    auto lat = parse_double(row[lat_col]);
    auto lon = parse_double(row[lon_col]);
    if (!lat || !lon || *lat < -90 || *lat > 90 || *lon < -180 || *lon > 180) {
      throw ParseError(path + ": row " + std::to_string(r + 1) + " has invalid coordinates");
    }
    poi.location = LatLon{*lat, *lon};
    if (community_col >= 0) poi.community_id = trim(row[community_col]);
    pois.push_back(std::move(poi));
  }
  return pois;
}

namespace {

bool on_segment(LatLon p, LatLon a, LatLon b) {
  double cross = (b.lon - a.lon) * (p.lat - a.lat) - (b.lat - a.lat) * (p.lon - a.lon);
  if (cross != 0.0) return false;
  return p.lat >= std::min(a.lat, b.lat) && p.lat <= std::max(a.lat, b.lat) &&
         p.lon >= std::min(a.lon, b.lon) && p.lon <= std::max(a.lon, b.lon);
}

}  // namespace

bool point_in_ring(LatLon point, const Ring& ring) {
  bool inside = false;
  std::size_t n = ring.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const LatLon& a = ring[j];
    const LatLon& b = ring[i];
    if (on_segment(point, a, b)) return true;  // boundary counts as inside
    bool crosses = (b.lat > point.lat) != (a.lat > point.lat);
    if (crosses) {
      double x = (a.lon - b.lon) * (point.lat - b.lat) / (a.lat - b.lat) + b.lon;
      if (point.lon < x) inside = !inside;
    }
  }
  return inside;
}

double ring_area(const Ring& ring) {
  double twice = 0.0;
  std::size_t n = ring.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    twice += ring[j].lon * ring[i].lat - ring[i].lon * ring[j].lat;
  }
  return std::fabs(twice) / 2.0;
}

std::optional<std::string> point_in_community(LatLon point,
                                              std::span<const Community> communities) {
  const Community* best = nullptr;
  double best_area = std::numeric_limits<double>::infinity();
  for (const Community& community : communities) {
    bool contains = false;
    double area = 0.0;
    for (const Ring& ring : community.boundary) {
      area += ring_area(ring);
      if (!contains && point_in_ring(point, ring)) contains = true;
    }
    if (!contains) continue;
    if (!best || area < best_area || (area == best_area && community.id < best->id)) {
      best = &community;
      best_area = area;
    }
  }
  if (!best) return std::nullopt;
  return best->id;
}

double normalized_edit_distance(std::string_view a, std::string_view b) {
  std::vector<char32_t> ca = utf8_decode(a);
  std::vector<char32_t> cb = utf8_decode(b);
  std::size_t n = ca.size(), m = cb.size();
  if (n == 0 && m == 0) return 0.0;
  if (n == 0 || m == 0) return 1.0;

  std::vector<std::size_t> prev(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= m; ++j) {
      std::size_t sub = prev[j - 1] + (ca[i - 1] == cb[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return static_cast<double>(prev[m]) / static_cast<double>(std::max(n, m));
}

namespace {

// Lowercase and drop whitespace/ASCII punctuation; CJK text passes through.
std::string flatten_name(std::string_view name) {
  std::vector<char32_t> cps = utf8_decode(lower_ascii(name));
  std::vector<char32_t> kept;
  kept.reserve(cps.size());
  for (char32_t cp : cps) {
    if (cp < 0x80) {
      unsigned char c = static_cast<unsigned char>(cp);
      if (std::isalnum(c)) kept.push_back(cp);
    } else if (cp != 0x3000) {
      kept.push_back(cp);
    }
  }
  return utf8_encode(kept);
}

}  // namespace

std::string normalize_place_name(std::string_view name, const MatchPolicy& policy) {
  std::string flat = flatten_name(name);

  // Longest suffix first, one strip only.
  std::vector<std::string> suffixes;
  suffixes.reserve(policy.strip_suffixes.size());
  for (const std::string& s : policy.strip_suffixes) suffixes.push_back(flatten_name(s));
  std::sort(suffixes.begin(), suffixes.end(),
            [](const std::string& a, const std::string& b) { return a.size() > b.size(); });
  for (const std::string& suffix : suffixes) {
    if (suffix.empty() || flat.size() <= suffix.size()) continue;
    if (flat.compare(flat.size() - suffix.size(), suffix.size(), suffix) == 0) {
      flat.erase(flat.size() - suffix.size());
      break;
    }
  }
  return flat;
}

std::optional<std::string> match_name(std::string_view name, std::span<const Community> communities,
                                      const MatchPolicy& policy) {
  std::string needle = normalize_place_name(name, policy);
  if (needle.empty()) return std::nullopt;

  const Community* exact = nullptr;
  for (const Community& c : communities) {
    if (normalize_place_name(c.name, policy) == needle) {
      if (!exact || c.id < exact->id) exact = &c;
    }
  }
  if (exact) return exact->id;

  const Community* best = nullptr;
  double best_distance = std::numeric_limits<double>::infinity();
  for (const Community& c : communities) {
    double d = normalized_edit_distance(needle, normalize_place_name(c.name, policy));
    if (d < best_distance || (d == best_distance && best && c.id < best->id)) {
      best = &c;
      best_distance = d;
    }
  }
  if (best && best_distance <= policy.fuzzy_threshold) return best->id;
  return std::nullopt;
}

std::string_view to_string(Assignment::Method method) {
  switch (method) {
    case Assignment::Method::Coordinate: return "coordinate";
    case Assignment::Method::CommunityName: return "community_name";
    case Assignment::Method::PoiName: return "poi_name";
  }
  return "unknown";
}

CommunityIndex::CommunityIndex(std::vector<Community> communities, std::vector<PoiRecord> pois,
                               MatchPolicy policy)
    : communities_(std::move(communities)), pois_(std::move(pois)), policy_(std::move(policy)) {
  if (!policy_.valid()) throw ConfigError("match policy: fuzzy_threshold must lie in [0, 1]");
}

std::optional<Assignment> CommunityIndex::resolve(const GeoHint& hint) const {
  switch (hint.kind) {
    case GeoHint::Kind::None:
      return std::nullopt;
    case GeoHint::Kind::Coordinate: {
      auto id = point_in_community(LatLon{hint.lat, hint.lon}, communities_);
      if (id) return Assignment{*id, Assignment::Method::Coordinate};
      return std::nullopt;
    }
    case GeoHint::Kind::CommunityName: {
      auto id = match_name(hint.community_name, communities_, policy_);
      if (id) return Assignment{*id, Assignment::Method::CommunityName};

      // POIs that carry a community ref back the name lookup.
      std::string needle = normalize_place_name(hint.community_name, policy_);
      if (needle.empty()) return std::nullopt;
      const PoiRecord* best = nullptr;
      double best_distance = std::numeric_limits<double>::infinity();
      for (const PoiRecord& poi : pois_) {
        if (poi.community_id.empty()) continue;
        double d = normalized_edit_distance(needle, normalize_place_name(poi.name, policy_));
        bool better = d < best_distance ||
                      (d == best_distance && best && poi.community_id < best->community_id);
        if (better) {
          best = &poi;
          best_distance = d;
        }
      }
      if (best && best_distance <= policy_.fuzzy_threshold) {
        return Assignment{best->community_id, Assignment::Method::PoiName};
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace hq
