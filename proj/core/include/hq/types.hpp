#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hq {

// ---------- platforms ----------

enum class PlatformKind { ReviewSite, Microblog, GovBoard };

struct Platform {
  PlatformKind kind = PlatformKind::ReviewSite;
  std::string label;  // free-form source label, e.g. "dianping"

  friend bool operator==(const Platform&, const Platform&) = default;
};

std::string_view to_string(PlatformKind kind);
std::optional<PlatformKind> platform_kind_from_string(std::string_view s);

// ---------- geo hint ----------

// Where an entry claims to be: a WGS-84 coordinate, a community name, or nothing.
struct GeoHint {
  enum class Kind { None, Coordinate, CommunityName };

  Kind kind = Kind::None;
  double lat = 0.0;
  double lon = 0.0;
  std::string community_name;

  static GeoHint none() { return GeoHint{}; }
  static GeoHint coordinate(double lat, double lon) {
    GeoHint h;
    h.kind = Kind::Coordinate;
    h.lat = lat;
    h.lon = lon;
    return h;
  }
  static GeoHint name(std::string n) {
    GeoHint h;
    h.kind = Kind::CommunityName;
    h.community_name = std::move(n);
    return h;
  }

  bool valid() const {
    if (kind != Kind::Coordinate) return true;
    return lat >= -90.0 && lat <= 90.0 && lon >= -180.0 && lon <= 180.0;
  }

  friend bool operator==(const GeoHint&, const GeoHint&) = default;
};

// ---------- sentiment ----------

// Five-point sentiment: -2 strongly negative .. +2 strongly positive.
struct SentimentScore {
  int value = 0;

  static constexpr int kMin = -2;
  static constexpr int kMax = 2;
  static bool in_range(int v) { return v >= kMin && v <= kMax; }
  bool valid() const { return in_range(value); }

  friend auto operator<=>(const SentimentScore&, const SentimentScore&) = default;
};

// ---------- indicators ----------

// Dotted "category.indicator" id, e.g. "4.1".
struct IndicatorId {
  int category = 0;
  int indicator = 0;

  bool valid() const { return category >= 1 && indicator >= 1; }
  std::string str() const;
  static std::optional<IndicatorId> parse(std::string_view s);

  friend auto operator<=>(const IndicatorId&, const IndicatorId&) = default;
};

// ---------- entries and units ----------

struct Entry {
  std::string id;
  Platform platform;
  std::int64_t timestamp = 0;  // epoch seconds, UTC
  std::string text;
  GeoHint geo;
};

// One structured observation: (object, content, indicator, sentiment).
struct EvaluationUnit {
  std::string entry_id;
  std::string object_text;
  std::string content_text;
  IndicatorId indicator;
  SentimentScore sentiment;

  friend bool operator==(const EvaluationUnit&, const EvaluationUnit&) = default;
};

// ---------- communities ----------

struct LatLon {
  double lat = 0.0;
  double lon = 0.0;

  friend bool operator==(const LatLon&, const LatLon&) = default;
};

using Ring = std::vector<LatLon>;

// A residential community: one or more boundary rings (multipolygon parts
// share the community id). Rings are stored without the repeated closing vertex.
struct Community {
  std::string id;
  std::string name;
  std::vector<Ring> boundary;
  std::optional<LatLon> centroid;
};

}  // namespace hq
