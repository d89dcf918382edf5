#include "hq/types.hpp"

#include <cstdio>

#include "hq/util.hpp"

namespace hq {

std::string_view to_string(PlatformKind kind) {
  switch (kind) {
    case PlatformKind::ReviewSite: return "review_site";
    case PlatformKind::Microblog: return "microblog";
    case PlatformKind::GovBoard: return "gov_board";
  }
  return "unknown";
}

std::optional<PlatformKind> platform_kind_from_string(std::string_view s) {
  if (s == "review_site") return PlatformKind::ReviewSite;
  if (s == "microblog") return PlatformKind::Microblog;
  if (s == "gov_board") return PlatformKind::GovBoard;
  return std::nullopt;
}

std::string IndicatorId::str() const {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%d.%d", category, indicator);
  return buf;
}

std::optional<IndicatorId> IndicatorId::parse(std::string_view s) {
  auto dot = s.find('.');
  if (dot == std::string_view::npos) return std::nullopt;
  auto c = parse_int(s.substr(0, dot));
  auto i = parse_int(s.substr(dot + 1));
  if (!c || !i) return std::nullopt;
  IndicatorId id{static_cast<int>(*c), static_cast<int>(*i)};
  if (!id.valid()) return std::nullopt;
  // Reject forms that would not round-trip ("04.1", "4.01", "4. 1").
  if (id.str() != trim(s)) return std::nullopt;
  return id;
}

}  // namespace hq
