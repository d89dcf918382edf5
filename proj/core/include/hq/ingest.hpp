#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hq/types.hpp"
#include "hq/util.hpp"

namespace hq {

// One logical input row, fields kept verbatim for audit.
struct RawRecord {
  Platform platform;
  std::vector<std::pair<std::string, std::string>> fields;  // ordered, as in source
  std::size_t row = 0;  // 1-based data row (header excluded for CSV)

  const std::string* find(std::string_view key) const;
};

struct ParseReject {
  std::size_t row = 0;
  std::string reason;
};

struct ParseOutput {
  std::vector<RawRecord> records;
  std::vector<ParseReject> rejects;
};

// Reads a platform export. ".csv" means UTF-8 CSV with a header row; anything
// else is treated as JSON-lines with the same field names (id, time, text,
// lat, lon, community). Malformed rows land in `rejects`, never dropped
// silently. Throws ParseError for unreadable or structurally hopeless files.
ParseOutput parse_records(const Platform& platform, const std::string& path);

struct CleaningConfig {
  bool strip_urls = true;
  bool collapse_whitespace = true;
  bool strip_emoji = false;
  std::size_t min_length = 5;     // code points, after cleaning
  std::size_t max_length = 5000;  // code points, after cleaning

  bool valid() const { return min_length > 0 && min_length <= max_length; }
};

std::string clean_text(std::string_view text, const CleaningConfig& config);

// Entry or a rejection reason ("missing_id", "missing_text", "bad_timestamp",
// "too_short", "too_long", "bad_geo").
struct NormalizeResult {
  std::optional<Entry> entry;
  std::string reject_reason;

  bool ok() const { return entry.has_value(); }
};

// Platform exports carry Beijing local wall time; `utc_offset_minutes`
// (default UTC+8) shifts zone-less timestamps to UTC. Explicit Z / +HH:MM
// suffixes are honored as written.
NormalizeResult normalize(const RawRecord& record, const CleaningConfig& config,
                          int utc_offset_minutes = 480);

struct DedupResult {
  std::vector<Entry> kept;  // stable order: ascending entry id
  std::size_t dropped = 0;
};

// Duplicate key is (platform kind, cleaned text); the earliest occurrence by
// (timestamp, id) survives. Cross-platform duplicates are kept.
DedupResult dedup(std::vector<Entry> entries);

// Keeps entries whose UTC date lies in [start, end], both inclusive.
// Throws ValidationError when start > end.
std::vector<Entry> filter_by_date(std::vector<Entry> entries, const CivilDate& start,
                                  const CivilDate& end);

}  // namespace hq
