#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hq {

// ---------- strings ----------

std::string trim(std::string_view s);
std::string lower_ascii(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);

// Maximal runs of non-space, non-punctuation code points. ASCII letters are
// lowercased so lexicon lookups are case-insensitive.
std::vector<std::string> tokenize(std::string_view text);

// ---------- UTF-8 ----------

// Invalid bytes decode as U+FFFD, one per byte.
std::vector<char32_t> utf8_decode(std::string_view s);
std::string utf8_encode(const std::vector<char32_t>& cps);
std::size_t utf8_length(std::string_view s);

// ---------- civil time ----------

struct CivilDate {
  int year = 1970;
  int month = 1;  // 1..12
  int day = 1;    // 1..31
  auto operator<=>(const CivilDate&) const = default;
};

bool is_valid_date(const CivilDate& d);
std::int64_t days_from_civil(const CivilDate& d);
CivilDate civil_from_days(std::int64_t days);
CivilDate utc_date(std::int64_t epoch_seconds);

// "YYYY-MM-DD" -> date.
std::optional<CivilDate> parse_date(std::string_view s);

// Accepts "YYYY-MM-DD HH:MM[:SS]" and ISO-8601 "YYYY-MM-DDTHH:MM[:SS][Z|+HH:MM].
// A trailing zone designator wins; otherwise the value is shifted by
// local_utc_offset_minutes to UTC.
std::optional<std::int64_t> parse_timestamp(std::string_view s, int local_utc_offset_minutes);

// Epoch seconds -> "YYYY-MM-DDTHH:MM:SSZ".
std::string format_utc(std::int64_t epoch_seconds);

// ---------- numbers ----------

// Shortest round-trip decimal form, via std::to_chars. Stable across runs.
std::string format_double(double v);
std::optional<double> parse_double(std::string_view s);
std::optional<std::int64_t> parse_int(std::string_view s);

// ---------- files ----------

std::string read_file(const std::string& path);          // throws ParseError if unreadable
void write_file(const std::string& path, std::string_view content);
std::vector<std::string> read_lines(const std::string& path);

// ---------- parallel ----------

// Applies fn to every index in [0, n) on `threads` workers and keeps results
// in index order, so output is independent of scheduling.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace hq
