#include "hq/ingest.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <json.hpp>

#include "hq/csv.hpp"
#include "hq/errors.hpp"

namespace hq {

const std::string* RawRecord::find(std::string_view key) const {
  for (const auto& [k, v] : fields) {
    if (k == key) return &v;
  }
  return nullptr;
}

namespace {

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

ParseOutput parse_csv_records(const Platform& platform, const std::string& path) {
  CsvTable table = read_csv(path, /*has_header=*/true);
  if (table.header.empty()) throw ParseError(path + ": empty header row");

  ParseOutput out;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    if (row.size() != table.header.size()) {
      out.rejects.push_back({r + 1, "column count mismatch"});
      continue;
    }
    RawRecord rec;
    rec.platform = platform;
    rec.row = r + 1;
    for (std::size_t c = 0; c < row.size(); ++c) {
      rec.fields.emplace_back(table.header[c], row[c]);
    }
    out.records.push_back(std::move(rec));
  }
  return out;
}

ParseOutput parse_jsonl_records(const Platform& platform, const std::string& path) {
  ParseOutput out;
  std::vector<std::string> lines = read_lines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (trim(line).empty()) continue;
    nlohmann::json doc = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded() || !doc.is_object()) {
      out.rejects.push_back({i + 1, "invalid JSON object"});
      continue;
    }
    RawRecord rec;
    rec.platform = platform;
    rec.row = i + 1;
    for (const auto& [key, value] : doc.items()) {
      std::string v;
      if (value.is_string()) v = value.get<std::string>();
      else if (!value.is_null()) v = value.dump();
      rec.fields.emplace_back(key, std::move(v));
    }
    out.records.push_back(std::move(rec));
  }
  return out;
}

}  // namespace

ParseOutput parse_records(const Platform& platform, const std::string& path) {
  if (ends_with(path, ".csv")) return parse_csv_records(platform, path);
  if (ends_with(path, ".jsonl") || ends_with(path, ".ndjson")) {
    return parse_jsonl_records(platform, path);
  }
  // Sniff: a file whose first non-space byte is '{' is JSON-lines.
  std::string head = read_file(path);
  std::size_t p = head.find_first_not_of(" \t\r\n");
  if (p != std::string::npos && head[p] == '{') return parse_jsonl_records(platform, path);
  if (head.find(',') != std::string::npos) return parse_csv_records(platform, path);
  throw ParseError(path + ": unknown platform export format");
}

namespace {

bool is_emoji(char32_t cp) {
  return (cp >= 0x1F000 && cp <= 0x1FAFF) ||  // pictographs, emoticons, symbols
         (cp >= 0x2600 && cp <= 0x27BF) ||    // misc symbols, dingbats
         (cp >= 0xFE00 && cp <= 0xFE0F) ||    // variation selectors
         cp == 0x200D;                        // zero-width joiner
}

bool is_space_cp(char32_t cp) {
  return cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r' || cp == '\f' || cp == '\v' ||
         cp == 0x3000 || cp == 0x00A0;
}

std::string strip_urls(const std::string& text) {
  std::string out;
  std::size_t i = 0;
  auto matches_at = [&](std::string_view prefix) {
    return text.compare(i, prefix.size(), prefix) == 0;
  };
  while (i < text.size()) {
    if (matches_at("http://") || matches_at("https://") || matches_at("www.")) {
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      continue;
    }
    out.push_back(text[i]);
    ++i;
  }
  return out;
}

}  // namespace

std::string clean_text(std::string_view text, const CleaningConfig& config) {
  std::string work(text);
  if (config.strip_urls) work = strip_urls(work);

  std::vector<char32_t> cps = utf8_decode(work);
  if (config.strip_emoji) {
    cps.erase(std::remove_if(cps.begin(), cps.end(), is_emoji), cps.end());
  }
  if (config.collapse_whitespace) {
    std::vector<char32_t> collapsed;
    collapsed.reserve(cps.size());
    bool pending_space = false;
    for (char32_t cp : cps) {
      if (is_space_cp(cp)) {
        pending_space = !collapsed.empty();
      } else {
        if (pending_space) collapsed.push_back(U' ');
        pending_space = false;
        collapsed.push_back(cp);
      }
    }
    cps = std::move(collapsed);
  }
  return trim(utf8_encode(cps));
}

NormalizeResult normalize(const RawRecord& record, const CleaningConfig& config,
                          int utc_offset_minutes) {
  const std::string* id = record.find("id");
  if (!id || trim(*id).empty()) return {std::nullopt, "missing_id"};
  const std::string* text = record.find("text");
  if (!text) return {std::nullopt, "missing_text"};
  const std::string* time = record.find("time");
  if (!time) return {std::nullopt, "missing_time"};

  auto ts = parse_timestamp(*time, utc_offset_minutes);
  if (!ts) return {std::nullopt, "bad_timestamp"};

  std::string cleaned = clean_text(*text, config);
  std::size_t len = utf8_length(cleaned);
  if (cleaned.empty() || len < config.min_length) return {std::nullopt, "too_short"};
  if (len > config.max_length) return {std::nullopt, "too_long"};

  Entry entry;
  entry.id = trim(*id);
  entry.platform = record.platform;
  entry.timestamp = *ts;
  entry.text = std::move(cleaned);

  const std::string* lat = record.find("lat");
  const std::string* lon = record.find("lon");
  const std::string* community = record.find("community");
  if (lat && lon && !trim(*lat).empty() && !trim(*lon).empty()) {
    auto la = parse_double(*lat);
    auto lo = parse_double(*lon);
    if (!la || !lo) return {std::nullopt, "bad_geo"};
    entry.geo = GeoHint::coordinate(*la, *lo);
    if (!entry.geo.valid()) return {std::nullopt, "bad_geo"};
  } else if (community && !trim(*community).empty()) {
    entry.geo = GeoHint::name(trim(*community));
  }
  return {std::move(entry), ""};
}

DedupResult dedup(std::vector<Entry> entries) {
  // Earliest (timestamp, id) occurrence per (platform kind, text) key wins.
  std::map<std::pair<int, std::string>, std::size_t> best;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    auto key = std::make_pair(static_cast<int>(entries[i].platform.kind), entries[i].text);
    auto [it, inserted] = best.emplace(key, i);
    if (!inserted) {
      const Entry& cur = entries[it->second];
      const Entry& cand = entries[i];
      if (std::make_pair(cand.timestamp, cand.id) < std::make_pair(cur.timestamp, cur.id)) {
        it->second = i;
      }
    }
  }
  DedupResult result;
  result.kept.reserve(best.size());
  for (const auto& [key, idx] : best) result.kept.push_back(std::move(entries[idx]));
  std::sort(result.kept.begin(), result.kept.end(),
            [](const Entry& a, const Entry& b) { return a.id < b.id; });
  result.dropped = entries.size() - result.kept.size();
  return result;
}

std::vector<Entry> filter_by_date(std::vector<Entry> entries, const CivilDate& start,
                                  const CivilDate& end) {
  if (end < start) throw ValidationError("invalid date range: start is after end");
  std::vector<Entry> kept;
  kept.reserve(entries.size());
  for (Entry& e : entries) {
    CivilDate d = utc_date(e.timestamp);
    if (start <= d && d <= end) kept.push_back(std::move(e));
  }
  return kept;
}

}  // namespace hq
