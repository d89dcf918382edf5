#include "hq/util.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>
#include <system_error>
#include <thread>

#include "hq/errors.hpp"

namespace hq {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string lower_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.emplace_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

namespace {

bool is_ascii_word_boundary(char32_t cp) {
  if (cp < 0x80) {
    unsigned char c = static_cast<unsigned char>(cp);
    return !std::isalnum(c) && c != '\'';  // keep contractions ("isn't") whole
  }
  if (cp == 0x2019) return false;  // typographic apostrophe
  // Fullwidth / CJK punctuation and spaces.
  switch (cp) {
    case 0x3000: case 0x3001: case 0x3002: case 0xFF01: case 0xFF08:
    case 0xFF09: case 0xFF0C: case 0xFF1A: case 0xFF1B: case 0xFF1F:
      return true;
    default:
      return false;
  }
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::vector<char32_t> cps = utf8_decode(text);
  std::vector<char32_t> current;
  auto flush = [&] {
    // Quoting apostrophes around a token are not part of it.
    while (!current.empty() && (current.front() == U'\'' || current.front() == 0x2019)) {
      current.erase(current.begin());
    }
    while (!current.empty() && (current.back() == U'\'' || current.back() == 0x2019)) {
      current.pop_back();
    }
    if (!current.empty()) {
      // The typographic apostrophe folds to ASCII so lexicon entries match.
      for (char32_t& cp : current) {
        if (cp == 0x2019) cp = U'\'';
      }
      tokens.push_back(lower_ascii(utf8_encode(current)));
      current.clear();
    }
  };
  for (char32_t cp : cps) {
    if (is_ascii_word_boundary(cp)) {
      flush();
    } else {
      current.push_back(cp);
    }
  }
  flush();
  return tokens;
}

std::vector<char32_t> utf8_decode(std::string_view s) {
  std::vector<char32_t> out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    char32_t cp = 0xFFFD;
    std::size_t len = 1;
    if (c < 0x80) {
      cp = c;
    } else if ((c & 0xE0) == 0xC0 && i + 1 < s.size()) {
      unsigned char c1 = static_cast<unsigned char>(s[i + 1]);
      if ((c1 & 0xC0) == 0x80) {
        cp = ((c & 0x1Fu) << 6) | (c1 & 0x3Fu);
        len = 2;
      }
    } else if ((c & 0xF0) == 0xE0 && i + 2 < s.size()) {
      unsigned char c1 = static_cast<unsigned char>(s[i + 1]);
      unsigned char c2 = static_cast<unsigned char>(s[i + 2]);
      if ((c1 & 0xC0) == 0x80 && (c2 & 0xC0) == 0x80) {
        cp = ((c & 0x0Fu) << 12) | ((c1 & 0x3Fu) << 6) | (c2 & 0x3Fu);
        len = 3;
      }
    } else if ((c & 0xF8) == 0xF0 && i + 3 < s.size()) {
      unsigned char c1 = static_cast<unsigned char>(s[i + 1]);
      unsigned char c2 = static_cast<unsigned char>(s[i + 2]);
      unsigned char c3 = static_cast<unsigned char>(s[i + 3]);
      if ((c1 & 0xC0) == 0x80 && (c2 & 0xC0) == 0x80 && (c3 & 0xC0) == 0x80) {
        cp = ((c & 0x07u) << 18) | ((c1 & 0x3Fu) << 12) | ((c2 & 0x3Fu) << 6) | (c3 & 0x3Fu);
        len = 4;
      }
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string utf8_encode(const std::vector<char32_t>& cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

std::size_t utf8_length(std::string_view s) {
  std::size_t n = 0;
  for (char c : s) {
    if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++n;
  }
  return n;
}

bool is_valid_date(const CivilDate& d) {
  if (d.month < 1 || d.month > 12 || d.day < 1) return false;
  static const int mdays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  int dim = mdays[d.month - 1];
  bool leap = (d.year % 4 == 0 && d.year % 100 != 0) || d.year % 400 == 0;
  if (d.month == 2 && leap) dim = 29;
  return d.day <= dim;
}

// Howard Hinnant's branchless civil-from-days / days-from-civil.
std::int64_t days_from_civil(const CivilDate& d) {
  std::int64_t y = d.year;
  y -= d.month <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153u * (d.month + (d.month > 2 ? -3 : 9)) + 2) / 5 + d.day - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

CivilDate civil_from_days(std::int64_t z) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  const unsigned dd = doy - (153 * mp + 2) / 5 + 1;
  const unsigned mm = mp + (mp < 10 ? 3 : -9);
  return CivilDate{static_cast<int>(y + (mm <= 2)), static_cast<int>(mm), static_cast<int>(dd)};
}

CivilDate utc_date(std::int64_t epoch_seconds) {
  std::int64_t days = epoch_seconds / 86400;
  if (epoch_seconds % 86400 < 0) --days;
  return civil_from_days(days);
}

std::optional<CivilDate> parse_date(std::string_view s) {
  auto parts = split(trim(s), '-');
  if (parts.size() != 3) return std::nullopt;
  auto y = parse_int(parts[0]);
  auto m = parse_int(parts[1]);
  auto d = parse_int(parts[2]);
  if (!y || !m || !d) return std::nullopt;
  CivilDate date{static_cast<int>(*y), static_cast<int>(*m), static_cast<int>(*d)};
  if (!is_valid_date(date)) return std::nullopt;
  return date;
}

std::optional<std::int64_t> parse_timestamp(std::string_view raw, int local_utc_offset_minutes) {
  std::string s = trim(raw);
  if (s.size() < 16) return std::nullopt;
  // Date part.
  auto date = parse_date(s.substr(0, 10));
  if (!date) return std::nullopt;
  if (s[10] != ' ' && s[10] != 'T') return std::nullopt;

  std::string rest = s.substr(11);
  int zone_minutes = -local_utc_offset_minutes;  // applied below as +zone shift to UTC
  bool explicit_zone = false;
  if (!rest.empty() && (rest.back() == 'Z' || rest.back() == 'z')) {
    rest.pop_back();
    zone_minutes = 0;
    explicit_zone = true;
  } else {
    // +HH:MM / -HH:MM suffix.
    for (std::size_t i = 0; i + 5 <= rest.size(); ++i) {
      if ((rest[i] == '+' || rest[i] == '-') && i >= 5) {
        std::string zs = rest.substr(i);
        auto zparts = split(zs.substr(1), ':');
        if (zparts.size() == 2) {
          auto zh = parse_int(zparts[0]);
          auto zm = parse_int(zparts[1]);
          if (zh && zm) {
            int sign = rest[i] == '+' ? 1 : -1;
            zone_minutes = -sign * static_cast<int>(*zh * 60 + *zm);
            explicit_zone = true;
            rest = rest.substr(0, i);
          }
        }
        break;
      }
    }
  }
  (void)explicit_zone;

  auto hms = split(trim(rest), ':');
  if (hms.size() != 2 && hms.size() != 3) return std::nullopt;
  auto h = parse_int(hms[0]);
  auto m = parse_int(hms[1]);
  std::optional<std::int64_t> sec = hms.size() == 3 ? parse_int(hms[2]) : std::optional<std::int64_t>(0);
  if (!h || !m || !sec) return std::nullopt;
  if (*h < 0 || *h > 23 || *m < 0 || *m > 59 || *sec < 0 || *sec > 60) return std::nullopt;

  std::int64_t t = days_from_civil(*date) * 86400 + *h * 3600 + *m * 60 + *sec;
  return t + static_cast<std::int64_t>(zone_minutes) * 60;
}

std::string format_utc(std::int64_t epoch_seconds) {
  std::int64_t days = epoch_seconds / 86400;
  std::int64_t rem = epoch_seconds % 86400;
  if (rem < 0) {
    rem += 86400;
    --days;
  }
  CivilDate d = civil_from_days(days);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ", d.year, d.month, d.day,
                static_cast<int>(rem / 3600), static_cast<int>((rem / 60) % 60),
                static_cast<int>(rem % 60));
  return buf;
}

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::optional<double> parse_double(std::string_view s) {
  std::string t = trim(s);
  double v = 0;
  auto res = std::from_chars(t.data(), t.data() + t.size(), v);
  if (res.ec != std::errc() || res.ptr != t.data() + t.size()) return std::nullopt;
  return v;
}

std::optional<std::int64_t> parse_int(std::string_view s) {
  std::string t = trim(s);
  std::int64_t v = 0;
  auto res = std::from_chars(t.data(), t.data() + t.size(), v);
  if (res.ec != std::errc() || res.ptr != t.data() + t.size()) return std::nullopt;
  return v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write file: " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error("short write: " + path);
}

std::vector<std::string> read_lines(const std::string& path) {
  std::string all = read_file(path);
  std::vector<std::string> lines;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= all.size(); ++i) {
    if (i == all.size() || all[i] == '\n') {
      std::string line = all.substr(start, i - start);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines.push_back(std::move(line));
      start = i + 1;
    }
  }
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::size_t nworkers = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
  std::vector<std::thread> pool;
  pool.reserve(nworkers);
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mu;
  for (std::size_t w = 0; w < nworkers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!first_error) first_error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace hq
