#include <doctest.h>

#include <ctime>
#include <random>

#include "hq/csv.hpp"
#include "hq/errors.hpp"
#include "hq/sha256.hpp"
#include "hq/util.hpp"

using namespace hq;

TEST_SUITE_BEGIN("util");

namespace {

// Independent oracle for civil-time conversion.
std::int64_t timegm_oracle(int y, int mo, int d, int h, int mi, int s) {
  std::tm tm{};
  tm.tm_year = y - 1900;
  tm.tm_mon = mo - 1;
  tm.tm_mday = d;
  tm.tm_hour = h;
  tm.tm_min = mi;
  tm.tm_sec = s;
  return static_cast<std::int64_t>(timegm(&tm));
}

}  // namespace

TEST_CASE("civil date conversion agrees with timegm on random instants") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> year(1970, 2100), month(1, 12), day(1, 28);
  std::uniform_int_distribution<int> hour(0, 23), minsec(0, 59);
  for (int i = 0; i < 2000; ++i) {
    int y = year(rng), mo = month(rng), d = day(rng);
    int h = hour(rng), mi = minsec(rng), s = minsec(rng);
    std::int64_t expected = timegm_oracle(y, mo, d, h, mi, s);
    CHECK(days_from_civil({y, mo, d}) * 86400 + h * 3600 + mi * 60 + s == expected);
    CHECK(civil_from_days(expected / 86400) == CivilDate{y, mo, d});
  }
}

TEST_CASE("parse_timestamp handles platform-local and ISO forms") {
  // Beijing wall time 2023-06-01 10:00 is 02:00 UTC; oracle value from timegm.
  CHECK(*parse_timestamp("2023-06-01 10:00", 480) == 1685584800);
  CHECK(*parse_timestamp("2023-06-01 10:00:00", 480) == 1685584800);
  CHECK(*parse_timestamp("2023-06-01T02:00:00Z", 480) == 1685584800);
  CHECK(*parse_timestamp("2023-06-01T10:00:00+08:00", 0) == 1685584800);
  CHECK(*parse_timestamp("2023-06-01T01:00:00-01:00", 0) == 1685584800);

  CHECK(!parse_timestamp("2023-13-01 10:00", 0));
  CHECK(!parse_timestamp("2023-02-30 10:00", 0));
  CHECK(!parse_timestamp("not a time", 0));
  CHECK(!parse_timestamp("2023-06-01 25:00", 0));
}

TEST_CASE("parse_timestamp round-trips against timegm on random datetimes") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> year(1990, 2030), month(1, 12), day(1, 28);
  std::uniform_int_distribution<int> hour(0, 23), minsec(0, 59);
  for (int i = 0; i < 500; ++i) {
    int y = year(rng), mo = month(rng), d = day(rng), h = hour(rng), mi = minsec(rng),
        s = minsec(rng);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d %02d:%02d:%02d", y, mo, d, h, mi, s);
    CHECK(*parse_timestamp(buf, 0) == timegm_oracle(y, mo, d, h, mi, s));
  }
}

TEST_CASE("format_utc inverse of parse") {
  CHECK(format_utc(1685584800) == "2023-06-01T02:00:00Z");
  CHECK(format_utc(0) == "1970-01-01T00:00:00Z");
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::int64_t> t(0, 4102444800LL);
  for (int i = 0; i < 200; ++i) {
    std::int64_t v = t(rng);
    CHECK(*parse_timestamp(format_utc(v), 0) == v);
  }
}

TEST_CASE("utf8 round-trip and length") {
  std::string s = "héllo 世界 🌞";
  CHECK(utf8_encode(utf8_decode(s)) == s);
  CHECK(utf8_length(s) == 10);
  CHECK(utf8_length("") == 0);
  CHECK(utf8_length("abc") == 3);
}

TEST_CASE("tokenize lowercases, splits punctuation, keeps contractions") {
  auto t = tokenize("The Elevator isn't working!");
  REQUIRE(t.size() == 4);
  CHECK(t[0] == "the");
  CHECK(t[2] == "isn't");
  CHECK(t[3] == "working");
  CHECK(tokenize("'good'") == std::vector<std::string>{"good"});
  CHECK(tokenize("很好，真的") == std::vector<std::string>{"很好", "真的"});
}

TEST_CASE("csv quoted fields, embedded commas and newlines") {
  CsvTable t = parse_csv("a,b,c\n1,\"x, y\",\"line\nbreak\"\n2,\"he said \"\"hi\"\"\",z\n");
  REQUIRE(t.rows.size() == 2);
  CHECK(t.rows[0][1] == "x, y");
  CHECK(t.rows[0][2] == "line\nbreak");
  CHECK(t.rows[1][1] == "he said \"hi\"");
  CHECK_THROWS_AS(parse_csv("a,b\n1,\"oops\n"), ParseError);

  // escape/join inverse of parse
  std::vector<std::string> fields{"plain", "with, comma", "with \"quote\"", "multi\nline"};
  CsvTable back = parse_csv("h1,h2,h3,h4\n" + csv_join(fields));
  CHECK(back.rows[0] == fields);
}

TEST_CASE("sha256 known vectors") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("format_double round-trips") {
  for (double v : {0.0, 1.0, -2.5, 0.1, 1e-12, 22943.0, 3.4028e38}) {
    CHECK(*parse_double(format_double(v)) == v);
  }
}

TEST_CASE("parallel_for keeps index order and propagates errors") {
  std::vector<int> out(1000, 0);
  parallel_for(out.size(), 8, [&](std::size_t i) { out[i] = static_cast<int>(i) * 3; });
  for (std::size_t i = 0; i < out.size(); ++i) CHECK(out[i] == static_cast<int>(i) * 3);
  CHECK_THROWS_AS(
      parallel_for(10, 4, [](std::size_t i) { if (i == 7) throw ValidationError("boom"); }),
      ValidationError);
}

TEST_SUITE_END();
