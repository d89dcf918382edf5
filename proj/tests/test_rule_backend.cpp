#include <doctest.h>

#include <random>

#include "hq/errors.hpp"
#include "hq/lexicon.hpp"
#include "hq/rule_backend.hpp"
#include "hq/util.hpp"
#include "support.hpp"

using namespace hq;

TEST_SUITE_BEGIN("rule_backend");

namespace {

const Taxonomy& taxonomy() {
  static Taxonomy t = hqtest::default_taxonomy();
  return t;
}

const SentimentLexicon& lexicon() {
  static SentimentLexicon lex = load_lexicon(hqtest::data_path("lexicon_default.txt"));
  return lex;
}

Entry text_entry(std::string text) {
  Entry e;
  e.id = "t1";
  e.platform = {PlatformKind::ReviewSite, "dianping"};
  e.timestamp = 1672531200;
  e.text = std::move(text);
  return e;
}

int extracted_sentiment(const std::string& sentence) {
  ExtractionResult r = rule_based_extract(text_entry(sentence), taxonomy(), lexicon());
  REQUIRE(!r.units.empty());
  return r.units.front().sentiment.value;
}

}  // namespace

TEST_CASE("sentence splitting at terminal punctuation") {
  auto s = split_sentences("First one. Second! Third? Trailing fragment");
  REQUIRE(s.size() == 4);
  CHECK(s[0] == "First one.");
  CHECK(s[3] == "Trailing fragment");
  CHECK(split_sentences("电梯坏了。很糟糕！").size() == 2);
  CHECK(split_sentences("").empty());
}

TEST_CASE("raw score threshold table on integers") {
  CHECK(sentiment_from_raw(-5).value == -2);
  CHECK(sentiment_from_raw(-2).value == -2);
  CHECK(sentiment_from_raw(-1).value == -1);
  CHECK(sentiment_from_raw(0).value == 0);
  CHECK(sentiment_from_raw(1).value == 1);
  CHECK(sentiment_from_raw(2).value == 2);
  CHECK(sentiment_from_raw(7).value == 2);
  // fractional raws round half away from zero before the table
  CHECK(sentiment_from_raw(1.5).value == 2);
  CHECK(sentiment_from_raw(-1.5).value == -2);
  CHECK(sentiment_from_raw(0.5).value == 1);
  CHECK(sentiment_from_raw(-0.5).value == -1);
  CHECK(sentiment_from_raw(0.4).value == 0);
}

TEST_CASE("planted sentences produce hand-traced sentiments") {
  // Each sentence carries the keyword "elevator" so indicator 7.1 matches.
  CHECK(extracted_sentiment("The elevator is not good.") == -1);
  CHECK(extracted_sentiment("The elevator is good.") == 1);
  CHECK(extracted_sentiment("The elevator is bad.") == -1);
  CHECK(extracted_sentiment("The elevator is very good.") == 2);        // 1.5 -> 2
  CHECK(extracted_sentiment("The elevator is extremely bad.") == -2);   // -2.0
  CHECK(extracted_sentiment("The elevator is not bad.") == 1);          // flipped negative
  CHECK(extracted_sentiment("The elevator is good, the ride is fast.") == 2);  // 1 + 1
  CHECK(extracted_sentiment("The elevator is awful, dirty and noisy.") == -2); // -3 clamped
  CHECK(extracted_sentiment("The elevator is slightly dirty.") == -1);  // -0.5 rounds away
  CHECK(extracted_sentiment("The elevator is no good.") == -1);
  CHECK(extracted_sentiment("The elevator is never broken.") == 1);
  CHECK(extracted_sentiment("The elevator is good but noisy.") == 0);
  CHECK(extracted_sentiment("The elevator isn't clean.") == -1);
  CHECK(extracted_sentiment("The elevator is really beautiful.") == 2);
  CHECK(extracted_sentiment("The elevator sits in the lobby.") == 0);   // matched, neutral
  // negator reaches back two tokens, intensifier only one
  CHECK(extracted_sentiment("The elevator is not very clean.") == -2);  // flip then x1.5
  CHECK(extracted_sentiment("The elevator is not so very clean.") == 2);  // negator out of window
}

TEST_CASE("hand trace: parking complaint maps to 4.1 negative") {
  ExtractionResult r = rule_based_extract(
      text_entry("parking spaces are impossible to find, always full"), taxonomy(), lexicon());
  CHECK(r.relevant);
  REQUIRE(r.units.size() == 1);
  CHECK(r.units[0].indicator == IndicatorId{4, 1});
  CHECK(r.units[0].sentiment.value == -2);  // impossible + full
  CHECK(r.units[0].content_text == "parking spaces are impossible to find, always full");
}

TEST_CASE("irrelevant text yields relevant=false and no units") {
  ExtractionResult r = rule_based_extract(text_entry("lunch was tasty today"), taxonomy(), lexicon());
  CHECK(!r.relevant);
  CHECK(r.units.empty());
}

TEST_CASE("sentence matching two indicators yields two units sharing the sentence") {
  ExtractionResult r =
      rule_based_extract(text_entry("The parking fee is expensive."), taxonomy(), lexicon());
  REQUIRE(r.units.size() == 2);
  CHECK(r.units[0].indicator == IndicatorId{4, 1});  // "parking"
  CHECK(r.units[1].indicator == IndicatorId{4, 2});  // "parking fee"
  CHECK(r.units[0].content_text == r.units[1].content_text);
  CHECK(r.units[0].sentiment == r.units[1].sentiment);
  CHECK(r.units[0].object_text == "parking");
  CHECK(r.units[1].object_text == "parking fee");
}

TEST_CASE("per-sentence scoring keeps sentiments apart") {
  ExtractionResult r = rule_based_extract(
      text_entry("The elevator is broken. The garden is beautiful."), taxonomy(), lexicon());
  REQUIRE(r.units.size() == 2);
  CHECK(r.units[0].indicator == IndicatorId{7, 1});
  CHECK(r.units[0].sentiment.value == -1);
  CHECK(r.units[1].indicator == IndicatorId{6, 2});
  CHECK(r.units[1].sentiment.value == 1);
}

TEST_CASE("keyword matching is case-insensitive") {
  ExtractionResult r =
      rule_based_extract(text_entry("PARKING is impossible."), taxonomy(), lexicon());
  REQUIRE(r.units.size() == 1);
  CHECK(r.units[0].indicator == IndicatorId{4, 1});
}

TEST_CASE("determinism and unit validity under fuzz; relevance == keyword match") {
  std::mt19937 rng(2024);
  const char* words[] = {"the",    "parking", "elevator", "good",  "bad",     "not",
                         "very",   "garden",  "lunch",    "today", "terrible", "trash",
                         "subway", "random",  "word",     "fine",  "quiet",   "never"};
  std::uniform_int_distribution<int> nwords(0, 14), pick(0, 17), punct(0, 3);
  const char* puncts[] = {" ", ". ", "! ", "? "};

  for (int i = 0; i < 500; ++i) {
    std::string text;
    int n = nwords(rng);
    for (int k = 0; k < n; ++k) {
      text += words[pick(rng)];
      text += puncts[punct(rng)];
    }
    Entry e = text_entry(text);
    ExtractionResult a = rule_based_extract(e, taxonomy(), lexicon());
    ExtractionResult b = rule_based_extract(e, taxonomy(), lexicon());
    CHECK(a == b);

    // Independent relevance oracle: any keyword substring in any sentence.
    bool expect_relevant = false;
    for (const std::string& sentence : split_sentences(text)) {
      std::string hay = lower_ascii(sentence);
      for (const Indicator& ind : taxonomy().indicators()) {
        for (const std::string& kw : ind.keywords) {
          if (hay.find(lower_ascii(kw)) != std::string::npos) expect_relevant = true;
        }
      }
    }
    CHECK(a.relevant == expect_relevant);
    CHECK(a.relevant == !a.units.empty());

    for (const EvaluationUnit& unit : a.units) {
      CHECK(validate_unit(unit, taxonomy()).empty());
    }
  }
}

TEST_CASE("lexicon loading and validation") {
  const SentimentLexicon& lex = lexicon();
  CHECK(lex.is_positive("good"));
  CHECK(lex.is_negative("bad"));
  CHECK(lex.is_negator("not"));
  CHECK(lex.intensifier("very") == doctest::Approx(1.5));
  CHECK(lex.intensifier("nonexistent") == 0.0);

  CHECK_THROWS_AS(parse_lexicon("[positive]\nsame\n[negative]\nsame\n"), ValidationError);
  CHECK_THROWS_AS(parse_lexicon("orphan-term\n"), ParseError);
  CHECK_THROWS_AS(parse_lexicon("[intensifiers]\nvery\n"), ParseError);
  CHECK_THROWS_AS(parse_lexicon("[unknown-section]\n"), ParseError);
}

TEST_SUITE_END();
