#include "hq/rule_backend.hpp"

#include <cmath>

#include "hq/util.hpp"

namespace hq {

std::vector<std::string> split_sentences(std::string_view text) {
  std::vector<std::string> sentences;
  std::vector<char32_t> cps = utf8_decode(text);
  std::vector<char32_t> current;
  auto flush = [&] {
    std::string s = trim(utf8_encode(current));
    if (!s.empty()) sentences.push_back(std::move(s));
    current.clear();
  };
  for (char32_t cp : cps) {
    current.push_back(cp);
    if (cp == U'.' || cp == U'!' || cp == U'?' || cp == 0x3002 || cp == 0xFF01 || cp == 0xFF1F) {
      flush();
    }
  }
  flush();
  return sentences;
}

double raw_sentiment(std::string_view sentence, const SentimentLexicon& lexicon) {
  std::vector<std::string> tokens = tokenize(sentence);
  double raw = 0.0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    double polarity = 0.0;
    if (lexicon.is_positive(tokens[i])) polarity = 1.0;
    else if (lexicon.is_negative(tokens[i])) polarity = -1.0;
    if (polarity == 0.0) continue;

    for (std::size_t back = 1; back <= 2 && back <= i; ++back) {
      if (lexicon.is_negator(tokens[i - back])) {
        polarity = -polarity;
        break;
      }
    }
    if (i > 0) {
      double mult = lexicon.intensifier(tokens[i - 1]);
      if (mult > 0.0) polarity *= mult;
    }
    raw += polarity;
  }
  return raw;
}

SentimentScore sentiment_from_raw(double raw) {
  long rounded = std::lround(raw);  // half away from zero
  if (rounded < SentimentScore::kMin) rounded = SentimentScore::kMin;
  if (rounded > SentimentScore::kMax) rounded = SentimentScore::kMax;
  return SentimentScore{static_cast<int>(rounded)};
}

ExtractionResult rule_based_extract(const Entry& entry, const Taxonomy& taxonomy,
                                    const SentimentLexicon& lexicon) {
  ExtractionResult result;
  result.entry_id = entry.id;

  std::vector<std::string> sentences = split_sentences(entry.text);
  for (const std::string& sentence : sentences) {
    std::string haystack = lower_ascii(sentence);
    SentimentScore score{};
    bool scored = false;
    for (const Indicator& indicator : taxonomy.indicators()) {
      const std::string* matched_keyword = nullptr;
      for (const std::string& keyword : indicator.keywords) {
        if (haystack.find(lower_ascii(keyword)) != std::string::npos) {
          matched_keyword = &keyword;
          break;
        }
      }
      if (!matched_keyword) continue;

      if (!scored) {
        score = sentiment_from_raw(raw_sentiment(sentence, lexicon));
        scored = true;
      }
      EvaluationUnit unit;
      unit.entry_id = entry.id;
      unit.object_text = *matched_keyword;
      unit.content_text = sentence;
      unit.indicator = indicator.id;
      unit.sentiment = score;
      result.units.push_back(std::move(unit));
      result.relevant = true;
    }
  }
  return result;
}

}  // namespace hq
