#pragma once

#include <string>
#include <vector>

#include "hq/extract.hpp"
#include "hq/lexicon.hpp"

namespace hq {

// Splits on ASCII . ! ? and fullwidth 。！？; a trailing fragment without
// terminal punctuation is its own sentence.
std::vector<std::string> split_sentences(std::string_view text);

// Lexicon score of one sentence: +1 per positive term, -1 per negative term,
// sign flipped when a negator sits within the two preceding tokens, scaled by
// an intensifier multiplier when the preceding token is one.
double raw_sentiment(std::string_view sentence, const SentimentLexicon& lexicon);

// Raw score -> five-point scale. Integer raws follow the symmetric table
// (<=-2 -> -2, -1 -> -1, 0 -> 0, +1 -> +1, >=+2 -> +2); fractional raws are
// rounded half away from zero first, then clamped.
SentimentScore sentiment_from_raw(double raw);

// String-search baseline: keyword substring matching against the taxonomy plus
// lexicon sentiment per matched sentence. relevant == (>= 1 keyword matched).
ExtractionResult rule_based_extract(const Entry& entry, const Taxonomy& taxonomy,
                                    const SentimentLexicon& lexicon);

class RuleBasedBackend : public ExtractionBackend {
 public:
  explicit RuleBasedBackend(SentimentLexicon lexicon) : lexicon_(std::move(lexicon)) {}

  BackendInfo info() const override { return {"rule_based", BackendMode::RuleBased}; }
  ExtractionResult extract(const Entry& entry, const Taxonomy& taxonomy) const override {
    return rule_based_extract(entry, taxonomy, lexicon_);
  }

  const SentimentLexicon& lexicon() const { return lexicon_; }

 private:
  SentimentLexicon lexicon_;
};

}  // namespace hq
