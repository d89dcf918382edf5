#pragma once

#include <string>
#include <unordered_map>
#include <unordered_set>

namespace hq {

// HOWNET-style polarity lexicon. Terms compare after ASCII lowercasing.
struct SentimentLexicon {
  std::unordered_set<std::string> positive;
  std::unordered_set<std::string> negative;
  std::unordered_map<std::string, double> intensifiers;  // term -> multiplier
  std::unordered_set<std::string> negators;

  bool is_positive(const std::string& token) const { return positive.count(token) != 0; }
  bool is_negative(const std::string& token) const { return negative.count(token) != 0; }
  bool is_negator(const std::string& token) const { return negators.count(token) != 0; }
  double intensifier(const std::string& token) const {
    auto it = intensifiers.find(token);
    return it == intensifiers.end() ? 0.0 : it->second;
  }

  // Throws ValidationError if positive and negative overlap.
  void validate() const;
};

// Plain-text format, four bracketed sections; '#' starts a comment line:
//   [positive]  one term per line
//   [negative]  one term per line
//   [intensifiers]  "term multiplier" per line
//   [negators]  one term per line
SentimentLexicon parse_lexicon(const std::string& text);
SentimentLexicon load_lexicon(const std::string& path);

}  // namespace hq
