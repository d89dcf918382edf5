#include "hq/lexicon.hpp"

#include <sstream>

#include "hq/errors.hpp"
#include "hq/util.hpp"

namespace hq {

void SentimentLexicon::validate() const {
  for (const std::string& term : positive) {
    if (negative.count(term)) {
      throw ValidationError("lexicon: term in both positive and negative sections: " + term);
    }
  }
}

SentimentLexicon parse_lexicon(const std::string& text) {
  SentimentLexicon lex;
  enum class Section { None, Positive, Negative, Intensifiers, Negators };
  Section section = Section::None;

  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (line.front() == '[' && line.back() == ']') {
      std::string name = lower_ascii(line.substr(1, line.size() - 2));
      if (name == "positive") section = Section::Positive;
      else if (name == "negative") section = Section::Negative;
      else if (name == "intensifiers") section = Section::Intensifiers;
      else if (name == "negators") section = Section::Negators;
      else throw ParseError("lexicon: unknown section '" + name + "' at line " + std::to_string(lineno));
      continue;
    }
    switch (section) {
      case Section::None:
        throw ParseError("lexicon: term before any section header at line " + std::to_string(lineno));
      case Section::Positive:
        lex.positive.insert(lower_ascii(line));
        break;
      case Section::Negative:
        lex.negative.insert(lower_ascii(line));
        break;
      case Section::Intensifiers: {
        // "term multiplier", whitespace separated; tabs also accepted.
        std::size_t sp = line.find_last_of(" \t");
        if (sp == std::string::npos) {
          throw ParseError("lexicon: intensifier needs a multiplier at line " + std::to_string(lineno));
        }
        auto mult = parse_double(line.substr(sp + 1));
        if (!mult || *mult <= 0) {
          throw ParseError("lexicon: bad intensifier multiplier at line " + std::to_string(lineno));
        }
        lex.intensifiers[lower_ascii(trim(line.substr(0, sp)))] = *mult;
        break;
      }
      case Section::Negators:
        lex.negators.insert(lower_ascii(line));
        break;
    }
  }
  lex.validate();
  return lex;
}

SentimentLexicon load_lexicon(const std::string& path) {
  return parse_lexicon(read_file(path));
}

}  // namespace hq
