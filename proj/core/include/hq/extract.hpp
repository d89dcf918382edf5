#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hq/taxonomy.hpp"
#include "hq/types.hpp"

namespace hq {

enum class BackendMode { ZeroShot, FewShot, FineTuned, RuleBased, PredictionFile };

std::string_view to_string(BackendMode mode);

struct BackendInfo {
  std::string name;
  BackendMode mode = BackendMode::RuleBased;
};

// Relevance flag plus extracted units for one entry. `units` is empty whenever
// `relevant` is false.
struct ExtractionResult {
  std::string entry_id;
  bool relevant = false;
  std::vector<EvaluationUnit> units;
  std::vector<std::string> diagnostics;

  friend bool operator==(const ExtractionResult& a, const ExtractionResult& b) {
    return a.entry_id == b.entry_id && a.relevant == b.relevant && a.units == b.units;
  }
};

// Stateless extraction backend; implementations must be safe to call from
// several threads at once. Given identical input and configuration the result
// is identical (the LLM backend honors this only at temperature 0).
class ExtractionBackend {
 public:
  virtual ~ExtractionBackend() = default;
  virtual BackendInfo info() const = 0;
  virtual ExtractionResult extract(const Entry& entry, const Taxonomy& taxonomy) const = 0;
};

// JSON object form used for artifacts, prediction files and the LLM response
// schema: {"entry_id", "relevant", "units": [{"object", "content", "indicator",
// "sentiment"}], "diagnostics"}.
std::string extraction_result_to_json(const ExtractionResult& result);
ExtractionResult extraction_result_from_json(const std::string& json_text);  // throws ParseError

}  // namespace hq
