#include "hq/prediction_backend.hpp"

#include "hq/errors.hpp"
#include "hq/util.hpp"

namespace hq {

PredictionFileBackend::PredictionFileBackend(const std::string& path, std::string name)
    : name_(std::move(name)) {
  std::vector<std::string> lines = read_lines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) continue;
    ExtractionResult result;
    try {
      result = extraction_result_from_json(lines[i]);
    } catch (const ParseError& e) {
      throw ParseError(path + ":" + std::to_string(i + 1) + ": " + e.what());
    }
    std::string id = result.entry_id;
    if (!results_.emplace(id, std::move(result)).second) {
      throw ParseError(path + ": duplicate prediction for entry " + id);
    }
  }
}

ExtractionResult PredictionFileBackend::extract(const Entry& entry, const Taxonomy&) const {
  auto it = results_.find(entry.id);
  if (it == results_.end()) {
    throw MissingPrediction(name_ + ": no prediction for entry " + entry.id);
  }
  return it->second;
}

}  // namespace hq
