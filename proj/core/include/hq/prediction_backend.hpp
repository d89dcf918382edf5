#pragma once

#include <map>
#include <string>

#include "hq/extract.hpp"

namespace hq {

// Replays precomputed results (e.g. exported GPT or BERT predictions) from a
// JSON-lines file, one ExtractionResult per line keyed by entry_id.
class PredictionFileBackend : public ExtractionBackend {
 public:
  explicit PredictionFileBackend(const std::string& path, std::string name = "predictions");

  BackendInfo info() const override { return {name_, BackendMode::PredictionFile}; }

  bool has(const std::string& entry_id) const { return results_.count(entry_id) != 0; }

  // Throws MissingPrediction when the file has no row for the entry.
  ExtractionResult extract(const Entry& entry, const Taxonomy& taxonomy) const override;

  std::size_t size() const { return results_.size(); }

 private:
  std::string name_;
  std::map<std::string, ExtractionResult> results_;
};

}  // namespace hq
