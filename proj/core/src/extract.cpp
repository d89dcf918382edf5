#include "hq/extract.hpp"

#include <json.hpp>

#include "hq/errors.hpp"

namespace hq {

std::string_view to_string(BackendMode mode) {
  switch (mode) {
    case BackendMode::ZeroShot: return "zero_shot";
    case BackendMode::FewShot: return "few_shot";
    case BackendMode::FineTuned: return "fine_tuned";
    case BackendMode::RuleBased: return "rule_based";
    case BackendMode::PredictionFile: return "prediction_file";
  }
  return "unknown";
}

std::string extraction_result_to_json(const ExtractionResult& result) {
  nlohmann::json doc;
  doc["entry_id"] = result.entry_id;
  doc["relevant"] = result.relevant;
  doc["units"] = nlohmann::json::array();
  for (const EvaluationUnit& u : result.units) {
    doc["units"].push_back({{"object", u.object_text},
                            {"content", u.content_text},
                            {"indicator", u.indicator.str()},
                            {"sentiment", u.sentiment.value}});
  }
  doc["diagnostics"] = result.diagnostics;
  return doc.dump();
}

ExtractionResult extraction_result_from_json(const std::string& json_text) {
  nlohmann::json doc = nlohmann::json::parse(json_text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw ParseError("extraction result: invalid JSON");
  }
  ExtractionResult result;
  if (!doc.contains("entry_id") || !doc["entry_id"].is_string()) {
    throw ParseError("extraction result: missing entry_id");
  }
  result.entry_id = doc["entry_id"].get<std::string>();
  if (!doc.contains("relevant") || !doc["relevant"].is_boolean()) {
    throw ParseError("extraction result: missing relevant flag");
  }
  result.relevant = doc["relevant"].get<bool>();
  if (doc.contains("units")) {
    for (const auto& ju : doc["units"]) {
      EvaluationUnit u;
      u.entry_id = result.entry_id;
      u.object_text = ju.at("object").get<std::string>();
      u.content_text = ju.at("content").get<std::string>();
      auto id = IndicatorId::parse(ju.at("indicator").get<std::string>());
      if (!id) throw ParseError("extraction result: bad indicator id");
      u.indicator = *id;
      if (!ju.at("sentiment").is_number_integer()) {
        throw ParseError("extraction result: sentiment must be an integer");
      }
      u.sentiment.value = ju.at("sentiment").get<int>();
      if (!u.sentiment.valid()) {
        throw ParseError("extraction result: sentiment out of range for entry " + result.entry_id);
      }
      if (u.object_text.empty() || u.content_text.empty()) {
        throw ParseError("extraction result: empty object/content for entry " + result.entry_id);
      }
      result.units.push_back(std::move(u));
    }
  }
  if (doc.contains("diagnostics")) {
    for (const auto& d : doc["diagnostics"]) result.diagnostics.push_back(d.get<std::string>());
  }
  return result;
}

}  // namespace hq
