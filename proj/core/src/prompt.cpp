#include <json.hpp>

#include "hq/errors.hpp"
#include "hq/llm.hpp"
#include "hq/util.hpp"

namespace hq {

std::string_view to_string(PromptTask task) {
  switch (task) {
    case PromptTask::Relevance: return "relevance";
    case PromptTask::Extraction: return "extraction";
    case PromptTask::Sentiment: return "sentiment";
    case PromptTask::Combined: return "combined";
  }
  return "unknown";
}

std::optional<PromptTask> prompt_task_from_string(std::string_view s) {
  if (s == "relevance") return PromptTask::Relevance;
  if (s == "extraction") return PromptTask::Extraction;
  if (s == "sentiment") return PromptTask::Sentiment;
  if (s == "combined") return PromptTask::Combined;
  return std::nullopt;
}

namespace {

const char* task_instructions(PromptTask task) {
  switch (task) {
    case PromptTask::Relevance:
      return "Decide whether the post below discusses the housing quality of a residential "
             "community. Reply with a JSON object {\"relevant\": true|false, \"units\": []}.";
    case PromptTask::Extraction:
      return "Extract every housing-quality observation from the post below as structured "
             "units. Each unit names the evaluated object, the content describing it, and the "
             "matching indicator id from the catalog. Set \"sentiment\" to 0 for every unit.";
    case PromptTask::Sentiment:
      return "For every housing-quality observation in the post below, assign a sentiment "
             "score on the five-point scale from -2 (strongly negative) to 2 (strongly "
             "positive).";
    case PromptTask::Combined:
      return "Read the post below. Decide whether it discusses the housing quality of a "
             "residential community; if it does, extract every observation as a structured "
             "unit with the evaluated object, the content describing it, the matching "
             "indicator id from the catalog, and a sentiment score from -2 (strongly "
             "negative) to 2 (strongly positive).";
  }
  return "";
}

std::string exemplar_response_json(const ExtractionResult& gold) {
  nlohmann::json doc;
  doc["relevant"] = gold.relevant;
  doc["units"] = nlohmann::json::array();
  for (const EvaluationUnit& u : gold.units) {
    doc["units"].push_back({{"object", u.object_text},
                            {"content", u.content_text},
                            {"indicator", u.indicator.str()},
                            {"sentiment", u.sentiment.value}});
  }
  return doc.dump();
}

}  // namespace

std::string build_prompt(PromptTask task, const Entry& entry, const Taxonomy& taxonomy,
                         const std::vector<Exemplar>& exemplars) {
  std::string prompt;
  prompt += task_instructions(task);
  prompt += "\n\nIndicator catalog (id and name):\n";
  for (const Indicator& ind : taxonomy.indicators()) {
    prompt += "[" + ind.id.str() + "] " + ind.name + "\n";
  }
  prompt +=
      "\nRespond with exactly one JSON object, no other text:\n"
      "{\"relevant\": true|false, \"units\": [{\"object\": string, \"content\": string, "
      "\"indicator\": \"<id from the catalog>\", \"sentiment\": -2|-1|0|1|2}]}\n"
      "An irrelevant post gets {\"relevant\": false, \"units\": []}.\n";

  for (std::size_t i = 0; i < exemplars.size(); ++i) {
    prompt += "\nExample " + std::to_string(i + 1) + "\nInput: " + exemplars[i].entry_text +
              "\nOutput: " + exemplar_response_json(exemplars[i].gold) + "\n";
  }

  prompt += "\nPost:\n" + entry.text + "\n";
  return prompt;
}

ExtractionResult parse_llm_response(const std::string& text, const Taxonomy& taxonomy,
                                    bool strict) {
  // Scan for balanced {...} candidates, honoring JSON string escapes, and take
  // the first one that parses.
  nlohmann::json doc;
  bool found = false;
  for (std::size_t start = 0; start < text.size() && !found; ++start) {
    if (text[start] != '{') continue;
    int depth = 0;
    bool in_string = false;
    bool escaped = false;
    for (std::size_t i = start; i < text.size(); ++i) {
      char c = text[i];
      if (in_string) {
        if (escaped) escaped = false;
        else if (c == '\\') escaped = true;
        else if (c == '"') in_string = false;
        continue;
      }
      if (c == '"') in_string = true;
      else if (c == '{') ++depth;
      else if (c == '}') {
        --depth;
        if (depth == 0) {
          auto candidate = nlohmann::json::parse(text.substr(start, i - start + 1), nullptr,
                                                 /*allow_exceptions=*/false);
          if (!candidate.is_discarded() && candidate.is_object()) {
            doc = std::move(candidate);
            found = true;
          }
          break;
        }
      }
    }
  }
  if (!found) {
    throw MalformedResponse("no JSON object found in response: " +
                            text.substr(0, std::min<std::size_t>(text.size(), 200)));
  }

  if (!doc.contains("relevant") || !doc["relevant"].is_boolean()) {
    throw MalformedResponse("response lacks boolean 'relevant': " + doc.dump());
  }

  ExtractionResult result;
  result.relevant = doc["relevant"].get<bool>();

  auto fail_or_skip = [&](const std::string& why, const nlohmann::json& fragment) {
    if (strict) throw MalformedResponse(why + ": " + fragment.dump());
    result.diagnostics.push_back("dropped unit (" + why + "): " + fragment.dump());
  };

  if (doc.contains("units")) {
    if (!doc["units"].is_array()) {
      throw MalformedResponse("'units' is not an array: " + doc["units"].dump());
    }
    for (const auto& ju : doc["units"]) {
      if (!ju.is_object() || !ju.contains("object") || !ju.contains("content") ||
          !ju.contains("indicator") || !ju.contains("sentiment")) {
        fail_or_skip("unit missing required fields", ju);
        continue;
      }
      if (!ju["object"].is_string() || !ju["content"].is_string() || !ju["indicator"].is_string()) {
        fail_or_skip("unit field has wrong type", ju);
        continue;
      }
      EvaluationUnit unit;
      unit.object_text = ju["object"].get<std::string>();
      unit.content_text = ju["content"].get<std::string>();
      auto id = IndicatorId::parse(ju["indicator"].get<std::string>());
      if (!id || !taxonomy.has(*id)) {
        fail_or_skip("unknown indicator", ju);
        continue;
      }
      unit.indicator = *id;
      if (!ju["sentiment"].is_number_integer() ||
          !SentimentScore::in_range(ju["sentiment"].get<int>())) {
        fail_or_skip("sentiment out of range", ju);
        continue;
      }
      unit.sentiment.value = ju["sentiment"].get<int>();
      if (unit.object_text.empty() || unit.content_text.empty()) {
        fail_or_skip("empty object or content", ju);
        continue;
      }
      result.units.push_back(std::move(unit));
    }
  }

  if (!result.relevant && !result.units.empty()) {
    if (strict) {
      throw MalformedResponse("units present although relevant=false: " + doc.dump());
    }
    result.diagnostics.push_back("dropped " + std::to_string(result.units.size()) +
                                 " units because relevant=false");
    result.units.clear();
  }
  return result;
}

}  // namespace hq
