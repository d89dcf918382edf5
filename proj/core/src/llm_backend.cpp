#include "hq/errors.hpp"
#include "hq/llm.hpp"

namespace hq {

LlmBackend::LlmBackend(LlmClientConfig config) {
  if (!config.valid_exemplar_count()) {
    throw ConfigError("llm.exemplars must hold 0 (zero-shot) or 10 (few-shot) examples, got " +
                      std::to_string(config.exemplars.size()));
  }
  client_ = std::make_shared<LlmClient>(std::move(config));
}

BackendInfo LlmBackend::info() const {
  const LlmClientConfig& config = client_->config();
  BackendMode mode = config.fine_tuned    ? BackendMode::FineTuned
                     : config.exemplars.empty() ? BackendMode::ZeroShot
                                                : BackendMode::FewShot;
  return {"llm:" + config.model, mode};
}

ExtractionResult LlmBackend::extract(const Entry& entry, const Taxonomy& taxonomy) const {
  const LlmClientConfig& config = client_->config();
  std::string prompt = build_prompt(config.task, entry, taxonomy, config.exemplars);

  std::vector<std::string> diagnostics;
  std::string raw = client_->complete(prompt, &diagnostics);

  ExtractionResult result = parse_llm_response(raw, taxonomy, config.strict_parsing);
  result.entry_id = entry.id;
  for (EvaluationUnit& unit : result.units) unit.entry_id = entry.id;
  for (std::string& d : diagnostics) result.diagnostics.push_back(std::move(d));
  return result;
}

}  // namespace hq
