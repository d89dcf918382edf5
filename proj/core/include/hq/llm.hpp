#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hq/extract.hpp"
#include "hq/taxonomy.hpp"

namespace hq {

enum class PromptTask { Relevance, Extraction, Sentiment, Combined };

std::string_view to_string(PromptTask task);
std::optional<PromptTask> prompt_task_from_string(std::string_view s);

// In-prompt example: raw entry text and the annotated output.
struct Exemplar {
  std::string entry_text;
  ExtractionResult gold;
};

// Deterministic prompt. Embeds every taxonomy indicator exactly once as
// "[<id>] <name>", states the response JSON schema, then appends exemplars as
// input/output pairs (few-shot) and the entry text.
std::string build_prompt(PromptTask task, const Entry& entry, const Taxonomy& taxonomy,
                         const std::vector<Exemplar>& exemplars);

// Chat-completion transport configuration. The API key is read from the
// environment variable named here; it never appears in config files.
struct LlmClientConfig {
  std::string base_url = "http://localhost:8080";
  std::string path = "/v1/chat/completions";
  std::string model = "gpt-4o";
  std::string api_key_env = "HQ_LLM_API_KEY";
  int max_in_flight = 4;
  int timeout_seconds = 30;
  int retries = 3;                     // retry count after the first attempt
  double backoff_base_seconds = 0.25;  // doubles per retry
  double temperature = 0.0;
  bool fine_tuned = false;             // capability reporting only
  std::vector<Exemplar> exemplars;     // 0 (zero-shot) or 10 (few-shot)
  bool allow_any_exemplar_count = false;
  PromptTask task = PromptTask::Combined;
  bool strict_parsing = true;

  bool valid_exemplar_count() const {
    return allow_any_exemplar_count || exemplars.empty() || exemplars.size() == 10;
  }
};

// Bounded-concurrency chat-completion client. Retries transport failures and
// 429/5xx with exponential backoff; 401/403 raise AuthError immediately.
// Successful calls return the assistant message content verbatim.
class LlmClient {
 public:
  explicit LlmClient(LlmClientConfig config);
  ~LlmClient();

  LlmClient(const LlmClient&) = delete;
  LlmClient& operator=(const LlmClient&) = delete;

  // Throws BackendUnavailable (carries attempt count) or AuthError.
  std::string complete(const std::string& prompt, std::vector<std::string>* diagnostics = nullptr) const;

  const LlmClientConfig& config() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Pulls the first balanced JSON object out of `text` (prose around it is
// fine) and coerces it into an ExtractionResult. In strict mode any unknown
// indicator or out-of-range sentiment makes the whole response malformed; in
// lenient mode the offending unit is dropped with a diagnostic. entry_id is
// taken from the caller, not the response.
ExtractionResult parse_llm_response(const std::string& text, const Taxonomy& taxonomy,
                                    bool strict = true);

class LlmBackend : public ExtractionBackend {
 public:
  explicit LlmBackend(LlmClientConfig config);

  BackendInfo info() const override;
  ExtractionResult extract(const Entry& entry, const Taxonomy& taxonomy) const override;

  const LlmClient& client() const { return *client_; }

 private:
  std::shared_ptr<LlmClient> client_;
};

}  // namespace hq
