#include <algorithm>
#include <chrono>
#include <condition_variable>
#include <cstdlib>
#include <mutex>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "hq/errors.hpp"
#include "hq/llm.hpp"
#include "hq/util.hpp"

namespace hq {

struct LlmClient::Impl {
  LlmClientConfig config;

  mutable std::mutex mu;
  mutable std::condition_variable cv;
  mutable int in_flight = 0;

  struct Slot {
    const Impl& impl;
    explicit Slot(const Impl& i) : impl(i) {
      std::unique_lock<std::mutex> lock(impl.mu);
      impl.cv.wait(lock, [&] { return impl.in_flight < impl.config.max_in_flight; });
      ++impl.in_flight;
    }
    ~Slot() {
      {
        std::lock_guard<std::mutex> lock(impl.mu);
        --impl.in_flight;
      }
      impl.cv.notify_one();
    }
  };
};

LlmClient::LlmClient(LlmClientConfig config) : impl_(std::make_unique<Impl>()) {
  if (config.max_in_flight < 1) {
    throw ConfigError("llm.max_in_flight must be >= 1");
  }
  if (config.retries < 0) {
    throw ConfigError("llm.retries must be >= 0");
  }
  impl_->config = std::move(config);
}

LlmClient::~LlmClient() = default;

const LlmClientConfig& LlmClient::config() const { return impl_->config; }

namespace {

bool retryable_status(int status) {
  return status == 429 || (status >= 500 && status <= 599);
}

std::string request_body(const LlmClientConfig& config, const std::string& prompt) {
  nlohmann::json body;
  body["model"] = config.model;
  body["messages"] = nlohmann::json::array({{{"role", "user"}, {"content", prompt}}});
  body["temperature"] = config.temperature;
  return body.dump();
}

// Assistant text from the chat-completion envelope, or nullopt if the
// envelope has the wrong shape.
std::optional<std::string> assistant_content(const std::string& body) {
  nlohmann::json doc = nlohmann::json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) return std::nullopt;
  if (!doc.contains("choices") || !doc["choices"].is_array() || doc["choices"].empty()) {
    return std::nullopt;
  }
  const auto& first = doc["choices"][0];
  if (!first.contains("message") || !first["message"].contains("content") ||
      !first["message"]["content"].is_string()) {
    return std::nullopt;
  }
  return first["message"]["content"].get<std::string>();
}

}  // namespace

std::string LlmClient::complete(const std::string& prompt,
                                std::vector<std::string>* diagnostics) const {
  const LlmClientConfig& config = impl_->config;

  std::string api_key;
  if (!config.api_key_env.empty()) {
    const char* key = std::getenv(config.api_key_env.c_str());
    if (!key) throw ConfigError("api key env var not set: " + config.api_key_env);
    api_key = key;
  }

  Impl::Slot slot(*impl_);

  const std::string body = request_body(config, prompt);
  const int attempts_allowed = config.retries + 1;
  std::string last_failure = "no attempt made";

  auto note = [&](const std::string& msg) {
    if (diagnostics) diagnostics->push_back(msg);
  };

  for (int attempt = 1; attempt <= attempts_allowed; ++attempt) {
    if (attempt > 1) {
      int doublings = std::min(attempt - 2, 20);
      double delay = config.backoff_base_seconds * static_cast<double>(1 << doublings);
      note("backing off " + format_double(delay) + "s before attempt " + std::to_string(attempt));
      std::this_thread::sleep_for(std::chrono::duration<double>(delay));
    }

    httplib::Client http(config.base_url);
    http.set_connection_timeout(config.timeout_seconds, 0);
    http.set_read_timeout(config.timeout_seconds, 0);
    http.set_write_timeout(config.timeout_seconds, 0);
    httplib::Headers headers;
    if (!api_key.empty()) headers.emplace("Authorization", "Bearer " + api_key);

    auto res = http.Post(config.path, headers, body, "application/json");
    if (!res) {
      last_failure = "transport error: " + httplib::to_string(res.error());
      note("attempt " + std::to_string(attempt) + ": " + last_failure);
      continue;
    }
    if (res->status == 401 || res->status == 403) {
      throw AuthError("llm endpoint rejected credentials (HTTP " + std::to_string(res->status) + ")");
    }
    if (res->status >= 200 && res->status < 300) {
      auto content = assistant_content(res->body);
      if (content) {
        note("attempt " + std::to_string(attempt) + ": HTTP " + std::to_string(res->status));
        return *content;
      }
      last_failure = "malformed completion envelope (HTTP " + std::to_string(res->status) + ")";
      note("attempt " + std::to_string(attempt) + ": " + last_failure);
      continue;
    }
    last_failure = "HTTP " + std::to_string(res->status);
    note("attempt " + std::to_string(attempt) + ": " + last_failure);
    if (!retryable_status(res->status)) {
      throw BackendUnavailable("llm request failed without retry: " + last_failure, attempt);
    }
  }
  throw BackendUnavailable("llm unavailable after " + std::to_string(attempts_allowed) +
                               " attempts, last failure: " + last_failure,
                           attempts_allowed);
}

}  // namespace hq
