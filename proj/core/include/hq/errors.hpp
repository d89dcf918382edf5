#pragma once

#include <stdexcept>
#include <string>

namespace hq {

// Base for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input file (CSV, JSON, GeoJSON, lexicon, ...).
struct ParseError : Error {
  using Error::Error;
};

// Structurally valid input that violates a domain invariant.
struct ValidationError : Error {
  using Error::Error;
};

// Bad or incomplete run configuration; names the offending field.
struct ConfigError : Error {
  using Error::Error;
};

// LLM transport failed after all retries.
struct BackendUnavailable : Error {
  BackendUnavailable(const std::string& what, int attempts_made)
      : Error(what), attempts(attempts_made) {}
  int attempts = 0;
};

// HTTP 401/403 from the LLM endpoint; never retried.
struct AuthError : Error {
  using Error::Error;
};

// LLM output could not be coerced into an ExtractionResult.
struct MalformedResponse : Error {
  using Error::Error;
};

// Prediction-file backend has no row for a requested entry id.
struct MissingPrediction : Error {
  using Error::Error;
};

// Every indicator has zero importance*frequency mass; weights undefined.
struct DegenerateMass : Error {
  using Error::Error;
};

// A pipeline stage failed; carries the stage name for exit reporting.
struct StageError : Error {
  StageError(std::string stage_name, const std::string& what)
      : Error(what), stage(std::move(stage_name)) {}
  std::string stage;
};

}  // namespace hq
