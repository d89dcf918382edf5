#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hq/extract.hpp"
#include "hq/geo.hpp"
#include "hq/ingest.hpp"
#include "hq/llm.hpp"
#include "hq/types.hpp"
#include "hq/weights.hpp"

namespace hq {

// Everything one reproducible run needs. Loaded from a JSON config document;
// see data/fixtures/run_config.json for a complete example.
struct RunConfig {
  struct InputSpec {
    PlatformKind kind = PlatformKind::ReviewSite;
    std::string label;  // defaults to the platform kind name
    std::string path;
  };

  std::vector<InputSpec> inputs;
  std::string taxonomy_path;
  std::string lexicon_path;
  std::string aoi_path;
  std::string poi_path;        // optional
  std::string gold_path;       // optional; enables the evaluate stage
  std::string backend = "rule";  // rule | llm | predictions:<path>

  LlmClientConfig llm;
  WeightConfig weights;
  CleaningConfig cleaning;
  MatchPolicy match_policy;

  CivilDate start_date{2023, 1, 1};
  CivilDate end_date{2024, 12, 31};

  std::string output_dir = "out";
  std::uint64_t seed = 0;
  int threads = 1;              // not semantic: results are thread-count invariant
  int utc_offset_minutes = 480; // zone applied to zone-less platform timestamps
};

RunConfig run_config_from_json(const std::string& json_text);  // throws ConfigError
RunConfig load_run_config(const std::string& path);

// Path existence and invariant checks; throws ConfigError naming the field.
void validate_run_config(const RunConfig& config);

// SHA-256 over the canonical serialization of the semantically meaningful
// fields (output_dir and threads excluded).
std::string config_hash(const RunConfig& config);

// Instantiates the configured backend ("rule", "llm", "predictions:<path>").
std::unique_ptr<ExtractionBackend> make_backend(const RunConfig& config);

// Artifact (de)serialization used by the stages and their tests.
std::string entry_to_jsonl_line(const Entry& entry);
Entry entry_from_jsonl_line(const std::string& line);  // throws ParseError

// Stage drivers. Each reads its upstream artifacts from config.output_dir,
// writes its own, then refreshes manifest.json. They throw StageError
// ("missing upstream artifact: ..." when run out of order).
void run_ingest(const RunConfig& config);
void run_extract(const RunConfig& config);
void run_weights(const RunConfig& config);
void run_score(const RunConfig& config);
void run_evaluate(const RunConfig& config);
void run_report(const RunConfig& config);

// CLI surface: validates, dispatches one command (or the whole chain for
// "all"), writes error_report.json on failure. Returns the process exit
// status: 0 ok, 2 config validation failure, 1 stage failure.
int run_command(const std::string& command, const RunConfig& config);

// manifest.json: {"config_hash": ..., "artifacts": {file -> sha256}}.
void write_manifest(const RunConfig& config);

}  // namespace hq
