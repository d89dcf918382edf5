// hqpipe: housing-quality scoring pipeline over multi-platform UGC exports.
//
// One subcommand per stage; each stage reads its predecessor's artifacts from
// the output directory, so stages can be re-run independently:
//
//   hqpipe ingest   --config run.json        # platform exports -> entries.jsonl
//   hqpipe extract  --config run.json        # entries -> extraction.jsonl
//   hqpipe weights  --config run.json        # units -> weights.csv
//   hqpipe score    --config run.json        # geo assignment + community scores
//   hqpipe evaluate --config run.json        # backend vs gold annotations
//   hqpipe report   --config run.json        # tables, distribution, choropleth
//   hqpipe all      --config run.json        # the whole chain

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hq/errors.hpp"
#include "hq/pipeline.hpp"

int main(int argc, char** argv) {
  CLI::App app{"housing-quality scoring pipeline over multi-platform UGC"};
  app.require_subcommand(1);

  std::string config_path;
  std::string output_dir_override;
  std::string backend_override;
  int threads_override = 0;

  const char* commands[] = {"ingest", "extract", "weights", "score", "evaluate", "report", "all"};
  const char* descriptions[] = {
      "parse, clean, dedup and date-filter platform exports",
      "run the configured extraction backend over entries",
      "build the indicator weight table from extracted units",
      "assign entries to communities and score them",
      "compare the configured backend against gold annotations",
      "emit indicator tables, platform distribution and choropleth",
      "run every stage in order"};

  for (std::size_t i = 0; i < std::size(commands); ++i) {
    CLI::App* sub = app.add_subcommand(commands[i], descriptions[i]);
    sub->add_option("--config", config_path, "run configuration (JSON)")->required();
    sub->add_option("--output-dir", output_dir_override, "override config output_dir");
    sub->add_option("--backend", backend_override,
                    "override backend: rule | llm | predictions:<path>");
    sub->add_option("--threads", threads_override, "override worker thread count");
  }

  CLI11_PARSE(app, argc, argv);

  hq::RunConfig config;
  try {
    config = hq::load_run_config(config_path);
  } catch (const hq::Error& e) {
    std::cerr << "error (config_validation): " << e.what() << "\n";
    return 2;
  }
  if (!output_dir_override.empty()) config.output_dir = output_dir_override;
  if (!backend_override.empty()) config.backend = backend_override;
  if (threads_override > 0) config.threads = threads_override;

  return hq::run_command(app.get_subcommands().front()->get_name(), config);
}
