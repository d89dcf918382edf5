#include "hq/pipeline.hpp"

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <map>
#include <set>

#include <json.hpp>

#include "hq/csv.hpp"
#include "hq/errors.hpp"
#include "hq/eval.hpp"
#include "hq/lexicon.hpp"
#include "hq/prediction_backend.hpp"
#include "hq/report.hpp"
#include "hq/rule_backend.hpp"
#include "hq/scoring.hpp"
#include "hq/sha256.hpp"
#include "hq/taxonomy.hpp"
#include "hq/util.hpp"

namespace fs = std::filesystem;

namespace hq {

namespace {

std::string require_string(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_string()) {
    throw ConfigError(std::string("config: missing or non-string field '") + key + "'");
  }
  return doc[key].get<std::string>();
}

CivilDate require_date(const nlohmann::json& doc, const char* key) {
  auto date = parse_date(doc[key].get<std::string>());
  if (!date) throw ConfigError(std::string("config: bad date in '") + key + "'");
  return *date;
}

std::vector<Exemplar> load_exemplars(const std::string& path) {
  std::vector<Exemplar> exemplars;
  for (const GoldAnnotation& gold : load_gold(path)) {
    Exemplar ex;
    ex.entry_text = gold.entry.text;
    ex.gold.entry_id = gold.entry.id;
    ex.gold.relevant = gold.relevant;
    ex.gold.units = gold.units;
    exemplars.push_back(std::move(ex));
  }
  return exemplars;
}

}  // namespace

RunConfig run_config_from_json(const std::string& json_text) {
  nlohmann::json doc = nlohmann::json::parse(json_text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) throw ConfigError("config: invalid JSON document");

  RunConfig config;
  if (!doc.contains("inputs") || !doc["inputs"].is_array() || doc["inputs"].empty()) {
    throw ConfigError("config: 'inputs' must be a non-empty array");
  }
  for (const auto& ji : doc["inputs"]) {
    RunConfig::InputSpec spec;
    std::string platform = require_string(ji, "platform");
    auto kind = platform_kind_from_string(platform);
    if (!kind) throw ConfigError("config: unknown platform '" + platform + "' in inputs");
    spec.kind = *kind;
    spec.label = ji.value("label", platform);
    spec.path = require_string(ji, "path");
    config.inputs.push_back(std::move(spec));
  }

  config.taxonomy_path = require_string(doc, "taxonomy");
  config.lexicon_path = doc.value("lexicon", "");
  config.aoi_path = doc.value("aoi", "");
  config.poi_path = doc.value("poi", "");
  config.gold_path = doc.value("gold", "");
  config.backend = doc.value("backend", "rule");

  if (doc.contains("llm")) {
    const auto& jl = doc["llm"];
    config.llm.base_url = jl.value("base_url", config.llm.base_url);
    config.llm.path = jl.value("path", config.llm.path);
    config.llm.model = jl.value("model", config.llm.model);
    config.llm.api_key_env = jl.value("api_key_env", config.llm.api_key_env);
    config.llm.max_in_flight = jl.value("max_in_flight", config.llm.max_in_flight);
    config.llm.timeout_seconds = jl.value("timeout_seconds", config.llm.timeout_seconds);
    config.llm.retries = jl.value("retries", config.llm.retries);
    config.llm.backoff_base_seconds = jl.value("backoff_base_seconds", config.llm.backoff_base_seconds);
    config.llm.temperature = jl.value("temperature", config.llm.temperature);
    config.llm.fine_tuned = jl.value("fine_tuned", config.llm.fine_tuned);
    config.llm.strict_parsing = jl.value("strict_parsing", config.llm.strict_parsing);
    if (jl.contains("task")) {
      auto task = prompt_task_from_string(jl["task"].get<std::string>());
      if (!task) throw ConfigError("config: unknown llm.task");
      config.llm.task = *task;
    }
    config.llm.allow_any_exemplar_count =
        jl.value("allow_any_exemplar_count", config.llm.allow_any_exemplar_count);
    if (jl.contains("exemplars")) {
      config.llm.exemplars = load_exemplars(jl["exemplars"].get<std::string>());
    }
  }

  if (doc.contains("weights")) {
    const auto& jw = doc["weights"];
    config.weights.use_log_frequency = jw.value("use_log_frequency", true);
    std::string mode = jw.value("importance_mode", "mean_abs");
    if (mode == "mean_abs") config.weights.importance = ImportanceMode::MeanAbs;
    else if (mode == "abs_mean") config.weights.importance = ImportanceMode::AbsMean;
    else throw ConfigError("config: weights.importance_mode must be mean_abs or abs_mean");
    config.weights.epsilon = jw.value("epsilon", config.weights.epsilon);
  }

  if (doc.contains("cleaning")) {
    const auto& jc = doc["cleaning"];
    config.cleaning.strip_urls = jc.value("strip_urls", true);
    config.cleaning.collapse_whitespace = jc.value("collapse_whitespace", true);
    config.cleaning.strip_emoji = jc.value("strip_emoji", false);
    config.cleaning.min_length = jc.value("min_length", config.cleaning.min_length);
    config.cleaning.max_length = jc.value("max_length", config.cleaning.max_length);
  }

  if (doc.contains("match_policy")) {
    const auto& jm = doc["match_policy"];
    config.match_policy.fuzzy_threshold = jm.value("fuzzy_threshold", 0.2);
    if (jm.contains("strip_suffixes")) {
      config.match_policy.strip_suffixes.clear();
      for (const auto& s : jm["strip_suffixes"]) {
        config.match_policy.strip_suffixes.push_back(s.get<std::string>());
      }
    }
  }

  if (doc.contains("date_range")) {
    config.start_date = require_date(doc["date_range"], "start");
    config.end_date = require_date(doc["date_range"], "end");
  }

  config.output_dir = doc.value("output_dir", config.output_dir);
  config.seed = doc.value("seed", config.seed);
  config.threads = doc.value("threads", config.threads);
  config.utc_offset_minutes = doc.value("utc_offset_minutes", config.utc_offset_minutes);
  return config;
}

RunConfig load_run_config(const std::string& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const ParseError& e) {
    throw ConfigError(e.what());
  }
  return run_config_from_json(text);
}

void validate_run_config(const RunConfig& config) {
  auto require_file = [](const std::string& field, const std::string& path) {
    if (path.empty()) throw ConfigError("config: missing required field '" + field + "'");
    if (!fs::exists(path)) throw ConfigError("config: " + field + ": file not found: " + path);
  };

  if (config.inputs.empty()) throw ConfigError("config: missing required field 'inputs'");
  for (const auto& input : config.inputs) require_file("inputs.path", input.path);
  require_file("taxonomy", config.taxonomy_path);

  bool is_rule = config.backend == "rule";
  bool is_llm = config.backend == "llm";
  bool is_predictions = config.backend.rfind("predictions:", 0) == 0;
  if (!is_rule && !is_llm && !is_predictions) {
    throw ConfigError("config: backend must be rule, llm or predictions:<path>, got '" +
                      config.backend + "'");
  }
  if (is_rule) require_file("lexicon", config.lexicon_path);
  if (is_predictions) require_file("backend.predictions", config.backend.substr(12));
  if (is_llm && !config.llm.valid_exemplar_count()) {
    throw ConfigError("config: llm.exemplars must hold 0 or 10 examples");
  }

  if (!config.aoi_path.empty()) require_file("aoi", config.aoi_path);
  if (!config.poi_path.empty()) require_file("poi", config.poi_path);
  if (!config.gold_path.empty()) require_file("gold", config.gold_path);

  if (!config.cleaning.valid()) {
    throw ConfigError("config: cleaning: 0 < min_length <= max_length required");
  }
  if (!config.match_policy.valid()) {
    throw ConfigError("config: match_policy.fuzzy_threshold must lie in [0, 1]");
  }
  if (config.end_date < config.start_date) {
    throw ConfigError("config: date_range: start is after end");
  }
  if (config.threads < 1) throw ConfigError("config: threads must be >= 1");
  if (config.weights.epsilon <= 0) throw ConfigError("config: weights.epsilon must be > 0");
  if (config.output_dir.empty()) throw ConfigError("config: missing required field 'output_dir'");
}

std::string config_hash(const RunConfig& config) {
  nlohmann::json doc;
  doc["inputs"] = nlohmann::json::array();
  for (const auto& input : config.inputs) {
    doc["inputs"].push_back({{"platform", std::string(to_string(input.kind))},
                             {"label", input.label},
                             {"path", input.path}});
  }
  doc["taxonomy"] = config.taxonomy_path;
  doc["lexicon"] = config.lexicon_path;
  doc["aoi"] = config.aoi_path;
  doc["poi"] = config.poi_path;
  doc["gold"] = config.gold_path;
  doc["backend"] = config.backend;
  nlohmann::json exemplars = nlohmann::json::array();
  for (const Exemplar& ex : config.llm.exemplars) {
    exemplars.push_back({{"text", ex.entry_text}, {"output", extraction_result_to_json(ex.gold)}});
  }
  doc["llm"] = {{"base_url", config.llm.base_url},
                {"path", config.llm.path},
                {"model", config.llm.model},
                {"api_key_env", config.llm.api_key_env},
                {"retries", config.llm.retries},
                {"temperature", config.llm.temperature},
                {"fine_tuned", config.llm.fine_tuned},
                {"strict_parsing", config.llm.strict_parsing},
                {"task", std::string(to_string(config.llm.task))},
                {"exemplars", std::move(exemplars)}};
  doc["weights"] = {{"use_log_frequency", config.weights.use_log_frequency},
                    {"importance_mode",
                     config.weights.importance == ImportanceMode::MeanAbs ? "mean_abs" : "abs_mean"},
                    {"epsilon", config.weights.epsilon}};
  doc["cleaning"] = {{"strip_urls", config.cleaning.strip_urls},
                     {"collapse_whitespace", config.cleaning.collapse_whitespace},
                     {"strip_emoji", config.cleaning.strip_emoji},
                     {"min_length", config.cleaning.min_length},
                     {"max_length", config.cleaning.max_length}};
  doc["match_policy"] = {{"fuzzy_threshold", config.match_policy.fuzzy_threshold},
                         {"strip_suffixes", config.match_policy.strip_suffixes}};
  doc["date_range"] = {{"start", format_utc(days_from_civil(config.start_date) * 86400).substr(0, 10)},
                       {"end", format_utc(days_from_civil(config.end_date) * 86400).substr(0, 10)}};
  doc["seed"] = config.seed;
  doc["utc_offset_minutes"] = config.utc_offset_minutes;
  return sha256_hex(doc.dump());
}

std::unique_ptr<ExtractionBackend> make_backend(const RunConfig& config) {
  if (config.backend == "rule") {
    return std::make_unique<RuleBasedBackend>(load_lexicon(config.lexicon_path));
  }
  if (config.backend == "llm") {
    return std::make_unique<LlmBackend>(config.llm);
  }
  if (config.backend.rfind("predictions:", 0) == 0) {
    return std::make_unique<PredictionFileBackend>(config.backend.substr(12));
  }
  throw ConfigError("config: unknown backend '" + config.backend + "'");
}

// ---------- artifact serialization ----------

std::string entry_to_jsonl_line(const Entry& entry) {
  nlohmann::json doc;
  doc["id"] = entry.id;
  doc["platform"] = std::string(to_string(entry.platform.kind));
  doc["label"] = entry.platform.label;
  doc["time"] = format_utc(entry.timestamp);
  doc["text"] = entry.text;
  switch (entry.geo.kind) {
    case GeoHint::Kind::None:
      doc["geo"] = {{"kind", "none"}};
      break;
    case GeoHint::Kind::Coordinate:
      doc["geo"] = {{"kind", "coordinate"}, {"lat", entry.geo.lat}, {"lon", entry.geo.lon}};
      break;
    case GeoHint::Kind::CommunityName:
      doc["geo"] = {{"kind", "name"}, {"name", entry.geo.community_name}};
      break;
  }
  return doc.dump();
}

Entry entry_from_jsonl_line(const std::string& line) {
  nlohmann::json doc = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) throw ParseError("entry: invalid JSON line");
  Entry entry;
  entry.id = doc.at("id").get<std::string>();
  auto kind = platform_kind_from_string(doc.at("platform").get<std::string>());
  if (!kind) throw ParseError("entry: unknown platform");
  entry.platform.kind = *kind;
  entry.platform.label = doc.value("label", std::string(to_string(*kind)));
  auto ts = parse_timestamp(doc.at("time").get<std::string>(), 0);
  if (!ts) throw ParseError("entry: bad timestamp");
  entry.timestamp = *ts;
  entry.text = doc.at("text").get<std::string>();
  if (doc.contains("geo")) {
    std::string gk = doc["geo"].value("kind", "none");
    if (gk == "coordinate") {
      entry.geo = GeoHint::coordinate(doc["geo"].at("lat").get<double>(),
                                      doc["geo"].at("lon").get<double>());
    } else if (gk == "name") {
      entry.geo = GeoHint::name(doc["geo"].at("name").get<std::string>());
    }
  }
  return entry;
}

// ---------- stage plumbing ----------

namespace {

fs::path artifact_path(const RunConfig& config, const std::string& name) {
  return fs::path(config.output_dir) / name;
}

void require_artifact(const RunConfig& config, const std::string& stage, const std::string& name) {
  if (!fs::exists(artifact_path(config, name))) {
    throw StageError(stage, "missing upstream artifact: " + name);
  }
}

std::string sanitize_label(const std::string& label) {
  std::string out;
  for (char c : label) {
    out.push_back(std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
  }
  return out.empty() ? "unnamed" : out;
}

std::vector<Entry> read_entries_artifact(const RunConfig& config, const std::string& stage) {
  require_artifact(config, stage, "entries.jsonl");
  std::vector<Entry> entries;
  for (const std::string& line : read_lines(artifact_path(config, "entries.jsonl").string())) {
    if (trim(line).empty()) continue;
    entries.push_back(entry_from_jsonl_line(line));
  }
  return entries;
}

std::vector<ExtractionResult> read_extraction_artifact(const RunConfig& config,
                                                       const std::string& stage) {
  require_artifact(config, stage, "extraction.jsonl");
  std::vector<ExtractionResult> results;
  for (const std::string& line : read_lines(artifact_path(config, "extraction.jsonl").string())) {
    if (trim(line).empty()) continue;
    results.push_back(extraction_result_from_json(line));
  }
  return results;
}

WeightTable read_weights_artifact(const RunConfig& config, const std::string& stage) {
  require_artifact(config, stage, "weights.csv");
  return WeightTable::from_csv(read_file(artifact_path(config, "weights.csv").string()));
}

}  // namespace

void run_ingest(const RunConfig& config) {
  fs::create_directories(config.output_dir);

  std::vector<Entry> all_entries;
  for (const auto& input : config.inputs) {
    Platform platform{input.kind, input.label};
    ParseOutput parsed = parse_records(platform, input.path);

    std::vector<ParseReject> rejects = std::move(parsed.rejects);
    for (const RawRecord& record : parsed.records) {
      NormalizeResult normalized = normalize(record, config.cleaning, config.utc_offset_minutes);
      if (normalized.ok()) {
        all_entries.push_back(std::move(*normalized.entry));
      } else {
        rejects.push_back({record.row, normalized.reject_reason});
      }
    }
    std::sort(rejects.begin(), rejects.end(), [](const ParseReject& a, const ParseReject& b) {
      return a.row != b.row ? a.row < b.row : a.reason < b.reason;
    });
    std::string sidecar;
    for (const ParseReject& r : rejects) {
      nlohmann::json doc;
      doc["row"] = r.row;
      doc["reason"] = r.reason;
      sidecar += doc.dump() + "\n";
    }
    write_file(artifact_path(config, "rejects_" + sanitize_label(input.label) + ".jsonl").string(),
               sidecar);
  }

  DedupResult deduped = dedup(std::move(all_entries));
  std::vector<Entry> entries = filter_by_date(std::move(deduped.kept), config.start_date, config.end_date);

  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (entries[i].id == entries[i - 1].id) {
      throw StageError("ingest", "duplicate entry id in corpus: " + entries[i].id);
    }
  }

  std::string out;
  for (const Entry& entry : entries) out += entry_to_jsonl_line(entry) + "\n";
  write_file(artifact_path(config, "entries.jsonl").string(), out);

  nlohmann::json summary;
  summary["entries"] = entries.size();
  summary["duplicates_dropped"] = deduped.dropped;
  write_file(artifact_path(config, "ingest_summary.json").string(), summary.dump(2) + "\n");
  write_manifest(config);
}

void run_extract(const RunConfig& config) {
  std::vector<Entry> entries = read_entries_artifact(config, "extract");
  Taxonomy taxonomy = load_taxonomy(config.taxonomy_path);
  std::unique_ptr<ExtractionBackend> backend = make_backend(config);

  std::vector<ExtractionResult> results(entries.size());
  parallel_for(entries.size(), config.threads, [&](std::size_t i) {
    ExtractionResult result = backend->extract(entries[i], taxonomy);
    // Post-contract: every unit must validate against the taxonomy.
    std::vector<EvaluationUnit> valid;
    valid.reserve(result.units.size());
    for (EvaluationUnit& unit : result.units) {
      std::vector<std::string> violations = validate_unit(unit, taxonomy);
      if (violations.empty()) {
        valid.push_back(std::move(unit));
        continue;
      }
      if (config.llm.strict_parsing) {
        throw MalformedResponse("entry " + entries[i].id + ": invalid unit: " + violations.front());
      }
      result.diagnostics.push_back("dropped unit (" + violations.front() + ")");
    }
    result.units = std::move(valid);
    if (!result.relevant && !result.units.empty()) result.relevant = true;
    results[i] = std::move(result);
  });

  std::string out;
  for (const ExtractionResult& r : results) out += extraction_result_to_json(r) + "\n";
  write_file(artifact_path(config, "extraction.jsonl").string(), out);
  write_manifest(config);
}

void run_weights(const RunConfig& config) {
  std::vector<ExtractionResult> results = read_extraction_artifact(config, "weights");
  Taxonomy taxonomy = load_taxonomy(config.taxonomy_path);

  std::vector<EvaluationUnit> units;
  for (const ExtractionResult& r : results) {
    units.insert(units.end(), r.units.begin(), r.units.end());
  }
  std::vector<IndicatorStats> stats = indicator_stats(units, taxonomy);

  WeightTable table;
  try {
    table = compute_weights(stats, config.weights);
  } catch (const DegenerateMass&) {
    std::cerr << "warning: degenerate weight mass, falling back to uniform weights\n";
    table = uniform_weights(stats);
  }
  write_file(artifact_path(config, "weights.csv").string(), table.to_csv());
  write_manifest(config);
}

void run_score(const RunConfig& config) {
  if (config.aoi_path.empty()) throw StageError("score", "config field 'aoi' is required to score");
  std::vector<Entry> entries = read_entries_artifact(config, "score");
  std::vector<ExtractionResult> results = read_extraction_artifact(config, "score");
  WeightTable weights = read_weights_artifact(config, "score");
  Taxonomy taxonomy = load_taxonomy(config.taxonomy_path);

  std::vector<Community> communities = load_communities(config.aoi_path);
  std::vector<PoiRecord> pois =
      config.poi_path.empty() ? std::vector<PoiRecord>{} : load_pois(config.poi_path);
  CommunityIndex index(communities, std::move(pois), config.match_policy);

  std::map<std::string, std::string> community_of;  // entry id -> community id
  std::string assignments;
  std::string unassigned;
  for (const Entry& entry : entries) {
    auto assignment = index.resolve(entry.geo);
    nlohmann::json doc;
    doc["entry_id"] = entry.id;
    if (assignment) {
      doc["community_id"] = assignment->community_id;
      doc["method"] = std::string(to_string(assignment->method));
      assignments += doc.dump() + "\n";
      community_of[entry.id] = assignment->community_id;
    } else {
      doc["reason"] = entry.geo.kind == GeoHint::Kind::None ? "no_geo_hint" : "no_match";
      unassigned += doc.dump() + "\n";
    }
  }
  write_file(artifact_path(config, "assignments.jsonl").string(), assignments);
  write_file(artifact_path(config, "unassigned.jsonl").string(), unassigned);

  std::map<std::string, std::vector<EvaluationUnit>> units_by_community;
  for (const ExtractionResult& r : results) {
    auto it = community_of.find(r.entry_id);
    if (it == community_of.end()) continue;
    auto& bucket = units_by_community[it->second];
    bucket.insert(bucket.end(), r.units.begin(), r.units.end());
  }

  std::vector<CommunitySentiment> sentiments;
  std::vector<CommunityScore> scores;
  std::string scores_csv = "community_id,total,coverage\n";
  for (const auto& [community_id, units] : units_by_community) {
    if (units.empty()) continue;
    CommunitySentiment cs = community_sentiment(community_id, units);
    CommunityScore score = total_score(cs, weights);
    scores_csv += csv_join({community_id, format_double(score.total), format_double(score.coverage)});
    sentiments.push_back(std::move(cs));
    scores.push_back(std::move(score));
  }
  write_file(artifact_path(config, "scores.csv").string(), scores_csv);

  if (!scores.empty()) {
    CitySummary summary =
        city_summary(scores, sentiments, taxonomy, weights, index.communities().size());
    write_file(artifact_path(config, "city_summary.json").string(), summary.to_json(taxonomy));
  } else {
    write_file(artifact_path(config, "city_summary.json").string(), "{}\n");
  }
  write_manifest(config);
}

void run_evaluate(const RunConfig& config) {
  if (config.gold_path.empty()) {
    throw StageError("evaluate", "config field 'gold' is required to evaluate");
  }
  Taxonomy taxonomy = load_taxonomy(config.taxonomy_path);
  std::vector<GoldAnnotation> gold = load_gold(config.gold_path);
  if (gold.empty()) throw StageError("evaluate", "gold file has no annotations");

  fs::create_directories(config.output_dir);
  std::unique_ptr<ExtractionBackend> backend = make_backend(config);
  ComparisonTable table = compare_backends(gold, taxonomy, {backend.get()});
  write_file(artifact_path(config, "metrics.csv").string(), table.to_csv());
  write_file(artifact_path(config, "metrics.txt").string(), table.to_text());
  write_file(artifact_path(config, "metrics.json").string(), table.to_json());
  write_manifest(config);
}

void run_report(const RunConfig& config) {
  std::vector<Entry> entries = read_entries_artifact(config, "report");
  std::vector<ExtractionResult> results = read_extraction_artifact(config, "report");
  WeightTable weights = read_weights_artifact(config, "report");
  if (!config.aoi_path.empty()) require_artifact(config, "report", "scores.csv");
  Taxonomy taxonomy = load_taxonomy(config.taxonomy_path);

  std::map<std::string, PlatformKind> platform_of;
  for (const Entry& e : entries) platform_of[e.id] = e.platform.kind;

  std::vector<AttributedUnit> attributed;
  std::vector<EvaluationUnit> units;
  for (const ExtractionResult& r : results) {
    auto it = platform_of.find(r.entry_id);
    for (const EvaluationUnit& u : r.units) {
      units.push_back(u);
      if (it != platform_of.end()) attributed.push_back({it->second, u});
    }
  }

  PlatformDistribution dist = platform_distribution(attributed, taxonomy);
  write_file(artifact_path(config, "distribution.csv").string(), dist.to_csv(taxonomy));

  std::vector<IndicatorStats> stats = indicator_stats(units, taxonomy);
  write_file(artifact_path(config, "indicator_table.csv").string(),
             indicator_table_csv(stats, weights, taxonomy));

  if (!config.aoi_path.empty()) {
    std::vector<Community> communities = load_communities(config.aoi_path);
    CsvTable score_rows = read_csv(artifact_path(config, "scores.csv").string());
    std::vector<CommunityScore> scores;
    for (const auto& row : score_rows.rows) {
      if (row.size() != 3) throw StageError("report", "scores.csv: wrong column count");
      CommunityScore s;
      s.community_id = row[0];
      auto total = parse_double(row[1]);
      auto coverage = parse_double(row[2]);
      if (!total || !coverage) throw StageError("report", "scores.csv: bad numeric value");
      s.total = *total;
      s.coverage = *coverage;
      scores.push_back(std::move(s));
    }
    write_file(artifact_path(config, "choropleth.geojson").string(),
               export_geojson(communities, scores));
  }
  write_manifest(config);
}

void write_manifest(const RunConfig& config) {
  // Every known artifact present in the output directory, checksummed.
  static const char* kPrefixes[] = {"rejects_", "unassigned"};
  static const char* kNames[] = {"entries.jsonl",     "ingest_summary.json", "extraction.jsonl",
                                 "weights.csv",       "assignments.jsonl",   "unassigned.jsonl",
                                 "scores.csv",        "city_summary.json",   "distribution.csv",
                                 "indicator_table.csv", "choropleth.geojson", "metrics.csv",
                                 "metrics.txt",       "metrics.json"};
  std::map<std::string, std::string> checksums;
  for (const auto& dirent : fs::directory_iterator(config.output_dir)) {
    if (!dirent.is_regular_file()) continue;
    std::string name = dirent.path().filename().string();
    bool known = std::any_of(std::begin(kNames), std::end(kNames),
                             [&](const char* n) { return name == n; }) ||
                 std::any_of(std::begin(kPrefixes), std::end(kPrefixes),
                             [&](const char* p) { return name.rfind(p, 0) == 0; });
    if (!known) continue;
    checksums[name] = sha256_hex(read_file(dirent.path().string()));
  }
  nlohmann::json doc;
  doc["config_hash"] = config_hash(config);
  doc["artifacts"] = checksums;
  write_file((fs::path(config.output_dir) / "manifest.json").string(), doc.dump(2) + "\n");
}

int run_command(const std::string& command, const RunConfig& config) {
  auto report_failure = [&](const std::string& stage, const std::string& error_type,
                            const std::string& message, int code) {
    std::error_code ec;
    fs::create_directories(config.output_dir, ec);
    if (!ec) {
      nlohmann::json doc;
      doc["command"] = command;
      doc["stage"] = stage;
      doc["error"] = error_type;
      doc["message"] = message;
      try {
        write_file((fs::path(config.output_dir) / "error_report.json").string(), doc.dump(2) + "\n");
      } catch (const Error&) {
        // stderr still carries the message below
      }
    }
    std::cerr << "error (" << error_type << "): " << message << "\n";
    return code;
  };

  try {
    validate_run_config(config);
  } catch (const ConfigError& e) {
    return report_failure("config", "config_validation", e.what(), 2);
  }

  std::string stage = command;
  try {
    if (command == "ingest") {
      run_ingest(config);
    } else if (command == "extract") {
      run_extract(config);
    } else if (command == "weights") {
      run_weights(config);
    } else if (command == "score") {
      run_score(config);
    } else if (command == "evaluate") {
      run_evaluate(config);
    } else if (command == "report") {
      run_report(config);
    } else if (command == "all") {
      stage = "ingest";
      run_ingest(config);
      stage = "extract";
      run_extract(config);
      stage = "weights";
      run_weights(config);
      stage = "score";
      run_score(config);
      stage = "report";
      run_report(config);
      if (!config.gold_path.empty()) {
        stage = "evaluate";
        run_evaluate(config);
      }
    } else {
      return report_failure("config", "config_validation", "unknown command: " + command, 2);
    }
  } catch (const StageError& e) {
    return report_failure(e.stage, "stage_failure", e.what(), 1);
  } catch (const ConfigError& e) {
    return report_failure(stage, "config_validation", e.what(), 2);
  } catch (const Error& e) {
    return report_failure(stage, "stage_failure", e.what(), 1);
  }
  return 0;
}

}  // namespace hq
