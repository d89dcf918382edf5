#include "hq/eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "hq/csv.hpp"
#include "hq/errors.hpp"
#include "hq/util.hpp"

namespace hq {

std::vector<GoldAnnotation> load_gold(const std::string& path) {
  std::vector<GoldAnnotation> gold;
  std::vector<std::string> lines = read_lines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) continue;
    nlohmann::json doc = nlohmann::json::parse(lines[i], nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded() || !doc.is_object() || !doc.contains("entry")) {
      throw ParseError(path + ":" + std::to_string(i + 1) + ": bad gold annotation");
    }
    GoldAnnotation g;
    const auto& je = doc["entry"];
    g.entry.id = je.at("id").get<std::string>();
    g.entry.text = je.value("text", "");
    if (je.contains("platform")) {
      auto kind = platform_kind_from_string(je["platform"].get<std::string>());
      if (!kind) throw ParseError(path + ": unknown platform for entry " + g.entry.id);
      g.entry.platform.kind = *kind;
      g.entry.platform.label = je["platform"].get<std::string>();
    }
    if (je.contains("time")) {
      auto ts = parse_timestamp(je["time"].get<std::string>(), 0);
      if (ts) g.entry.timestamp = *ts;
    }
    g.relevant = doc.value("relevant", false);
    if (doc.contains("units")) {
      for (const auto& ju : doc["units"]) {
        EvaluationUnit u;
        u.entry_id = g.entry.id;
        u.object_text = ju.at("object").get<std::string>();
        u.content_text = ju.at("content").get<std::string>();
        auto id = IndicatorId::parse(ju.at("indicator").get<std::string>());
        if (!id) throw ParseError(path + ": bad indicator in gold for entry " + g.entry.id);
        u.indicator = *id;
        u.sentiment.value = ju.at("sentiment").get<int>();
        if (!u.sentiment.valid()) {
          throw ParseError(path + ": sentiment out of range in gold for entry " + g.entry.id);
        }
        if (u.object_text.empty() || u.content_text.empty()) {
          throw ParseError(path + ": empty object/content in gold for entry " + g.entry.id);
        }
        g.units.push_back(std::move(u));
      }
    }
    if (!g.relevant && !g.units.empty()) {
      throw ParseError(path + ": entry " + g.entry.id + " is irrelevant but carries units");
    }
    gold.push_back(std::move(g));
  }
  return gold;
}

std::string gold_to_jsonl_line(const GoldAnnotation& gold) {
  nlohmann::json doc;
  doc["entry"] = {{"id", gold.entry.id},
                  {"platform", std::string(to_string(gold.entry.platform.kind))},
                  {"time", format_utc(gold.entry.timestamp)},
                  {"text", gold.entry.text}};
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

Alignment align_units(std::span<const EvaluationUnit> predicted,
                      std::span<const EvaluationUnit> gold) {
  Alignment alignment;
  std::vector<bool> pred_used(predicted.size(), false);
  std::vector<bool> gold_used(gold.size(), false);

  // Pass 1: exact indicator, gold order then prediction order.
  for (std::size_t g = 0; g < gold.size(); ++g) {
    for (std::size_t p = 0; p < predicted.size(); ++p) {
      if (pred_used[p] || predicted[p].indicator != gold[g].indicator) continue;
      alignment.matches.push_back({g, p, true});
      pred_used[p] = true;
      gold_used[g] = true;
      break;
    }
  }
  // Pass 2: same category.
  for (std::size_t g = 0; g < gold.size(); ++g) {
    if (gold_used[g]) continue;
    for (std::size_t p = 0; p < predicted.size(); ++p) {
      if (pred_used[p] || predicted[p].indicator.category != gold[g].indicator.category) continue;
      alignment.matches.push_back({g, p, false});
      pred_used[p] = true;
      gold_used[g] = true;
      break;
    }
  }
  for (std::size_t g = 0; g < gold.size(); ++g) {
    if (!gold_used[g]) alignment.unmatched_gold.push_back(g);
  }
  for (std::size_t p = 0; p < predicted.size(); ++p) {
    if (!pred_used[p]) alignment.unmatched_pred.push_back(p);
  }
  return alignment;
}

MetricsReport compute_metrics(
    std::span<const std::pair<ExtractionResult, GoldAnnotation>> results) {
  if (results.empty()) throw ValidationError("compute_metrics: empty input");

  MetricsReport report;
  report.entries = results.size();

  std::size_t relevance_correct = 0;
  std::size_t sentiment_exact = 0;
  std::size_t sentiment_within_one = 0;
  std::size_t unit_exact = 0;

  for (const auto& [prediction, gold] : results) {
    if (prediction.relevant == gold.relevant) ++relevance_correct;
    ++report.relevance_confusion[gold.relevant ? 1 : 0][prediction.relevant ? 1 : 0];

    report.gold_units += gold.units.size();
    report.predicted_units += prediction.units.size();

    Alignment alignment = align_units(prediction.units, gold.units);
    for (const UnitMatch& match : alignment.matches) {
      const EvaluationUnit& gu = gold.units[match.gold_index];
      const EvaluationUnit& pu = prediction.units[match.pred_index];
      if (!match.indicator_exact) {
        ++report.category_matched;
        continue;
      }
      ++report.indicator_matched;
      int gs = gu.sentiment.value, ps = pu.sentiment.value;
      if (SentimentScore::in_range(gs) && SentimentScore::in_range(ps)) {
        ++report.sentiment_confusion[gs + 2][ps + 2];
      }
      if (gs == ps) {
        ++sentiment_exact;
        ++unit_exact;
      }
      if (std::abs(gs - ps) <= 1) ++sentiment_within_one;
    }
  }

  auto ratio = [](std::size_t num, std::size_t den) {
    return den == 0 ? 1.0 : static_cast<double>(num) / static_cast<double>(den);
  };
  report.relevance_accuracy = ratio(relevance_correct, report.entries);
  report.object_accuracy = ratio(report.indicator_matched + report.category_matched, report.gold_units);
  report.indicator_accuracy = ratio(report.indicator_matched, report.gold_units);
  report.sentiment_exact_accuracy = ratio(sentiment_exact, report.indicator_matched);
  report.sentiment_within_one_accuracy = ratio(sentiment_within_one, report.indicator_matched);
  report.unit_exact_accuracy = ratio(unit_exact, report.gold_units);
  return report;
}

namespace {

struct MetricRow {
  const char* name;
  double (*get)(const BackendColumn&);
};

const MetricRow kMetricRows[] = {
    {"relevance_accuracy", [](const BackendColumn& c) { return c.metrics.relevance_accuracy; }},
    {"object_accuracy", [](const BackendColumn& c) { return c.metrics.object_accuracy; }},
    {"indicator_accuracy", [](const BackendColumn& c) { return c.metrics.indicator_accuracy; }},
    {"sentiment_exact_accuracy",
     [](const BackendColumn& c) { return c.metrics.sentiment_exact_accuracy; }},
    {"sentiment_within_one_accuracy",
     [](const BackendColumn& c) { return c.metrics.sentiment_within_one_accuracy; }},
    {"unit_exact_accuracy", [](const BackendColumn& c) { return c.metrics.unit_exact_accuracy; }},
};

}  // namespace

std::string ComparisonTable::to_csv() const {
  std::vector<std::string> header{"metric"};
  for (const BackendColumn& c : columns) header.push_back(c.name);
  std::string out = csv_escape(header[0]);
  for (std::size_t i = 1; i < header.size(); ++i) out += "," + csv_escape(header[i]);
  out += "\n";
  for (const MetricRow& row : kMetricRows) {
    out += row.name;
    for (const BackendColumn& c : columns) out += "," + format_double(row.get(c));
    out += "\n";
  }
  out += "entries";
  for (const BackendColumn& c : columns) out += "," + std::to_string(c.covered_entries);
  out += "\ngold_units";
  for (const BackendColumn& c : columns) out += "," + std::to_string(c.metrics.gold_units);
  out += "\ncomplete";
  for (const BackendColumn& c : columns) out += std::string(",") + (c.complete ? "yes" : "no");
  out += "\n";
  return out;
}

std::string ComparisonTable::to_text() const {
  std::size_t name_width = 30;
  std::vector<std::size_t> widths;
  for (const BackendColumn& c : columns) {
    widths.push_back(std::max<std::size_t>(c.name.size() + (c.complete ? 0 : 1), 10));
  }
  std::string out;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%-*s", static_cast<int>(name_width), "metric");
  out += buf;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    std::string title = columns[i].name + (columns[i].complete ? "" : "*");
    std::snprintf(buf, sizeof(buf), "  %*s", static_cast<int>(widths[i]), title.c_str());
    out += buf;
  }
  out += "\n";
  for (const MetricRow& row : kMetricRows) {
    std::snprintf(buf, sizeof(buf), "%-*s", static_cast<int>(name_width), row.name);
    out += buf;
    for (std::size_t i = 0; i < columns.size(); ++i) {
      std::snprintf(buf, sizeof(buf), "  %*.4f", static_cast<int>(widths[i]), row.get(columns[i]));
      out += buf;
    }
    out += "\n";
  }
  std::snprintf(buf, sizeof(buf), "%-*s", static_cast<int>(name_width), "entries");
  out += buf;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "  %*zu", static_cast<int>(widths[i]), columns[i].covered_entries);
    out += buf;
  }
  out += "\n";
  bool any_incomplete = std::any_of(columns.begin(), columns.end(),
                                    [](const BackendColumn& c) { return !c.complete; });
  if (any_incomplete) out += "* column incomplete: predictions missing for some entries\n";
  return out;
}

std::string ComparisonTable::to_json() const {
  nlohmann::json doc = nlohmann::json::array();
  for (const BackendColumn& c : columns) {
    nlohmann::json jc;
    jc["backend"] = c.name;
    jc["complete"] = c.complete;
    jc["entries"] = c.covered_entries;
    for (const MetricRow& row : kMetricRows) jc[row.name] = row.get(c);
    jc["gold_units"] = c.metrics.gold_units;
    jc["predicted_units"] = c.metrics.predicted_units;
    jc["relevance_confusion"] = c.metrics.relevance_confusion;
    jc["sentiment_confusion"] = c.metrics.sentiment_confusion;
    doc.push_back(std::move(jc));
  }
  return doc.dump(2) + "\n";
}

ComparisonTable compare_backends(std::span<const GoldAnnotation> gold, const Taxonomy& taxonomy,
                                 const std::vector<const ExtractionBackend*>& backends) {
  ComparisonTable table;
  for (const ExtractionBackend* backend : backends) {
    BackendColumn column;
    column.name = backend->info().name;
    std::vector<std::pair<ExtractionResult, GoldAnnotation>> pairs;
    pairs.reserve(gold.size());
    for (const GoldAnnotation& g : gold) {
      try {
        pairs.emplace_back(backend->extract(g.entry, taxonomy), g);
      } catch (const MissingPrediction&) {
        column.complete = false;
      }
    }
    column.covered_entries = pairs.size();
    if (!pairs.empty()) column.metrics = compute_metrics(pairs);
    table.columns.push_back(std::move(column));
  }
  return table;
}

}  // namespace hq
