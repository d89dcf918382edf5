#include "hq/taxonomy.hpp"

#include <algorithm>

#include <json.hpp>

#include "hq/errors.hpp"
#include "hq/util.hpp"

namespace hq {

Taxonomy::Taxonomy(std::vector<Category> categories, std::vector<Indicator> indicators)
    : categories_(std::move(categories)), indicators_(std::move(indicators)) {
  std::sort(categories_.begin(), categories_.end(),
            [](const Category& a, const Category& b) { return a.id < b.id; });
  std::sort(indicators_.begin(), indicators_.end(),
            [](const Indicator& a, const Indicator& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < indicators_.size(); ++i) {
    by_id_.emplace(indicators_[i].id.str(), i);
  }
}

const Indicator* Taxonomy::find(IndicatorId id) const {
  auto it = by_id_.find(id.str());
  return it == by_id_.end() ? nullptr : &indicators_[it->second];
}

const Category* Taxonomy::find_category(int id) const {
  for (const Category& c : categories_) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

void Taxonomy::validate() const {
  for (std::size_t i = 1; i < categories_.size(); ++i) {
    if (categories_[i].id == categories_[i - 1].id) {
      throw ValidationError("duplicate category id: " + std::to_string(categories_[i].id));
    }
  }
  for (std::size_t i = 1; i < indicators_.size(); ++i) {
    if (indicators_[i].id == indicators_[i - 1].id) {
      throw ValidationError("duplicate indicator id: " + indicators_[i].id.str());
    }
  }
  for (const Indicator& ind : indicators_) {
    if (!ind.id.valid()) {
      throw ValidationError("invalid indicator id: " + ind.id.str());
    }
    if (!find_category(ind.category)) {
      throw ValidationError("indicator " + ind.id.str() + " references missing category " +
                            std::to_string(ind.category));
    }
    if (ind.category != ind.id.category) {
      throw ValidationError("indicator " + ind.id.str() + " category ref " +
                            std::to_string(ind.category) + " does not match its id prefix");
    }
    if (ind.keywords.empty()) {
      throw ValidationError("indicator " + ind.id.str() + " has an empty keyword list");
    }
  }
}

Taxonomy taxonomy_from_json(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("taxonomy: invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("categories") || !doc.contains("indicators")) {
    throw ParseError("taxonomy: expected top-level keys 'categories' and 'indicators'");
  }

  std::vector<Category> categories;
  for (const auto& jc : doc["categories"]) {
    Category c;
    if (!jc.contains("id") || !jc["id"].is_number_integer() || !jc.contains("name")) {
      throw ParseError("taxonomy: category needs integer 'id' and 'name'");
    }
    c.id = jc["id"].get<int>();
    c.name = jc["name"].get<std::string>();
    if (jc.contains("name_local")) c.name_local = jc["name_local"].get<std::string>();
    categories.push_back(std::move(c));
  }

  std::vector<Indicator> indicators;
  for (const auto& ji : doc["indicators"]) {
    Indicator ind;
    if (!ji.contains("id") || !ji["id"].is_string() || !ji.contains("name")) {
      throw ParseError("taxonomy: indicator needs string 'id' and 'name'");
    }
    std::string id_str = ji["id"].get<std::string>();
    auto id = IndicatorId::parse(id_str);
    if (!id) throw ParseError("taxonomy: bad indicator id '" + id_str + "'");
    ind.id = *id;
    ind.name = ji["name"].get<std::string>();
    if (ji.contains("name_local")) ind.name_local = ji["name_local"].get<std::string>();
    ind.category = ji.contains("category") ? ji["category"].get<int>() : id->category;
    if (ji.contains("keywords")) {
      for (const auto& kw : ji["keywords"]) ind.keywords.push_back(kw.get<std::string>());
    }
    indicators.push_back(std::move(ind));
  }

  Taxonomy taxonomy(std::move(categories), std::move(indicators));
  taxonomy.validate();
  return taxonomy;
}

Taxonomy load_taxonomy(const std::string& path) {
  return taxonomy_from_json(read_file(path));
}

std::vector<std::string> validate_unit(const EvaluationUnit& unit, const Taxonomy& taxonomy) {
  std::vector<std::string> violations;
  if (unit.object_text.empty()) violations.push_back("empty object_text");
  if (unit.content_text.empty()) violations.push_back("empty content_text");
  if (!unit.sentiment.valid()) {
    violations.push_back("sentiment out of range: " + std::to_string(unit.sentiment.value));
  }
  if (!taxonomy.has(unit.indicator)) {
    violations.push_back("unknown indicator: " + unit.indicator.str());
  }
  return violations;
}

}  // namespace hq
