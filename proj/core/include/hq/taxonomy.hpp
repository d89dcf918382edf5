#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hq/types.hpp"

namespace hq {

struct Category {
  int id = 0;
  std::string name;
  std::string name_local;  // optional
};

struct Indicator {
  IndicatorId id;
  std::string name;
  std::string name_local;  // optional
  int category = 0;        // must reference an existing category
  std::vector<std::string> keywords;
};

// The housing-quality schema: categories and their indicators, loaded from a
// JSON file. Immutable after construction.
class Taxonomy {
 public:
  Taxonomy() = default;
  Taxonomy(std::vector<Category> categories, std::vector<Indicator> indicators);

  const std::vector<Category>& categories() const { return categories_; }
  const std::vector<Indicator>& indicators() const { return indicators_; }

  bool has(IndicatorId id) const { return find(id) != nullptr; }
  const Indicator* find(IndicatorId id) const;
  const Category* find_category(int id) const;

  // Throws ValidationError naming the first offending id.
  void validate() const;

 private:
  std::vector<Category> categories_;    // sorted by id
  std::vector<Indicator> indicators_;   // sorted by (category, indicator)
  std::unordered_map<std::string, std::size_t> by_id_;
};

// Parses and validates the documented JSON schema:
//   {"categories": [{"id", "name", "name_local"?}, ...],
//    "indicators": [{"id": "4.1", "name", "name_local"?, "category"?, "keywords": [...]}, ...]}
// An absent "category" defaults to the id's dotted prefix.
Taxonomy taxonomy_from_json(const std::string& json_text);
Taxonomy load_taxonomy(const std::string& path);

// Empty result means the unit satisfies every invariant against the taxonomy.
std::vector<std::string> validate_unit(const EvaluationUnit& unit, const Taxonomy& taxonomy);

}  // namespace hq
