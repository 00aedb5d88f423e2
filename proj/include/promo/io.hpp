#pragma once

#include <string>

#include <json.hpp>

#include "promo/inflation.hpp"
#include "promo/poset.hpp"

namespace promo {

// Poset documents look like {"n":4,"covers":[[0,1],[0,2],[1,3],[2,3]]};
// transitively implied pairs are accepted and canonicalized away on load.
nlohmann::json poset_to_json(const Poset& p);
Poset poset_from_json(const nlohmann::json& j);

// Labelings are arrays of n labels in 1..n indexed by element id.
nlohmann::json labeling_to_json(const Labeling& l);
Labeling labeling_from_json(const nlohmann::json& j);

// Forest specs: {"trees":[{"parents":[-1,0,0,1,1],"fibers":[1,1,2,1,1]}]}.
nlohmann::json forest_to_json(const InflatedForest& f);
InflatedForest forest_from_json(const nlohmann::json& j);

nlohmann::json load_json(const std::string& path);
void save_json(const nlohmann::json& j, const std::string& path);

Poset load_poset(const std::string& path);
InflatedForest load_forest(const std::string& path);

/// CLI labeling argument: inline JSON ("[2,1,3]"), a comma list ("2,1,3"),
/// or a path to a JSON array file.
Labeling parse_labeling_arg(const std::string& arg);

}  // namespace promo
