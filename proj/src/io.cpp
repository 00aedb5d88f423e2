#include "promo/io.hpp"

#include <fstream>

namespace promo {

using nlohmann::json;

json poset_to_json(const Poset& p) {
    json covers = json::array();
    for (auto [u, v] : p.covers()) covers.push_back({u, v});
    return json{{"n", p.size()}, {"covers", covers}};
}

Poset poset_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("covers"))
        throw std::invalid_argument("poset document needs fields \"n\" and \"covers\"");
    const int n = j.at("n").get<int>();
    if (n < 1) throw std::invalid_argument("poset documents need at least one element");
    std::vector<std::pair<int, int>> rel;
    for (const auto& pair : j.at("covers")) {
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument("cover entries must be pairs");
        rel.emplace_back(pair[0].get<int>(), pair[1].get<int>());
    }
    return Poset(n, rel);
}

json labeling_to_json(const Labeling& l) { return json(l.labels()); }

Labeling labeling_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("labeling document must be an array");
    return Labeling(j.get<std::vector<int>>());
}

json forest_to_json(const InflatedForest& f) {
    json trees = json::array();
    for (const auto& t : f.trees)
        trees.push_back(json{{"parents", t.parent}, {"fibers", t.fiber}});
    return json{{"trees", trees}};
}

InflatedForest forest_from_json(const json& j) {
    if (!j.is_object() || !j.contains("trees"))
        throw std::invalid_argument("forest document needs a \"trees\" field");
    InflatedForest out;
    for (const auto& jt : j.at("trees")) {
        InflatedTree t;
        t.parent = jt.at("parents").get<std::vector<int>>();
        if (jt.contains("fibers"))
            t.fiber = jt.at("fibers").get<std::vector<int>>();
        else
            t.fiber.assign(t.parent.size(), 1);
        out.trees.push_back(std::move(t));
    }
    return out;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void save_json(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << j.dump(2) << '\n';
}

Poset load_poset(const std::string& path) { return poset_from_json(load_json(path)); }

InflatedForest load_forest(const std::string& path) { return forest_from_json(load_json(path)); }

Labeling parse_labeling_arg(const std::string& arg) {
    if (!arg.empty() && arg.front() == '[') return labeling_from_json(json::parse(arg));
    if (arg.find(',') != std::string::npos) {
        std::vector<int> labels;
        std::size_t pos = 0;
        while (pos <= arg.size()) {
            std::size_t next = arg.find(',', pos);
            if (next == std::string::npos) next = arg.size();
            labels.push_back(std::stoi(arg.substr(pos, next - pos)));
            pos = next + 1;
        }
        return Labeling(std::move(labels));
    }
    return labeling_from_json(load_json(arg));
}

}  // namespace promo
