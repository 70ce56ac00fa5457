#include <json.hpp>
#include <stdexcept>

#include "coinv/bv.hpp"

namespace coinv {

namespace {

using nlohmann::json;

FinAbGroup group_from(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("\"group\" must be an array of moduli");
  std::vector<std::int64_t> moduli;
  for (const json& m : j) {
    if (!m.is_number_integer()) throw std::invalid_argument("group moduli must be integers");
    moduli.push_back(m.get<std::int64_t>());
  }
  return FinAbGroup(moduli);
}

GroupElt element_from(const FinAbGroup& G, const json& j) {
  if (!j.is_array()) throw std::invalid_argument("cell label must be an exponent array");
  std::vector<std::int64_t> exps;
  for (const json& e : j) {
    if (!e.is_number_integer()) throw std::invalid_argument("exponents must be integers");
    exps.push_back(e.get<std::int64_t>());
  }
  if (exps.size() != G.rank())
    throw std::invalid_argument("cell label has " + std::to_string(exps.size()) + " exponents, group rank is " +
                                std::to_string(G.rank()));
  return G.element(exps);
}

std::string name_from(const json& tower) {
  if (!tower.is_object() || !tower.contains("name") || !tower["name"].is_string())
    throw std::invalid_argument("every tower needs a string \"name\"");
  return tower["name"].get<std::string>();
}

OrderedBVDiagram diagram_from(const json& root) {
  if (!root.is_object() || !root.contains("group") || !root.contains("levels"))
    throw std::invalid_argument("diagram needs \"group\" and \"levels\"");
  FinAbGroup G = group_from(root["group"]);
  const json& levels = root["levels"];
  if (!levels.is_array() || levels.empty()) throw std::invalid_argument("\"levels\" must be a nonempty array");
  std::vector<BaseTower> base;
  for (const json& t : levels[0]) {
    if (!t.contains("cells") || !t["cells"].is_array())
      throw std::invalid_argument("level 1 tower needs a \"cells\" array");
    BaseTower bt{name_from(t), {}};
    for (const json& c : t["cells"]) bt.cells.push_back(element_from(G, c));
    base.push_back(std::move(bt));
  }
  std::vector<std::vector<UpperTower>> upper;
  for (std::size_t l = 1; l < levels.size(); ++l) {
    if (!levels[l].is_array()) throw std::invalid_argument("each level must be an array of towers");
    std::vector<UpperTower> towers;
    for (const json& t : levels[l]) {
      if (!t.contains("traversal") || !t["traversal"].is_array())
        throw std::invalid_argument("level " + std::to_string(l + 1) + " tower needs a \"traversal\" array");
      UpperTower ut{name_from(t), {}};
      for (const json& n : t["traversal"]) {
        if (!n.is_string()) throw std::invalid_argument("traversal entries must be tower names");
        ut.traversal.push_back(n.get<std::string>());
      }
      towers.push_back(std::move(ut));
    }
    upper.push_back(std::move(towers));
  }
  return OrderedBVDiagram::create(G, std::move(base), std::move(upper));
}

json diagram_to(const OrderedBVDiagram& d) {
  json root;
  root["group"] = d.group().moduli();
  json levels = json::array();
  json base = json::array();
  for (const BaseTower& t : d.base()) {
    json cells = json::array();
    for (const GroupElt& g : t.cells) cells.push_back(g.exponents());
    base.push_back({{"name", t.name}, {"cells", cells}});
  }
  levels.push_back(base);
  for (std::size_t level = 2; level <= d.level_count(); ++level) {
    json towers = json::array();
    for (const UpperTower& t : d.upper(level)) towers.push_back({{"name", t.name}, {"traversal", t.traversal}});
    levels.push_back(towers);
  }
  root["levels"] = levels;
  return root;
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed diagram JSON: ") + e.what());
  }
}

}  // namespace

OrderedBVDiagram parse_diagram(const std::string& json_text) { return diagram_from(parse_text(json_text)); }

std::string serialize_diagram(const OrderedBVDiagram& d) { return diagram_to(d).dump(2) + "\n"; }

std::pair<OrderedBVDiagram, OrderedBVDiagram> parse_diagram_pair(const std::string& json_text) {
  json root = parse_text(json_text);
  if (!root.is_object() || !root.contains("x") || !root.contains("y"))
    throw std::invalid_argument("diagram pair needs \"x\" and \"y\"");
  return {diagram_from(root["x"]), diagram_from(root["y"])};
}

std::string serialize_diagram_pair(const OrderedBVDiagram& x, const OrderedBVDiagram& y) {
  json root;
  root["x"] = diagram_to(x);
  root["y"] = diagram_to(y);
  return root.dump(2) + "\n";
}

}  // namespace coinv
