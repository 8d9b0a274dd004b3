#include <algorithm>
#include <stdexcept>

#include "json.hpp"
#include "nsmb/semantics.hpp"

namespace nsmb {

using nlohmann::json;

Model model_from_json(const std::string& text) {
  json j = json::parse(text);
  Model m;
  for (const auto& w : j.at("worlds")) m.worlds.push_back(w.get<std::string>());
  for (const auto& row : j.at("rel")) {
    std::vector<Rat> r;
    for (const auto& v : row) r.push_back(Rat::parse(v.get<std::string>()));
    m.rel.push_back(std::move(r));
  }
  if (j.contains("val")) {
    for (const auto& [atom, ws] : j.at("val").items()) {
      std::set<int>& s = m.val[atom];
      for (const auto& w : ws) {
        int i = m.world_index(w.get<std::string>());
        if (i < 0) throw std::invalid_argument("valuation names unknown world " + w.get<std::string>());
        s.insert(i);
      }
    }
  }
  m.validate();
  return m;
}

std::string model_to_json(const Model& m) {
  json j;
  j["worlds"] = m.worlds;
  json rel = json::array();
  for (const auto& row : m.rel) {
    json r = json::array();
    for (const auto& v : row) r.push_back(v.str());
    rel.push_back(std::move(r));
  }
  j["rel"] = std::move(rel);
  json val = json::object();
  for (const auto& [atom, ws] : m.val) {
    json names = json::array();
    for (int w : ws) names.push_back(m.worlds[w]);
    val[atom] = std::move(names);
  }
  j["val"] = std::move(val);
  return j.dump(2);
}

std::string model_to_dot(const Model& m) {
  std::string out = "graph model {\n";
  for (std::size_t i = 0; i < m.worlds.size(); ++i) {
    std::string atoms;
    for (const auto& [atom, ws] : m.val)
      if (ws.count(static_cast<int>(i))) atoms += (atoms.empty() ? "" : ",") + atom;
    out += "  \"" + m.worlds[i] + "\" [label=\"" + m.worlds[i] +
           (atoms.empty() ? "" : "\\n" + atoms) + "\"];\n";
  }
  for (std::size_t i = 0; i < m.worlds.size(); ++i)
    for (std::size_t j = i + 1; j < m.worlds.size(); ++j)
      if (m.rel[i][j] != Rat(0))
        out += "  \"" + m.worlds[i] + "\" -- \"" + m.worlds[j] + "\" [label=\"" +
               m.rel[i][j].str() + "\"];\n";
  out += "}\n";
  return out;
}

}  // namespace nsmb
