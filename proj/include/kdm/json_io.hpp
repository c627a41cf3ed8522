#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "kdm/graph.hpp"
#include "kdm/labeling.hpp"

namespace kdm {

// Canonical form: {"p": int, "edges": [[u,v],...]} with u < v, sorted.
inline nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges())
    edges.push_back(nlohmann::json::array({u, v}));
  return nlohmann::json{{"p", g.vertex_count()}, {"edges", edges}};
}

inline Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("edges"))
    throw std::invalid_argument("graph JSON needs keys \"p\" and \"edges\"");
  Graph g(j.at("p").get<int>());
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("each edge must be a pair [u, v]");
    g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
  }
  return g;
}

inline nlohmann::json labeling_to_json(const Labeling& f) {
  return nlohmann::json{{"labels", f.labels}};
}

inline Labeling labeling_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("labels"))
    throw std::invalid_argument("labeling JSON needs key \"labels\"");
  return Labeling{j.at("labels").get<std::vector<int>>()};
}

// DOT output; `names` (when given) supplies display names such as u1/v3,
// and `labels` (when given) appends the vertex label after a colon.
inline std::string to_dot(const Graph& g,
                          const std::vector<std::string>& names = {},
                          const std::vector<int>& labels = {}) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::string display =
        v < static_cast<int>(names.size()) ? names[v] : std::to_string(v);
    if (v < static_cast<int>(labels.size()))
      display += ":" + std::to_string(labels[v]);
    out << "  " << v << " [label=\"" << display << "\"];\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace kdm
