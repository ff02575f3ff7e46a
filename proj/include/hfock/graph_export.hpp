#pragma once

// DOT and JSON renderings of crystal graphs.

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "core.hpp"
#include "heisenberg.hpp"
#include "kashiwara.hpp"

namespace hfock {

/// Graph in a rendering-neutral form: nodes in breadth-first order, edges in
/// discovery order.
struct LabeledGraph {
  std::string type;
  std::vector<ChargedMultipartition> nodes;
  std::vector<int> depth;
  struct Edge {
    std::size_t source;
    std::size_t target;
    int label;
  };
  std::vector<Edge> edges;
};

inline LabeledGraph to_labeled(const CrystalGraph& g, Algebra algebra) {
  LabeledGraph out{algebra == Algebra::Ue ? "ue" : "ul", g.nodes, g.depth, {}};
  for (const auto& e : g.edges) out.edges.push_back({e.source, e.target, e.label});
  return out;
}

inline LabeledGraph to_labeled(const HCrystalGraph& g) {
  LabeledGraph out{"h", g.nodes, g.depth, {}};
  for (const auto& e : g.edges) out.edges.push_back({e.source, e.target, e.label});
  return out;
}

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

inline std::string to_dot(const LabeledGraph& g) {
  std::string out = "digraph " + g.type + " {\n";
  for (std::size_t k = 0; k < g.nodes.size(); ++k) {
    out += "  " + detail::dot_quote(to_string(g.nodes[k])) + " [depth=" + std::to_string(g.depth[k]) + "];\n";
  }
  for (const auto& e : g.edges) {
    out += "  " + detail::dot_quote(to_string(g.nodes[e.source])) + " -> " +
           detail::dot_quote(to_string(g.nodes[e.target])) + " [label=\"" + std::to_string(e.label) + "\"];\n";
  }
  return out + "}\n";
}

inline nlohmann::ordered_json to_json_value(const ChargedMultipartition& cmp) {
  nlohmann::ordered_json comps = nlohmann::ordered_json::array();
  for (const auto& p : cmp.components) comps.push_back(p.parts());
  return {{"id", to_string(cmp)}, {"charge", cmp.charge}, {"components", comps}};
}

inline std::string to_json(const LabeledGraph& g) {
  nlohmann::ordered_json doc;
  doc["type"] = g.type;
  doc["nodes"] = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < g.nodes.size(); ++k) {
    auto node = to_json_value(g.nodes[k]);
    node["depth"] = g.depth[k];
    doc["nodes"].push_back(std::move(node));
  }
  doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : g.edges) {
    doc["edges"].push_back({{"source", to_string(g.nodes[e.source])},
                             {"target", to_string(g.nodes[e.target])},
                             {"label", e.label}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace hfock
