#include "ribbon/duality.hpp"

#include "ribbon/errors.hpp"

namespace ribbon {

RibbonGraph partial_dual(const RibbonGraph& g, const EdgeSet& subset) {
  RibbonGraph out;
  out.circles = boundary_components(g, subset);
  for (const auto& [label, sign] : g.signs)
    out.signs[label] = subset.count(label) ? -sign : sign;
  return out;
}

RibbonGraph natural_dual(const RibbonGraph& g) { return partial_dual(g, g.edge_set()); }

RibbonGraph remove_edge(const RibbonGraph& g, const std::string& edge) {
  if (!g.has_edge(edge)) throw precondition_error("remove_edge: unknown edge " + edge);
  RibbonGraph out;
  out.circles.reserve(g.circles.size());
  for (const auto& circle : g.circles) {
    std::vector<Arrow> kept;
    for (const auto& arrow : circle)
      if (arrow.edge != edge) kept.push_back(arrow);
    out.circles.push_back(std::move(kept));
  }
  out.signs = g.signs;
  out.signs.erase(edge);
  return out;
}

RibbonGraph contract_edge(const RibbonGraph& g, const std::string& edge) {
  if (!g.has_edge(edge)) throw precondition_error("contract_edge: unknown edge " + edge);
  return remove_edge(partial_dual(g, {edge}), edge);
}

bool edges_cross(const RibbonGraph& g, const std::string& e1, const std::string& e2) {
  if (g.circles.size() != 1) throw precondition_error("edges_cross: graph must have one vertex");
  if (e1 == e2) throw precondition_error("edges_cross: edges must be distinct");
  if (!g.has_edge(e1) || !g.has_edge(e2)) throw precondition_error("edges_cross: unknown edge");
  const auto& word = g.circles[0];
  int first = -1, between = 0;
  bool counting = false;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i].edge == e1) {
      if (first < 0) {
        first = static_cast<int>(i);
        counting = true;
      } else {
        counting = false;
      }
    } else if (counting && word[i].edge == e2) {
      ++between;
    }
  }
  return between % 2 == 1;
}

bool edges_link(const RibbonGraph& g, const EdgeSet& quasi_tree, const std::string& e1,
                const std::string& e2) {
  RibbonGraph dual = partial_dual(g, quasi_tree);
  if (dual.circles.size() != 1)
    throw precondition_error("edges_link: subset is not a quasi-tree");
  return edges_cross(dual, e1, e2);
}

}  // namespace ribbon
