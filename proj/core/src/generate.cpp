#include "ribbon/generate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "ribbon/errors.hpp"

namespace ribbon {

namespace {

std::string edge_name(int index) { return "e" + std::to_string(index + 1); }

// Arrangements of 2e arrow slots into unordered cycles, built by inserting
// items one at a time (each item opens a cycle or follows a placed item).
// Items are slot ids; slot 2i and 2i+1 are the arrows of edge i.
void cycle_arrangements(int items, int max_cycles,
                        const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
  std::vector<std::vector<int>> cycles;
  std::function<void(int)> place = [&](int item) {
    if (item == items) {
      emit(cycles);
      return;
    }
    if (static_cast<int>(cycles.size()) < max_cycles) {
      cycles.push_back({item});
      place(item + 1);
      cycles.pop_back();
    }
    for (auto& cycle : cycles) {
      for (std::size_t at = 0; at < cycle.size(); ++at) {
        cycle.insert(cycle.begin() + static_cast<long>(at) + 1, item);
        place(item + 1);
        cycle.erase(cycle.begin() + static_cast<long>(at) + 1);
      }
    }
  };
  place(0);
}

RibbonGraph assemble(const std::vector<std::vector<int>>& cycles, int edges, unsigned dir_mask,
                     unsigned sign_mask) {
  RibbonGraph g;
  for (const auto& cycle : cycles) {
    std::vector<Arrow> circle;
    for (int slot : cycle)
      circle.push_back(Arrow{edge_name(slot / 2), (dir_mask >> slot & 1u) != 0});
    g.circles.push_back(std::move(circle));
  }
  for (int i = 0; i < edges; ++i) g.signs[edge_name(i)] = (sign_mask >> i & 1u) ? -1 : +1;
  return g;
}

// Canonical form minimized over edge relabellings, for deduplication.
std::string relabel_free_form(const RibbonGraph& g) {
  std::vector<std::string> labels;
  for (const auto& [label, sign] : g.signs) labels.push_back(label);
  std::string best;
  std::vector<int> perm(labels.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  do {
    std::map<std::string, std::string> rename;
    for (std::size_t i = 0; i < labels.size(); ++i) rename[labels[i]] = edge_name(perm[i]);
    RibbonGraph renamed;
    renamed.circles = g.circles;
    for (auto& circle : renamed.circles)
      for (auto& arrow : circle) arrow.edge = rename.at(arrow.edge);
    for (const auto& [label, sign] : g.signs) renamed.signs[rename.at(label)] = sign;
    std::string form = canonical_form(renamed);
    if (best.empty() || form < best) best = form;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<RibbonGraph> enumerate_connected_graphs(int max_edges) {
  if (max_edges > 3) throw precondition_error("enumerate_connected_graphs: too many edges");
  std::vector<RibbonGraph> out;
  std::set<std::string> seen;

  // The one-vertex, zero-edge graph is connected.
  RibbonGraph point;
  point.circles.push_back({});
  out.push_back(point);

  for (int edges = 1; edges <= max_edges; ++edges) {
    const int slots = 2 * edges;
    cycle_arrangements(slots, edges + 1, [&](const std::vector<std::vector<int>>& cycles) {
      for (unsigned dir_mask = 0; dir_mask < (1u << slots); ++dir_mask) {
        RibbonGraph unsigned_graph = assemble(cycles, edges, dir_mask, 0);
        if (!connected(unsigned_graph)) continue;
        std::string shape = relabel_free_form(unsigned_graph);
        if (!seen.insert(shape).second) continue;
        for (unsigned sign_mask = 0; sign_mask < (1u << edges); ++sign_mask)
          out.push_back(assemble(cycles, edges, dir_mask, sign_mask));
      }
    });
  }
  return out;
}

RibbonGraph random_connected_graph(int edges, std::mt19937& rng) {
  if (edges < 1) throw precondition_error("random_connected_graph: need at least one edge");
  for (;;) {
    std::uniform_int_distribution<int> vertex_dist(1, edges + 1);
    const int vertices = vertex_dist(rng);
    RibbonGraph g;
    g.circles.assign(static_cast<std::size_t>(vertices), {});
    std::uniform_int_distribution<int> circle_dist(0, vertices - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int i = 0; i < edges; ++i) {
      for (int arrow = 0; arrow < 2; ++arrow) {
        auto& circle = g.circles[static_cast<std::size_t>(circle_dist(rng))];
        std::uniform_int_distribution<int> pos_dist(0, static_cast<int>(circle.size()));
        circle.insert(circle.begin() + pos_dist(rng), Arrow{edge_name(i), coin(rng) == 1});
      }
      g.signs[edge_name(i)] = coin(rng) == 1 ? -1 : +1;
    }
    if (connected(g)) return g;
  }
}

VirtualDiagram random_gauss_code(int crossings, std::mt19937& rng) {
  if (crossings < 1) throw precondition_error("random_gauss_code: need at least one crossing");
  std::uniform_int_distribution<int> comp_dist(1, 2);
  std::uniform_int_distribution<int> coin(0, 1);
  for (;;) {
    const int component_count = comp_dist(rng);
    VirtualDiagram d;
    d.components.assign(static_cast<std::size_t>(component_count), {});
    std::uniform_int_distribution<int> pick(0, component_count - 1);
    for (int i = 0; i < crossings; ++i) {
      std::string label = std::to_string(i + 1);
      int sign = coin(rng) == 1 ? +1 : -1;
      bool first_over = coin(rng) == 1;
      for (int passage = 0; passage < 2; ++passage) {
        auto& component = d.components[static_cast<std::size_t>(pick(rng))];
        std::uniform_int_distribution<int> pos_dist(0, static_cast<int>(component.size()));
        component.insert(component.begin() + pos_dist(rng),
                         Passage{label, passage == 0 ? first_over : !first_over, sign});
      }
    }
    bool all_used = true;
    for (const auto& component : d.components) all_used = all_used && !component.empty();
    if (!all_used) continue;
    // Split diagrams have no connected state at all; require the components
    // to share a crossing so the state graphs come out connected.
    if (component_count == 2) {
      bool shared = false;
      for (const auto& passage : d.components[0])
        for (const auto& other : d.components[1])
          if (passage.crossing == other.crossing) shared = true;
      if (!shared) continue;
    }
    return d;
  }
}

}  // namespace ribbon
