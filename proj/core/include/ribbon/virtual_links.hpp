#pragma once

#include <map>
#include <string>
#include <vector>

#include "ribbon/laurent.hpp"
#include "ribbon/quasitree.hpp"
#include "ribbon/ribbon_graph.hpp"

namespace ribbon {

// One passage of a component through a classical crossing.
struct Passage {
  std::string crossing;
  bool over = true;
  int sign = +1;
};

// Virtual link diagram as a Gauss code: one cyclic passage sequence per
// component. Virtual crossings are not represented; every derived quantity
// is recovered on the ribbon-graph side.
struct VirtualDiagram {
  std::vector<std::vector<Passage>> components;

  std::vector<std::string> crossing_labels() const;  // sorted
  std::size_t crossing_count() const { return crossing_labels().size(); }
};

void validate(const VirtualDiagram& d);
VirtualDiagram parse_gauss(const std::string& text);
std::string serialize_gauss(const VirtualDiagram& d);

// A-/B-assignment for every classical crossing.
using State = std::map<std::string, char>;

// States in binary order: the highest crossing varies fastest, A before B.
std::vector<State> all_states(const VirtualDiagram& d);

// A resolved state: counts and the state circles with their crossing marks
// in traversal order (each mark labels the circle like an Arrow of the
// associated ribbon graph).
struct ResolvedState {
  long a_count = 0;
  long b_count = 0;
  long circle_count = 0;
  std::vector<std::vector<Arrow>> circles;
};

ResolvedState resolve_state(const VirtualDiagram& d, const State& state);

// [L](A,B,d) = sum over states of A^a B^b d^{c-1}.
Laurent kauffman_statesum(const VirtualDiagram& d);

// The signed ribbon graph of a state: one circle per state circle, one edge
// per crossing, sign + for A-splittings and - for B.
RibbonGraph state_ribbon_graph(const VirtualDiagram& d, const State& state);

// States with exactly one circle, computed both by direct filtering and by
// pulling the quasi-trees of the base state's ribbon graph through the
// state/subgraph bijection; the two routes must agree.
std::vector<State> connected_states(const VirtualDiagram& d, const State& base);

// Kauffman bracket assembled over connected states only:
// sum A^a B^b (1+Bd/A)^{|live orientable A-crossings|} (1+Ad/B)^{|... B|}.
Laurent connected_state_expansion(const VirtualDiagram& d, const EdgeOrder& order);

// Knot-side activity classification on a connected state's circle: a crossing
// is live when no lower-ordered label appears exactly once between its two
// marks, orientable when its marks carry opposite senses.
struct CrossingClasses {
  EdgeSet live_orientable_a;  // resolved by A-splittings
  EdgeSet live_orientable_b;
};

CrossingClasses live_orientable_crossings(const VirtualDiagram& d, const State& connected_state,
                                          const EdgeOrder& order);

}  // namespace ribbon
