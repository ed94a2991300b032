#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ribbon/abstract_graph.hpp"

namespace ribbon {

// One directed arrow of an arrow presentation. `forward` means the arrow
// points with its host circle's reference orientation (the '>' token).
struct Arrow {
  std::string edge;
  bool forward = true;

  friend bool operator==(const Arrow& a, const Arrow& b) {
    return a.edge == b.edge && a.forward == b.forward;
  }
};

using EdgeSet = std::set<std::string>;

// Ribbon graph in arrow-presentation form: oriented circles carrying the two
// same-labelled arrows of each edge, plus a sign per edge. A circle with no
// arrows is an isolated vertex; a graph with no circles is the empty graph.
struct RibbonGraph {
  std::vector<std::vector<Arrow>> circles;
  std::map<std::string, int> signs;  // edge -> +1 / -1

  EdgeSet edge_set() const;
  std::size_t edge_count() const { return signs.size(); }
  bool has_edge(const std::string& label) const { return signs.count(label) != 0; }
  int sign(const std::string& label) const;
  int negative_edge_count() const;
  int negative_edge_count(const EdgeSet& within) const;
  int positive_edge_count(const EdgeSet& within) const;
};

struct GraphCounts {
  long v = 0;  // vertices (circles)
  long e = 0;  // edges
  long k = 0;  // components
  long r = 0;  // rank v - k
  long n = 0;  // nullity e - r
  long f = 0;  // boundary components (faces)
  int t = 0;   // 0 orientable, 1 not
};

// Checks the arrow-pairing and sign-domain invariants; throws parse_error.
void validate(const RibbonGraph& g);

RibbonGraph parse_ribbon(const std::string& text);
std::string serialize_ribbon(const RibbonGraph& g);

// Boundary components of the spanning subribbon graph keeping only the edges
// in `attached`. Edges outside `attached` are transcribed as marking arrows
// where the walk passes their line segments; attached edges contribute their
// two band-side arrows. The result is the circle list of the partial dual.
std::vector<std::vector<Arrow>> boundary_components(const RibbonGraph& g, const EdgeSet& attached);

// Keeps all circles, drops the arrows and signs of edges outside `keep`.
RibbonGraph spanning_subgraph(const RibbonGraph& g, const EdgeSet& keep);

bool orientable(const RibbonGraph& g);
bool subgraph_orientable(const RibbonGraph& g, const EdgeSet& keep);

GraphCounts counts(const RibbonGraph& g);
GraphCounts subgraph_counts(const RibbonGraph& g, const EdgeSet& keep);

// Forgets the embedding; vertices are circle indices.
AbstractGraph underlying_graph(const RibbonGraph& g);

bool connected(const RibbonGraph& g);

// Canonical serialization invariant under circle order, circle rotation and
// per-circle orientation flips (the arrow-presentation symmetries). Edge
// labels are respected; this is relabel-free structural equality.
std::string canonical_form(const RibbonGraph& g);
bool same_graph(const RibbonGraph& a, const RibbonGraph& b);

}  // namespace ribbon
