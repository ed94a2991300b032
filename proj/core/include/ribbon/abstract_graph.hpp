#pragma once

#include <map>
#include <string>
#include <vector>

#include "ribbon/laurent.hpp"

namespace ribbon {

// Ordinary multigraph with signed, labelled edges; loops allowed.
struct AbstractGraph {
  struct Edge {
    int u = 0;
    int v = 0;
    int sign = +1;  // +1 or -1
    std::string label;
  };

  int vertex_count = 0;
  std::vector<Edge> edges;
};

// Number of connected components when only the edges selected by `mask`
// (bit i = edges[i]) are present; isolated vertices count.
int component_count(const AbstractGraph& g, unsigned long mask);
int component_count(const AbstractGraph& g);

// Rank polynomial: sum over spanning subgraphs F of
//   a^{e+(F̄)+e-(F)} b^{e+(F)+e-(F̄)} g^{k(F)-k(G)} d^{n(F)}.
Laurent rank_polynomial(const AbstractGraph& g, const Laurent& a, const Laurent& b,
                        const Laurent& gamma, const Laurent& delta);
// Same, in the abstract variables alpha, beta, gamma, delta.
Laurent rank_polynomial(const AbstractGraph& g);

// Tutte polynomial via the subgraph expansion
//   sum_F (X-1)^{k(F)-k(G)} (Y-1)^{n(F)}, evaluated at arbitrary arguments.
Laurent tutte_polynomial(const AbstractGraph& g, const Laurent& big_x, const Laurent& big_y);
Laurent tutte_polynomial(const AbstractGraph& g);  // in x, y

// Multivariate Tutte polynomial: sum_F q^{k(F)} prod_{e in F} beta_e, where
// `edge_weights` maps edge label -> weight.
Laurent multivariate_tutte(const AbstractGraph& g, const Laurent& q,
                           const std::map<std::string, Laurent>& edge_weights);
// Default weights beta:<label>.
Laurent multivariate_tutte(const AbstractGraph& g);

}  // namespace ribbon
