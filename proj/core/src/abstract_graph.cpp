#include "ribbon/abstract_graph.hpp"

#include <numeric>

#include "ribbon/errors.hpp"

namespace ribbon {

namespace {

struct UnionFind {
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  std::vector<int> parent;
};

}  // namespace

int component_count(const AbstractGraph& g, unsigned long mask) {
  UnionFind uf(g.vertex_count);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (mask & (1ul << i)) uf.unite(g.edges[i].u, g.edges[i].v);
  }
  int k = 0;
  for (int v = 0; v < g.vertex_count; ++v)
    if (uf.find(v) == v) ++k;
  return k;
}

int component_count(const AbstractGraph& g) {
  if (g.edges.size() >= 64) throw precondition_error("graph too large for subset enumeration");
  return component_count(g, ~0ul);
}

Laurent rank_polynomial(const AbstractGraph& g, const Laurent& a, const Laurent& b,
                        const Laurent& gamma, const Laurent& delta) {
  const int k_g = component_count(g);
  const int e = static_cast<int>(g.edges.size());
  Laurent out;
  for (unsigned long mask = 0; mask < (1ul << e); ++mask) {
    int in_pos = 0, in_neg = 0, out_pos = 0, out_neg = 0;
    for (int i = 0; i < e; ++i) {
      bool in = mask & (1ul << i);
      if (g.edges[i].sign > 0)
        (in ? in_pos : out_pos)++;
      else
        (in ? in_neg : out_neg)++;
    }
    int k_f = component_count(g, mask);
    int n_f = (in_pos + in_neg) - g.vertex_count + k_f;  // nullity e - v + k
    Laurent term = a.pow(static_cast<unsigned>(out_pos + in_neg));
    term *= b.pow(static_cast<unsigned>(in_pos + out_neg));
    term *= gamma.pow(static_cast<unsigned>(k_f - k_g));
    term *= delta.pow(static_cast<unsigned>(n_f));
    out += term;
  }
  return out;
}

Laurent rank_polynomial(const AbstractGraph& g) {
  return rank_polynomial(g, Laurent::var("alpha"), Laurent::var("beta"), Laurent::var("gamma"),
                         Laurent::var("delta"));
}

Laurent tutte_polynomial(const AbstractGraph& g, const Laurent& big_x, const Laurent& big_y) {
  const int k_g = component_count(g);
  const int e = static_cast<int>(g.edges.size());
  const Laurent xm1 = big_x - Laurent::one();
  const Laurent ym1 = big_y - Laurent::one();
  Laurent out;
  for (unsigned long mask = 0; mask < (1ul << e); ++mask) {
    int k_f = component_count(g, mask);
    int e_f = __builtin_popcountl(mask);
    int n_f = e_f - g.vertex_count + k_f;
    out += xm1.pow(static_cast<unsigned>(k_f - k_g)) * ym1.pow(static_cast<unsigned>(n_f));
  }
  return out;
}

Laurent tutte_polynomial(const AbstractGraph& g) {
  return tutte_polynomial(g, Laurent::var("x"), Laurent::var("y"));
}

Laurent multivariate_tutte(const AbstractGraph& g, const Laurent& q,
                           const std::map<std::string, Laurent>& edge_weights) {
  const int e = static_cast<int>(g.edges.size());
  Laurent out;
  for (unsigned long mask = 0; mask < (1ul << e); ++mask) {
    Laurent term = q.pow(static_cast<unsigned>(component_count(g, mask)));
    for (int i = 0; i < e; ++i) {
      if (!(mask & (1ul << i))) continue;
      auto it = edge_weights.find(g.edges[i].label);
      if (it == edge_weights.end())
        throw precondition_error("multivariate_tutte: missing weight for edge " + g.edges[i].label);
      term *= it->second;
    }
    out += term;
  }
  return out;
}

Laurent multivariate_tutte(const AbstractGraph& g) {
  std::map<std::string, Laurent> weights;
  for (const auto& edge : g.edges) weights.emplace(edge.label, Laurent::var("beta:" + edge.label));
  return multivariate_tutte(g, Laurent::var("q"), weights);
}

}  // namespace ribbon
