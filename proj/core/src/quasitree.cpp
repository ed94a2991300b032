#include "ribbon/quasitree.hpp"

#include <algorithm>
#include <functional>

#include "ribbon/errors.hpp"
#include "ribbon/oracle.hpp"

namespace ribbon {

EdgeOrder default_order(const RibbonGraph& g) {
  EdgeOrder order;
  for (const auto& [label, sign] : g.signs) order.push_back(label);
  return order;
}

void validate_order(const RibbonGraph& g, const EdgeOrder& order) {
  EdgeSet seen(order.begin(), order.end());
  if (seen.size() != order.size() || seen != g.edge_set())
    throw precondition_error("edge order must list every edge exactly once");
}

bool is_quasi_tree(const RibbonGraph& g, const EdgeSet& subset) {
  return boundary_components(g, subset).size() == 1;
}

std::vector<EdgeSet> quasi_trees(const RibbonGraph& g) {
  if (!connected(g)) throw precondition_error("quasi_trees: graph must be connected");
  std::vector<EdgeSet> out;
  for (const auto& subset : all_edge_subsets(g))
    if (is_quasi_tree(g, subset)) out.push_back(subset);
  return out;
}

EdgeSet ActivityPartition::contracted_edges() const {
  EdgeSet out = internal_dead;
  out.insert(internal_live_nonorientable.begin(), internal_live_nonorientable.end());
  return out;
}

namespace {

// Positions of each edge's two arrows on a one-vertex graph's circle word.
bool untwisted_loop(const RibbonGraph& one_vertex, const std::string& edge) {
  bool first_sense = false;
  int seen = 0;
  for (const auto& arrow : one_vertex.circles[0]) {
    if (arrow.edge != edge) continue;
    if (seen++ == 0)
      first_sense = arrow.forward;
    else
      return first_sense != arrow.forward;  // opposite senses = untwisted
  }
  throw precondition_error("edge not on the vertex: " + edge);
}

}  // namespace

ActivityPartition activities(const RibbonGraph& g, const EdgeSet& quasi_tree,
                             const EdgeOrder& order) {
  validate_order(g, order);
  RibbonGraph dual = partial_dual(g, quasi_tree);
  if (dual.circles.size() != 1)
    throw precondition_error("activities: subset is not a quasi-tree");
  ActivityPartition parts;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::string& edge = order[i];
    bool live = true;
    for (std::size_t j = 0; j < i && live; ++j)
      if (edges_cross(dual, edge, order[j])) live = false;
    bool internal = quasi_tree.count(edge) != 0;
    if (!live) {
      (internal ? parts.internal_dead : parts.external_dead).insert(edge);
    } else if (untwisted_loop(dual, edge)) {
      (internal ? parts.internal_live_orientable : parts.external_live_orientable).insert(edge);
    } else {
      (internal ? parts.internal_live_nonorientable : parts.external_live_nonorientable)
          .insert(edge);
    }
  }
  return parts;
}

AbstractGraph contracted_graph(const RibbonGraph& g, const ActivityPartition& parts) {
  AbstractGraph underlying = underlying_graph(g);
  const EdgeSet contracted = parts.contracted_edges();

  // Quotient map: vertex -> component of the spanning subgraph on the
  // contracted edges, numbered in order of smallest member.
  std::vector<int> root(underlying.vertex_count);
  for (int v = 0; v < underlying.vertex_count; ++v) root[v] = v;
  std::function<int(int)> find = [&](int v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  for (const auto& edge : underlying.edges)
    if (contracted.count(edge.label)) root[find(edge.u)] = find(edge.v);

  std::map<int, int> renumber;
  for (int v = 0; v < underlying.vertex_count; ++v) {
    int r = find(v);
    if (!renumber.count(r)) renumber[r] = static_cast<int>(renumber.size());
  }

  AbstractGraph out;
  out.vertex_count = static_cast<int>(renumber.size());
  for (const auto& edge : underlying.edges) {
    if (!parts.internal_live_orientable.count(edge.label)) continue;
    out.edges.push_back(
        AbstractGraph::Edge{renumber[find(edge.u)], renumber[find(edge.v)], edge.sign, edge.label});
  }
  return out;
}

QuasiTreeRecord quasi_tree_record(const RibbonGraph& g, const EdgeSet& quasi_tree,
                                  const EdgeOrder& order) {
  QuasiTreeRecord record;
  record.edges = quasi_tree;
  record.parts = activities(g, quasi_tree, order);
  record.reduced = contracted_graph(g, record.parts);
  record.contracted_counts = subgraph_counts(g, record.parts.contracted_edges());
  return record;
}

// ---------------------------------------------------------------------------
// Resolution tree
// ---------------------------------------------------------------------------

namespace {

std::string resolution_key(const PartialResolution& partial) {
  std::string key;
  for (const auto& [edge, value] : partial) {
    key += edge;
    key += value ? '1' : '0';
    key += ';';
  }
  return key;
}

struct TreeBuilder {
  const RibbonGraph& g;
  const EdgeOrder& order;
  std::vector<std::string> labels;  // all edges, for subset completion
  std::map<std::string, bool> memo;

  bool class_has_quasi_tree(const PartialResolution& partial) {
    std::string key = resolution_key(partial);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::vector<std::string> free_edges;
    EdgeSet base;
    for (const auto& label : labels) {
      auto got = partial.find(label);
      if (got == partial.end())
        free_edges.push_back(label);
      else if (got->second == 1)
        base.insert(label);
    }
    bool found = false;
    for (unsigned long mask = 0; mask < (1ul << free_edges.size()) && !found; ++mask) {
      EdgeSet subset = base;
      for (std::size_t i = 0; i < free_edges.size(); ++i)
        if (mask & (1ul << i)) subset.insert(free_edges[i]);
      found = is_quasi_tree(g, subset);
    }
    memo.emplace(std::move(key), found);
    return found;
  }

  void build(PartialResolution partial, int index, std::vector<ResolutionLeaf>& leaves) {
    if (index < 0) {
      leaves.push_back(make_leaf(std::move(partial)));
      return;
    }
    const std::string& edge = order[static_cast<std::size_t>(index)];
    PartialResolution zero = partial;
    zero[edge] = 0;
    PartialResolution one = partial;
    one[edge] = 1;
    bool zero_has = class_has_quasi_tree(zero);
    bool one_has = class_has_quasi_tree(one);
    if (!zero_has || !one_has) {
      build(std::move(partial), index - 1, leaves);  // nugatory: leave unresolved
    } else {
      build(std::move(zero), index - 1, leaves);
      build(std::move(one), index - 1, leaves);
    }
  }

  ResolutionLeaf make_leaf(PartialResolution partial) {
    ResolutionLeaf leaf;
    leaf.resolved = std::move(partial);
    EdgeSet base;
    std::vector<std::string> free_edges;
    for (const auto& label : labels) {
      auto got = leaf.resolved.find(label);
      if (got == leaf.resolved.end())
        free_edges.push_back(label);
      else if (got->second == 1)
        base.insert(label);
    }
    leaf.unresolved = EdgeSet(free_edges.begin(), free_edges.end());
    int hits = 0;
    for (unsigned long mask = 0; mask < (1ul << free_edges.size()); ++mask) {
      EdgeSet subset = base;
      for (std::size_t i = 0; i < free_edges.size(); ++i)
        if (mask & (1ul << i)) subset.insert(free_edges[i]);
      if (is_quasi_tree(g, subset)) {
        leaf.quasi_tree = std::move(subset);
        ++hits;
      }
    }
    if (hits != 1) throw std::logic_error("resolution leaf does not hold exactly one quasi-tree");
    return leaf;
  }
};

}  // namespace

bool class_contains_quasi_tree(const RibbonGraph& g, const PartialResolution& partial) {
  std::vector<std::string> free_edges;
  EdgeSet base;
  for (const auto& [label, sign] : g.signs) {
    auto got = partial.find(label);
    if (got == partial.end())
      free_edges.push_back(label);
    else if (got->second == 1)
      base.insert(label);
  }
  for (unsigned long mask = 0; mask < (1ul << free_edges.size()); ++mask) {
    EdgeSet subset = base;
    for (std::size_t i = 0; i < free_edges.size(); ++i)
      if (mask & (1ul << i)) subset.insert(free_edges[i]);
    if (is_quasi_tree(g, subset)) return true;
  }
  return false;
}

bool nugatory(const RibbonGraph& g, const PartialResolution& partial, const std::string& edge) {
  if (partial.count(edge)) throw precondition_error("nugatory: edge already resolved");
  if (!g.has_edge(edge)) throw precondition_error("nugatory: unknown edge " + edge);
  PartialResolution zero = partial;
  zero[edge] = 0;
  PartialResolution one = partial;
  one[edge] = 1;
  return !class_contains_quasi_tree(g, zero) || !class_contains_quasi_tree(g, one);
}

std::vector<ResolutionLeaf> resolution_tree(const RibbonGraph& g, const EdgeOrder& order) {
  if (!connected(g)) throw precondition_error("resolution_tree: graph must be connected");
  validate_order(g, order);
  TreeBuilder builder{g, order, {}, {}};
  for (const auto& [label, sign] : g.signs) builder.labels.push_back(label);
  std::vector<ResolutionLeaf> leaves;
  builder.build({}, static_cast<int>(order.size()) - 1, leaves);
  return leaves;
}

SubgraphDecomposition decompose_subgraph(const RibbonGraph& g, const EdgeOrder& order,
                                         const EdgeSet& subgraph) {
  auto leaves = resolution_tree(g, order);
  for (const auto& leaf : leaves) {
    bool matches = true;
    for (const auto& [edge, value] : leaf.resolved) {
      if ((subgraph.count(edge) != 0) != (value == 1)) {
        matches = false;
        break;
      }
    }
    if (!matches) continue;
    ActivityPartition parts = activities(g, leaf.quasi_tree, order);
    SubgraphDecomposition out;
    out.quasi_tree = leaf.quasi_tree;
    for (const auto& edge : subgraph) {
      if (parts.internal_live_orientable.count(edge)) out.internal_part.insert(edge);
      if (parts.external_live_orientable.count(edge)) out.external_part.insert(edge);
    }
    EdgeSet rebuilt = parts.contracted_edges();
    rebuilt.insert(out.internal_part.begin(), out.internal_part.end());
    rebuilt.insert(out.external_part.begin(), out.external_part.end());
    if (rebuilt != subgraph)
      throw std::logic_error("subgraph does not decompose over its quasi-tree packet");
    return out;
  }
  throw std::logic_error("no resolution leaf matches the subgraph");
}

// ---------------------------------------------------------------------------
// Expansions
// ---------------------------------------------------------------------------

namespace {

Laurent monomial_xyz(int hx, int hy, int hz) {
  Exponents exps;
  if (hx != 0) exps["x"] = hx;
  if (hy != 0) exps["y"] = hy;
  if (hz != 0) exps["z"] = hz;
  return Laurent::monomial(1, std::move(exps));
}

std::vector<EdgeSet> quasi_trees_checked(const RibbonGraph& g) {
  if (!connected(g)) throw precondition_error("quasi-tree expansion: graph must be connected");
  return quasi_trees(g);
}

}  // namespace

std::pair<Laurent, Laurent> signed_expansion_factors(const RibbonGraph& g,
                                                     const EdgeSet& quasi_tree,
                                                     const EdgeOrder& order) {
  ActivityPartition parts = activities(g, quasi_tree, order);
  const EdgeSet contracted = parts.contracted_edges();
  const GraphCounts c_di = subgraph_counts(g, contracted);
  AbstractGraph reduced = contracted_graph(g, parts);
  const int rank_reduced = reduced.vertex_count - component_count(reduced);

  const int neg_total = g.negative_edge_count();
  const int neg_di = g.negative_edge_count(contracted);
  const int neg_ext_o = g.negative_edge_count(parts.external_live_orientable);
  const int pos_ext_o = g.positive_edge_count(parts.external_live_orientable);
  const int neg_int_o = g.negative_edge_count(parts.internal_live_orientable);

  // (x^{-1/2} y^{1/2})^{e-(G)}  x^{e-(DI)}  y^{n(F_DI) - e-(DI)}  z^{(k-f+n)(F_DI)}
  Laurent first = monomial_xyz(-neg_total + 2 * neg_di,
                               neg_total + static_cast<int>(2 * c_di.n) - 2 * neg_di,
                               static_cast<int>(2 * (c_di.k - c_di.f + c_di.n)));
  const Laurent one = Laurent::one();
  first *= (one + Laurent::var("x")).pow(static_cast<unsigned>(neg_ext_o));
  first *= (one + Laurent::var("y")).pow(static_cast<unsigned>(pos_ext_o));
  // (x^{1/2} y^{-1/2})^{r(G_Q) + e-(I_o)}
  first *= monomial_xyz(rank_reduced + neg_int_o, -(rank_reduced + neg_int_o), 0);

  Laurent second = rank_polynomial(reduced, one, monomial_xyz(-1, 1, 0), monomial_xyz(1, 1, 0),
                                   monomial_xyz(1, 1, 4));
  return {first, second};
}

Laurent qt_expansion_signed(const RibbonGraph& g, const EdgeOrder& order) {
  validate_order(g, order);
  Laurent out;
  for (const auto& quasi_tree : quasi_trees_checked(g)) {
    auto [first, second] = signed_expansion_factors(g, quasi_tree, order);
    out += first * second;
  }
  // Exponents are integral exactly when e-(G) is even; with an odd number of
  // negative edges every term carries the residual half power.
  if (g.negative_edge_count() % 2 == 0 && !out.has_integral_exponents())
    throw std::logic_error("signed expansion kept a fractional exponent");
  return out;
}

Laurent qt_expansion_w1(const RibbonGraph& g, const EdgeOrder& order) {
  validate_order(g, order);
  if (g.negative_edge_count() != 0)
    throw precondition_error("qt_expansion_w1: graph must be unsigned (all edges positive)");
  Laurent out;
  const Laurent big_y =
      Laurent::one() + Laurent::monomial(1, {{"y", 2}, {"z", 4}});  // y z^2 + 1
  for (const auto& quasi_tree : quasi_trees_checked(g)) {
    ActivityPartition parts = activities(g, quasi_tree, order);
    const GraphCounts c_di = subgraph_counts(g, parts.contracted_edges());
    Laurent term = monomial_xyz(0, static_cast<int>(2 * c_di.n),
                                static_cast<int>(2 * (c_di.k - c_di.f + c_di.n)));
    term *= (Laurent::one() + Laurent::var("y"))
                .pow(static_cast<unsigned>(parts.external_live_orientable.size()));
    term *= tutte_polynomial(contracted_graph(g, parts), Laurent::var("x"), big_y);
    out += term;
  }
  return out;
}

Laurent qt_expansion_multivariate(const RibbonGraph& g, const EdgeOrder& order) {
  validate_order(g, order);
  Laurent out;
  const Laurent c_var = Laurent::var("c");
  const Laurent c_inv = Laurent::var_pow_half("c", -2);
  for (const auto& quasi_tree : quasi_trees_checked(g)) {
    ActivityPartition parts = activities(g, quasi_tree, order);
    const EdgeSet contracted = parts.contracted_edges();
    const GraphCounts c_di = subgraph_counts(g, contracted);
    Exponents lead;
    if (c_di.f != 0) lead["c"] = static_cast<int>(2 * c_di.f);
    for (const auto& edge : contracted) lead["beta:" + edge] = 2;
    Laurent term = Laurent::monomial(1, std::move(lead));
    for (const auto& edge : parts.external_live_orientable)
      term *= Laurent::one() + c_var * Laurent::var("beta:" + edge);
    AbstractGraph reduced = contracted_graph(g, parts);
    std::map<std::string, Laurent> weights;
    for (const auto& edge : reduced.edges)
      weights.emplace(edge.label, Laurent::var("beta:" + edge.label) * c_inv);
    term *= multivariate_tutte(reduced, Laurent::var("q"), weights);
    out += term;
  }
  return out;
}

Laurent quasi_tree_term(const RibbonGraph& g, const EdgeSet& quasi_tree, const EdgeOrder& order) {
  ActivityPartition parts = activities(g, quasi_tree, order);
  const EdgeSet contracted = parts.contracted_edges();
  const GraphCounts c_di = subgraph_counts(g, contracted);

  const Laurent c_var = Laurent::var("c");
  const Laurent q_var = Laurent::var("q");
  Laurent term = Laurent::monomial(1, {{"c", static_cast<int>(2 * c_di.f)}});
  for (const auto& [edge, sign] : g.signs) {
    const std::string alpha = "alpha:" + edge;
    if (sign < 0) term *= Laurent::monomial(1, {{alpha, 2}, {"q", -1}});  // alpha_e / sqrt(q)
    if (contracted.count(edge)) {
      if (sign > 0)
        term *= Laurent::var(alpha);
      else
        term *= Laurent::monomial(1, {{"q", 2}, {alpha, -2}});  // q / alpha_e
    }
  }
  for (const auto& edge : parts.external_live_orientable) {
    const std::string alpha = "alpha:" + edge;
    if (g.sign(edge) > 0)
      term *= Laurent::one() + Laurent::var(alpha) * c_var;
    else
      term *= Laurent::one() + Laurent::monomial(1, {{"q", 2}, {"c", 2}, {alpha, -2}});
  }

  // Z_R(G_Q; q, beta/c) = sum_W q^{k(W)+e-(W)} prod_{E+(W)} alpha_e/c
  //                                           prod_{E-(W)} (alpha_e c)^{-1}
  AbstractGraph reduced = contracted_graph(g, parts);
  const int edges = static_cast<int>(reduced.edges.size());
  Laurent z_r;
  for (unsigned long mask = 0; mask < (1ul << edges); ++mask) {
    int neg_in = 0;
    Exponents exps;
    for (int i = 0; i < edges; ++i) {
      if (!(mask & (1ul << i))) continue;
      const auto& edge = reduced.edges[i];
      if (edge.sign < 0) {
        ++neg_in;
        exps["alpha:" + edge.label] = -2;
        exps["c"] -= 2;
      } else {
        exps["alpha:" + edge.label] = 2;
        exps["c"] -= 2;
      }
    }
    exps["q"] = 2 * (component_count(reduced, mask) + neg_in);
    z_r += Laurent::monomial(1, std::move(exps));
  }
  return term * z_r;
}

Laurent quasi_tree_term_q1(const RibbonGraph& g, const EdgeSet& quasi_tree,
                           const EdgeOrder& order) {
  ActivityPartition parts = activities(g, quasi_tree, order);
  const EdgeSet contracted = parts.contracted_edges();
  const GraphCounts c_di = subgraph_counts(g, contracted);
  const Laurent c_var = Laurent::var("c");

  Exponents lead;
  lead["c"] = static_cast<int>(2 * (c_di.f - static_cast<long>(parts.internal_live_orientable.size())));
  for (const auto& [edge, sign] : g.signs) {
    int halves = 0;
    if (sign < 0) halves += 2;
    if (contracted.count(edge)) halves += sign > 0 ? 2 : -2;
    if (parts.internal_live_orientable.count(edge) || parts.external_live_orientable.count(edge))
      if (sign < 0) halves -= 2;
    if (halves != 0) lead["alpha:" + edge] = halves;
  }
  if (lead["c"] == 0) lead.erase("c");
  Laurent term = Laurent::monomial(1, std::move(lead));

  for (const auto& [edge, sign] : g.signs) {
    const std::string alpha = "alpha:" + edge;
    bool ext_o = parts.external_live_orientable.count(edge) != 0;
    bool int_o = parts.internal_live_orientable.count(edge) != 0;
    if ((sign > 0 && ext_o) || (sign < 0 && int_o))
      term *= Laurent::one() + Laurent::var(alpha) * c_var;  // (1 + alpha_e c)
    if ((sign < 0 && ext_o) || (sign > 0 && int_o))
      term *= Laurent::var(alpha) + c_var;  // (alpha_e + c)
  }
  return term;
}

Laurent q1_expansion(const RibbonGraph& g, const EdgeOrder& order) {
  validate_order(g, order);
  const Laurent alpha = Laurent::var("alpha");
  const Laurent c_var = Laurent::var("c");
  const Laurent one_plus_ac = Laurent::one() + alpha * c_var;
  const Laurent one_plus_c_over_a =
      Laurent::one() + c_var * Laurent::var_pow_half("alpha", -2);
  Laurent sum;
  for (const auto& quasi_tree : quasi_trees_checked(g)) {
    RibbonGraph dual = partial_dual(g, quasi_tree);
    ActivityPartition live = activities(dual, {}, order);
    const EdgeSet& live_orientable = live.external_live_orientable;
    Laurent term = alpha.pow(static_cast<unsigned>(dual.negative_edge_count()));
    term *= one_plus_ac.pow(static_cast<unsigned>(dual.positive_edge_count(live_orientable)));
    term *= one_plus_c_over_a.pow(static_cast<unsigned>(dual.negative_edge_count(live_orientable)));
    sum += term;
  }
  return c_var * sum;
}

EdgeSet symmetric_difference(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::inserter(out, out.begin()));
  return out;
}

}  // namespace ribbon
