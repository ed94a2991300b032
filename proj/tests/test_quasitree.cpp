#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "ribbon/generate.hpp"
#include "ribbon/oracle.hpp"
#include "ribbon/quasitree.hpp"

using namespace ribbon;

namespace {

RibbonGraph one_vertex_three_loops() {
  return parse_ribbon("circle: e2> e1> e2< e3> e1> e3<\n");
}

EdgeSet set_of(std::initializer_list<const char*> labels) {
  EdgeSet out;
  for (const char* label : labels) out.insert(label);
  return out;
}

}  // namespace

TEST_CASE("quasi-tree recognition") {
  RibbonGraph g = one_vertex_three_loops();
  CHECK(is_quasi_tree(g, {}));
  CHECK(is_quasi_tree(parse_ribbon("circle: e1> e1>\n"), {"e1"}));
  CHECK(!is_quasi_tree(parse_ribbon("circle: e1> e1<\n"), {"e1"}));
}

TEST_CASE("quasi-tree sets of the worked examples") {
  // The one-vertex example: the spanning tree F_empty, the twisted loop, and
  // the two crossing pairs found by the toggle lemmas.
  RibbonGraph g = one_vertex_three_loops();
  auto qt = quasi_trees(g);
  std::vector<EdgeSet> expected = {set_of({}), set_of({"e1"}), set_of({"e1", "e2"}),
                                   set_of({"e1", "e3"})};
  CHECK(std::is_permutation(qt.begin(), qt.end(), expected.begin(), expected.end()));

  // A path of two untwisted edges has its spanning tree as the only
  // quasi-tree.
  RibbonGraph path = parse_ribbon("circle: e1>\ncircle: e1< e2>\ncircle: e2<\n");
  auto path_qt = quasi_trees(path);
  REQUIRE(path_qt.size() == 1);
  CHECK(path_qt[0] == set_of({"e1", "e2"}));

  RibbonGraph split;  // disconnected input is rejected
  split.circles = {{}, {}};
  CHECK_THROWS_AS(quasi_trees(split), precondition_error);
}

TEST_CASE("nugatory edges") {
  RibbonGraph untwisted = parse_ribbon("circle: e1> e1<\n");
  CHECK(nugatory(untwisted, {}, "e1"));
  RibbonGraph twisted = parse_ribbon("circle: e1> e1>\n");
  CHECK(!nugatory(twisted, {}, "e1"));
  CHECK_THROWS_AS(nugatory(twisted, {{"e1", 0}}, "e1"), precondition_error);
}

TEST_CASE("resolution tree of the one-vertex example") {
  RibbonGraph g = one_vertex_three_loops();
  EdgeOrder order = {"e1", "e2", "e3"};
  auto leaves = resolution_tree(g, order);
  CHECK(leaves.size() == quasi_trees(g).size());

  // Classes partition the whole resolution cube.
  std::size_t covered = 0;
  for (const auto& leaf : leaves) covered += 1ul << leaf.unresolved.size();
  CHECK(covered == 8);

  // The class of the resolution 100 is a leaf, and so is *10.
  bool saw_100 = false, saw_star10 = false;
  for (const auto& leaf : leaves) {
    if (leaf.resolved == PartialResolution{{"e1", 1}, {"e2", 0}, {"e3", 0}}) saw_100 = true;
    if (leaf.resolved == PartialResolution{{"e2", 1}, {"e3", 0}} &&
        leaf.unresolved == set_of({"e1"}))
      saw_star10 = true;
  }
  CHECK(saw_100);
  CHECK(saw_star10);
}

TEST_CASE("activities of the one-vertex example") {
  RibbonGraph g = one_vertex_three_loops();
  EdgeOrder order = {"e1", "e2", "e3"};

  ActivityPartition at_empty = activities(g, {}, order);
  CHECK(at_empty.external_live_nonorientable == set_of({"e1"}));
  CHECK(at_empty.external_live_orientable.empty());
  CHECK(at_empty.external_dead == set_of({"e2", "e3"}));
  CHECK(at_empty.internal_dead.empty());
  CHECK(at_empty.internal_live_orientable.empty());
  CHECK(at_empty.internal_live_nonorientable.empty());

  ActivityPartition at_loop = activities(g, {"e1"}, order);
  CHECK(at_loop.internal_live_nonorientable == set_of({"e1"}));
  CHECK(at_loop.internal_dead.empty());
  CHECK(at_loop.external_dead == set_of({"e2", "e3"}));

  CHECK_THROWS_AS(activities(g, {"e2"}, order), precondition_error);
}

TEST_CASE("leaf classification matches activities") {
  // Unresolved edges at a leaf are exactly the live orientable ones, and the
  // leaves reproduce the brute-force quasi-tree set.
  for (const auto& g : enumerate_connected_graphs(2)) {
    EdgeOrder order = default_order(g);
    auto leaves = resolution_tree(g, order);
    std::vector<EdgeSet> from_leaves;
    for (const auto& leaf : leaves) from_leaves.push_back(leaf.quasi_tree);
    std::sort(from_leaves.begin(), from_leaves.end());
    auto brute = quasi_trees(g);
    std::sort(brute.begin(), brute.end());
    CHECK(from_leaves == brute);
    for (const auto& leaf : leaves) {
      ActivityPartition parts = activities(g, leaf.quasi_tree, order);
      EdgeSet live_orientable = parts.internal_live_orientable;
      live_orientable.insert(parts.external_live_orientable.begin(),
                             parts.external_live_orientable.end());
      CHECK(leaf.unresolved == live_orientable);
    }
  }
}

TEST_CASE("subgraph decomposition is a bijection onto the packets") {
  for (const auto& g : enumerate_connected_graphs(2)) {
    EdgeOrder order = default_order(g);
    std::map<std::string, int> hits;  // serialized (Q,S1,S2) -> count
    std::size_t expected_total = 0;
    for (const auto& leaf : resolution_tree(g, order)) {
      ActivityPartition parts = activities(g, leaf.quasi_tree, order);
      expected_total += 1ul << (parts.internal_live_orientable.size() +
                                parts.external_live_orientable.size());
    }
    CHECK(expected_total == (1ul << g.edge_count()));

    for (const auto& subset : all_edge_subsets(g)) {
      SubgraphDecomposition dec = decompose_subgraph(g, order, subset);
      ActivityPartition parts = activities(g, dec.quasi_tree, order);
      CHECK(std::includes(parts.internal_live_orientable.begin(),
                          parts.internal_live_orientable.end(), dec.internal_part.begin(),
                          dec.internal_part.end()));
      CHECK(std::includes(parts.external_live_orientable.begin(),
                          parts.external_live_orientable.end(), dec.external_part.begin(),
                          dec.external_part.end()));
      std::string key;
      for (const auto& edge : dec.quasi_tree) key += edge + ",";
      key += "|";
      for (const auto& edge : dec.internal_part) key += edge + ",";
      key += "|";
      for (const auto& edge : dec.external_part) key += edge + ",";
      ++hits[key];
    }
    for (const auto& [key, count] : hits) CHECK(count == 1);
    CHECK(hits.size() == (1ul << g.edge_count()));

    // Picking the quasi-tree itself gives S1 = I_o and S2 empty.
    for (const auto& leaf : resolution_tree(g, order)) {
      SubgraphDecomposition dec = decompose_subgraph(g, order, leaf.quasi_tree);
      ActivityPartition parts = activities(g, leaf.quasi_tree, order);
      CHECK(dec.quasi_tree == leaf.quasi_tree);
      CHECK(dec.internal_part == parts.internal_live_orientable);
      CHECK(dec.external_part.empty());
    }
  }
}

TEST_CASE("face and nullity bookkeeping over packets") {
  // f(F_{DI u S}) = f(F_DI) - |S1| + |S2|, and the nullity variants.
  for (const auto& g : enumerate_connected_graphs(2)) {
    EdgeOrder order = default_order(g);
    for (const auto& subset : all_edge_subsets(g)) {
      SubgraphDecomposition dec = decompose_subgraph(g, order, subset);
      ActivityPartition parts = activities(g, dec.quasi_tree, order);
      EdgeSet di = parts.contracted_edges();
      GraphCounts c_sub = subgraph_counts(g, subset);
      GraphCounts c_di = subgraph_counts(g, di);
      CHECK(c_sub.f == c_di.f - static_cast<long>(dec.internal_part.size()) +
                           static_cast<long>(dec.external_part.size()));

      AbstractGraph reduced = contracted_graph(g, parts);
      unsigned long mask = 0;
      for (std::size_t i = 0; i < reduced.edges.size(); ++i)
        if (dec.internal_part.count(reduced.edges[i].label)) mask |= 1ul << i;
      int k_w = component_count(reduced, mask);
      int n_w = static_cast<int>(dec.internal_part.size()) - reduced.vertex_count + k_w;
      CHECK(c_sub.n == c_di.n + n_w + static_cast<long>(dec.external_part.size()));
      CHECK(c_sub.k - c_sub.f + c_sub.n == c_di.k - c_di.f + c_di.n + 2 * n_w);

      EdgeSet di_s1 = di;
      di_s1.insert(dec.internal_part.begin(), dec.internal_part.end());
      CHECK(c_sub.k == subgraph_counts(g, di_s1).k);
      CHECK(c_sub.k == k_w);
    }
  }
}

TEST_CASE("toggle lemmas") {
  for (const auto& g : enumerate_connected_graphs(2)) {
    for (const auto& quasi_tree : quasi_trees(g)) {
      RibbonGraph dual = partial_dual(g, quasi_tree);
      auto nonorientable_loop = [&](const std::string& edge) {
        int seen = 0;
        bool first = false, same = false;
        for (const auto& arrow : dual.circles[0]) {
          if (arrow.edge != edge) continue;
          if (seen++ == 0)
            first = arrow.forward;
          else
            same = first == arrow.forward;
        }
        return same;
      };

      // Toggling a non-orientable loop of the dual keeps quasi-tree-ness.
      for (const auto& e : g.edge_set())
        if (nonorientable_loop(e))
          CHECK(is_quasi_tree(g, symmetric_difference(quasi_tree, {e})));

      // So does toggling a linking pair with at most one non-orientable member.
      for (const auto& e1 : g.edge_set()) {
        for (const auto& e2 : g.edge_set()) {
          if (e1 >= e2) continue;
          if (!edges_link(g, quasi_tree, e1, e2)) continue;
          if (nonorientable_loop(e1) && nonorientable_loop(e2)) continue;
          EdgeSet pair{e1, e2};
          CHECK(is_quasi_tree(g, symmetric_difference(quasi_tree, pair)));
        }
      }
    }
  }
}

TEST_CASE("the contracted graph has one vertex per component") {
  for (const auto& g : enumerate_connected_graphs(2)) {
    EdgeOrder order = default_order(g);
    for (const auto& quasi_tree : quasi_trees(g)) {
      QuasiTreeRecord record = quasi_tree_record(g, quasi_tree, order);
      CHECK(subgraph_counts(g, record.edges).f == 1);
      CHECK(record.reduced.vertex_count == record.contracted_counts.k);
      EdgeSet reduced_labels;
      for (const auto& edge : record.reduced.edges) reduced_labels.insert(edge.label);
      CHECK(reduced_labels == record.parts.internal_live_orientable);
      for (const auto& edge : record.reduced.edges) CHECK(edge.sign == g.sign(edge.label));
      CHECK(component_count(record.reduced) == 1);
    }
  }
}

TEST_CASE("the signed expansion does not depend on the order") {
  // Exhaustive over the 3! orders of the worked one-vertex example, and over
  // both orders of every two-edge graph.
  RibbonGraph worked = one_vertex_three_loops();
  EdgeOrder order = {"e1", "e2", "e3"};
  Laurent reference = qt_expansion_signed(worked, order);
  CHECK(reference == signed_br_polynomial(worked));
  std::sort(order.begin(), order.end());
  do {
    CHECK(qt_expansion_signed(worked, order) == reference);
  } while (std::next_permutation(order.begin(), order.end()));

  for (const auto& g : enumerate_connected_graphs(2)) {
    EdgeOrder all = default_order(g);
    std::sort(all.begin(), all.end());
    Laurent base = signed_br_polynomial(g);
    do {
      CHECK(qt_expansion_signed(g, all) == base);
    } while (std::next_permutation(all.begin(), all.end()));
  }
}

TEST_CASE("signed expansion on the smallest graphs") {
  RibbonGraph twisted = parse_ribbon("circle: e1> e1>\n");
  EdgeOrder order = {"e1"};
  CHECK(qt_expansion_signed(twisted, order) ==
        Laurent::one() + Laurent::monomial(1, {{"y", 2}, {"z", 2}}));
  CHECK(qt_expansion_w1(twisted, order) ==
        Laurent::one() + Laurent::monomial(1, {{"y", 2}, {"z", 2}}));

  RibbonGraph untwisted = parse_ribbon("circle: e1> e1<\n");
  CHECK(qt_expansion_w1(untwisted, order) == Laurent::one() + Laurent::var("y"));

  RibbonGraph negative = parse_ribbon("sign e1 -\ncircle: e1> e1<\n");
  CHECK(qt_expansion_signed(negative, order) == signed_br_polynomial(negative));
  CHECK_THROWS_AS(qt_expansion_w1(negative, order), precondition_error);
}

TEST_CASE("expansions match the oracles on the small population") {
  std::mt19937 rng(23);
  for (const auto& g : enumerate_connected_graphs(2)) {
    EdgeOrder order = default_order(g);
    CHECK(qt_expansion_signed(g, order) == signed_br_polynomial(g));
    CHECK(qt_expansion_multivariate(g, order) == multivariate_br_polynomial(g));

    RibbonGraph positive = g;
    for (auto& [label, sign] : positive.signs) sign = +1;
    CHECK(qt_expansion_w1(positive, order) ==
          br_polynomial(positive).substituted({{"w", Laurent::one()}}));

    // Every total order gives the same polynomial.
    EdgeOrder shuffled = order;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(qt_expansion_signed(g, shuffled) == qt_expansion_signed(g, order));
  }
}

TEST_CASE("per-quasi-tree terms sum to the signed multivariate polynomial") {
  for (const auto& g : enumerate_connected_graphs(2)) {
    EdgeOrder order = default_order(g);
    Laurent sum;
    for (const auto& quasi_tree : quasi_trees(g)) sum += quasi_tree_term(g, quasi_tree, order);
    CHECK(sum == signed_multivariate_br_polynomial(g));

    for (const auto& quasi_tree : quasi_trees(g)) {
      Laurent at_q1 = quasi_tree_term(g, quasi_tree, order).substituted({{"q", Laurent::one()}});
      CHECK(at_q1 == quasi_tree_term_q1(g, quasi_tree, order));
    }
  }
}

TEST_CASE("single-variable expansion at q=1") {
  for (const auto& g : enumerate_connected_graphs(2)) {
    EdgeOrder order = default_order(g);
    std::map<std::string, Laurent> collapse{{"q", Laurent::one()}};
    for (const auto& [label, sign] : g.signs)
      collapse["alpha:" + label] = Laurent::var("alpha");
    CHECK(q1_expansion(g, order) ==
          signed_multivariate_br_polynomial(g).substituted(collapse));
  }
}

TEST_CASE("the subgraph bijection of duality") {
  CHECK(symmetric_difference(set_of({"a", "b"}), {}) == set_of({"a", "b"}));
  CHECK(symmetric_difference(set_of({"a", "b"}), set_of({"a", "b"})).empty());
  for (const auto& g : enumerate_connected_graphs(2)) {
    for (const auto& subset : all_edge_subsets(g)) {
      RibbonGraph dual = partial_dual(g, subset);
      for (const auto& quasi_tree : quasi_trees(g)) {
        EdgeSet image = symmetric_difference(subset, quasi_tree);
        CHECK(is_quasi_tree(dual, image));
        CHECK(symmetric_difference(subset, image) == quasi_tree);
      }
    }
  }
}
