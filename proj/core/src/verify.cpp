#include "ribbon/verify.hpp"

#include <algorithm>
#include <random>

#include "ribbon/generate.hpp"
#include "ribbon/oracle.hpp"
#include "ribbon/parallel.hpp"
#include "ribbon/quasitree.hpp"

namespace ribbon {

namespace {

std::string describe(const RibbonGraph& g) { return serialize_ribbon(g); }

std::vector<EdgeOrder> orders_to_try(const RibbonGraph& g, unsigned seed, int how_many) {
  EdgeOrder base = default_order(g);
  std::vector<EdgeOrder> out{base};
  std::size_t possible = 1;
  for (std::size_t i = 2; i <= g.edge_count() && possible <= 6; ++i) possible *= i;
  std::mt19937 rng(seed ^ (static_cast<unsigned>(g.edge_count()) << 16));
  EdgeOrder shuffled = base;
  while (out.size() < std::min<std::size_t>(static_cast<std::size_t>(how_many), possible)) {
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    if (std::find(out.begin(), out.end(), shuffled) == out.end()) out.push_back(shuffled);
  }
  return out;
}

// Merges per-graph reports produced in parallel chunks, keeping report order.
std::vector<CheckReport> over_population(
    const std::vector<RibbonGraph>& population,
    const std::vector<std::string>& names,
    const std::function<void(const RibbonGraph&, std::vector<CheckReport>&)>& body) {
  std::vector<CheckReport> init;
  init.reserve(names.size());
  for (const auto& name : names) init.push_back(CheckReport{name, 0, 0, {}});
  return parallel_reduce<std::vector<CheckReport>>(
      population.size(), init,
      [&](std::size_t lo, std::size_t hi) {
        std::vector<CheckReport> local = init;
        for (std::size_t i = lo; i < hi; ++i) body(population[i], local);
        return local;
      },
      [](std::vector<CheckReport>& into, std::vector<CheckReport>&& part) {
        for (std::size_t i = 0; i < into.size(); ++i) into[i].merge(part[i]);
      });
}

}  // namespace

std::vector<RibbonGraph> verification_population(const VerifyOptions& options) {
  std::vector<RibbonGraph> population = enumerate_connected_graphs(std::min(options.max_edges, 3));
  std::mt19937 rng(options.seed);
  for (int edges = 4; edges <= options.max_edges; ++edges)
    for (int i = 0; i < options.random_graphs; ++i)
      population.push_back(random_connected_graph(edges, rng));
  return population;
}

std::vector<CheckReport> oracle_equivalence_suite(const std::vector<RibbonGraph>& population,
                                                  const VerifyOptions& options) {
  return over_population(
      population,
      {"signed expansion = signed subgraph sum", "w=1 expansion = subgraph sum at w=1",
       "multivariate expansion = multivariate sum", "q=1 expansion = signed multivariate at q=1"},
      [&](const RibbonGraph& g, std::vector<CheckReport>& reports) {
        Laurent signed_oracle = signed_br_polynomial(g);
        Laurent multi_oracle = multivariate_br_polynomial(g);

        RibbonGraph positive = g;
        for (auto& [label, sign] : positive.signs) sign = +1;
        Laurent w1_oracle = br_polynomial(positive).substituted({{"w", Laurent::one()}});

        std::map<std::string, Laurent> collapse{{"q", Laurent::one()}};
        for (const auto& [label, sign] : g.signs)
          collapse["alpha:" + label] = Laurent::var("alpha");
        Laurent q1_oracle = signed_multivariate_br_polynomial(g).substituted(collapse);

        for (const auto& order : orders_to_try(g, options.seed, options.random_orders)) {
          reports[0].note(qt_expansion_signed(g, order) == signed_oracle, describe(g));
          reports[1].note(qt_expansion_w1(positive, order) == w1_oracle, describe(positive));
          reports[2].note(qt_expansion_multivariate(g, order) == multi_oracle, describe(g));
          reports[3].note(q1_expansion(g, order) == q1_oracle, describe(g));
        }
      });
}

std::vector<CheckReport> duality_suite(const std::vector<RibbonGraph>& population) {
  return over_population(
      population,
      {"partial duality is an involution", "signed multivariate invariant at q=1",
       "per-quasi-tree terms preserved at q=1", "face bookkeeping under the bijection"},
      [&](const RibbonGraph& g, std::vector<CheckReport>& reports) {
        const EdgeOrder order = default_order(g);
        const std::string form = canonical_form(g);
        const Laurent q1_base =
            signed_multivariate_br_polynomial(g).substituted({{"q", Laurent::one()}});
        const auto quasi_tree_list = quasi_trees(g);

        for (const auto& subset : all_edge_subsets(g)) {
          RibbonGraph dual = partial_dual(g, subset);
          reports[0].note(canonical_form(partial_dual(dual, subset)) == form, describe(g));
          reports[1].note(signed_multivariate_br_polynomial(dual).substituted(
                              {{"q", Laurent::one()}}) == q1_base,
                          describe(g));
          for (const auto& quasi_tree : quasi_tree_list) {
            EdgeSet image = symmetric_difference(subset, quasi_tree);
            reports[2].note(quasi_tree_term_q1(g, quasi_tree, order) ==
                                quasi_tree_term_q1(dual, image, order),
                            describe(g));
            ActivityPartition before = activities(g, quasi_tree, order);
            ActivityPartition after = activities(dual, image, order);
            long f_before = subgraph_counts(g, before.contracted_edges()).f;
            long f_after = subgraph_counts(dual, after.contracted_edges()).f;
            long internal_in = 0, external_in = 0;
            for (const auto& edge : subset) {
              if (before.internal_live_orientable.count(edge)) ++internal_in;
              if (before.external_live_orientable.count(edge)) ++external_in;
            }
            reports[3].note(f_after == f_before - internal_in + external_in, describe(g));
          }
        }
      });
}

std::vector<CheckReport> structural_suite(const std::vector<RibbonGraph>& population) {
  return over_population(
      population,
      {"face count via deletions and contractions", "face shift over a packet",
       "nullity and genus shift over a packet", "toggling a non-orientable loop",
       "toggling a linking pair", "leaf classification", "packet bijection"},
      [&](const RibbonGraph& g, std::vector<CheckReport>& reports) {
        const EdgeOrder order = default_order(g);
        const auto subsets = all_edge_subsets(g);

        // f(F') = v((G^{E(F)} - complement(D)) / D) over all subgraph pairs.
        for (const auto& f_set : subsets) {
          RibbonGraph dual = partial_dual(g, f_set);
          for (const auto& f_prime : subsets) {
            EdgeSet delta = symmetric_difference(f_set, f_prime);
            RibbonGraph work = dual;
            for (const auto& edge : g.edge_set())
              if (!delta.count(edge)) work = remove_edge(work, edge);
            for (const auto& edge : delta) work = contract_edge(work, edge);
            reports[0].note(counts(work).v == subgraph_counts(g, f_prime).f, describe(g));
          }
        }

        for (const auto& subset : subsets) {
          SubgraphDecomposition dec = decompose_subgraph(g, order, subset);
          ActivityPartition parts = activities(g, dec.quasi_tree, order);
          GraphCounts c_sub = subgraph_counts(g, subset);
          GraphCounts c_di = subgraph_counts(g, parts.contracted_edges());
          reports[1].note(c_sub.f == c_di.f - static_cast<long>(dec.internal_part.size()) +
                                         static_cast<long>(dec.external_part.size()),
                          describe(g));
          AbstractGraph reduced = contracted_graph(g, parts);
          unsigned long mask = 0;
          for (std::size_t i = 0; i < reduced.edges.size(); ++i)
            if (dec.internal_part.count(reduced.edges[i].label)) mask |= 1ul << i;
          int n_w = static_cast<int>(dec.internal_part.size()) - reduced.vertex_count +
                    component_count(reduced, mask);
          bool genus_ok =
              c_sub.n == c_di.n + n_w + static_cast<long>(dec.external_part.size()) &&
              (c_sub.k - c_sub.f + c_sub.n) == (c_di.k - c_di.f + c_di.n) + 2 * n_w;
          reports[2].note(genus_ok, describe(g));
        }

        const auto quasi_tree_list = quasi_trees(g);
        for (const auto& quasi_tree : quasi_tree_list) {
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
          for (const auto& edge : g.edge_set())
            if (nonorientable_loop(edge))
              reports[3].note(is_quasi_tree(g, symmetric_difference(quasi_tree, {edge})),
                              describe(g));
          for (const auto& e1 : g.edge_set()) {
            for (const auto& e2 : g.edge_set()) {
              if (e1 >= e2 || !edges_link(g, quasi_tree, e1, e2)) continue;
              if (nonorientable_loop(e1) && nonorientable_loop(e2)) continue;
              EdgeSet pair{e1, e2};
              reports[4].note(is_quasi_tree(g, symmetric_difference(quasi_tree, pair)),
                              describe(g));
            }
          }
        }

        std::size_t covered = 0;
        for (const auto& leaf : resolution_tree(g, order)) {
          ActivityPartition parts = activities(g, leaf.quasi_tree, order);
          EdgeSet live_orientable = parts.internal_live_orientable;
          live_orientable.insert(parts.external_live_orientable.begin(),
                                 parts.external_live_orientable.end());
          reports[5].note(leaf.unresolved == live_orientable, describe(g));
          covered += 1ul << leaf.unresolved.size();
        }
        std::set<std::string> packet_keys;
        for (const auto& subset : subsets) {
          SubgraphDecomposition dec = decompose_subgraph(g, order, subset);
          std::string key;
          for (const auto& edge : dec.quasi_tree) key += edge + ",";
          key += "|";
          for (const auto& edge : dec.internal_part) key += edge + ",";
          key += "|";
          for (const auto& edge : dec.external_part) key += edge + ",";
          packet_keys.insert(key);
        }
        reports[6].note(covered == subsets.size() && packet_keys.size() == subsets.size(),
                        describe(g));
      });
}

std::vector<CheckReport> run_verification(const VerifyOptions& options) {
  const auto population = verification_population(options);
  std::vector<CheckReport> out;
  for (auto& report : oracle_equivalence_suite(population, options)) out.push_back(report);
  for (auto& report : duality_suite(population)) out.push_back(report);
  for (auto& report : structural_suite(population)) out.push_back(report);
  return out;
}

}  // namespace ribbon
