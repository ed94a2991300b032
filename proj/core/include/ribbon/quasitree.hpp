#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ribbon/duality.hpp"
#include "ribbon/laurent.hpp"
#include "ribbon/ribbon_graph.hpp"

namespace ribbon {

// Total order on the edge labels; activities depend on it.
using EdgeOrder = std::vector<std::string>;

EdgeOrder default_order(const RibbonGraph& g);  // lexicographic
void validate_order(const RibbonGraph& g, const EdgeOrder& order);

bool is_quasi_tree(const RibbonGraph& g, const EdgeSet& subset);

// All spanning quasi-trees, by direct filtering of the 2^e subsets.
std::vector<EdgeSet> quasi_trees(const RibbonGraph& g);

// Edge classification with respect to a quasi-tree and a total order: live
// when the edge links no lower-ordered edge, orientable when it is an
// untwisted loop in the partial dual at the quasi-tree, internal when it
// belongs to the quasi-tree.
struct ActivityPartition {
  EdgeSet internal_live_orientable;     // I_o
  EdgeSet internal_live_nonorientable;  // I_n
  EdgeSet internal_dead;                // D
  EdgeSet external_live_orientable;     // E_o
  EdgeSet external_live_nonorientable;  // E_n
  EdgeSet external_dead;

  // The edges contracted to build the reduced graph: internal dead together
  // with internal non-orientable live.
  EdgeSet contracted_edges() const;
};

ActivityPartition activities(const RibbonGraph& g, const EdgeSet& quasi_tree,
                             const EdgeOrder& order);

// The ordinary graph on the components of the contracted spanning subgraph,
// with the internally live orientable edges; carries the rank/Tutte factor.
AbstractGraph contracted_graph(const RibbonGraph& g, const ActivityPartition& parts);

// Everything one quasi-tree contributes to an expansion: its edge set, the
// activity partition, the reduced graph and the counts of the contracted
// spanning subgraph F_{D u I_n}.
struct QuasiTreeRecord {
  EdgeSet edges;
  ActivityPartition parts;
  AbstractGraph reduced;
  GraphCounts contracted_counts;
};

QuasiTreeRecord quasi_tree_record(const RibbonGraph& g, const EdgeSet& quasi_tree,
                                  const EdgeOrder& order);

// ---------------------------------------------------------------------------
// Binary tree of partial resolutions
// ---------------------------------------------------------------------------

// Edge values of a partial resolution; edges absent from the map are
// unresolved.
using PartialResolution = std::map<std::string, int>;

struct ResolutionLeaf {
  PartialResolution resolved;
  EdgeSet unresolved;
  EdgeSet quasi_tree;  // the unique quasi-tree inside the leaf's class
};

// Whether the class of resolutions extending `partial` contains a quasi-tree.
bool class_contains_quasi_tree(const RibbonGraph& g, const PartialResolution& partial);

// Whether fixing `edge` to 0 or to 1 kills every quasi-tree in the class.
// `edge` must be unresolved in `partial`.
bool nugatory(const RibbonGraph& g, const PartialResolution& partial, const std::string& edge);

// Leaves of the binary resolution tree: edges are examined from the highest
// downward, nugatory edges stay unresolved, the rest branch. Leaf classes
// partition the resolution cube and each contains exactly one quasi-tree.
std::vector<ResolutionLeaf> resolution_tree(const RibbonGraph& g, const EdgeOrder& order);

// The packet decomposition of a spanning subgraph: its leaf's quasi-tree Q,
// plus the subsets S1 of I_o(Q) and S2 of E_o(Q) with
// E(F) = contracted_edges(Q) u S1 u S2.
struct SubgraphDecomposition {
  EdgeSet quasi_tree;
  EdgeSet internal_part;  // S1
  EdgeSet external_part;  // S2
};

SubgraphDecomposition decompose_subgraph(const RibbonGraph& g, const EdgeOrder& order,
                                         const EdgeSet& subgraph);

// ---------------------------------------------------------------------------
// Quasi-tree expansions
// ---------------------------------------------------------------------------

// Per-quasi-tree factors of the signed expansion, split as in the worked
// table: second = Ra(G_Q; 1, x^{-1/2}y^{1/2}, x^{1/2}y^{1/2}, x^{1/2}y^{1/2}z^2),
// first = everything else including the (x^{1/2}y^{-1/2})^{r(G_Q)+e-(I_o)}
// prefactor. The product is the quasi-tree's term.
std::pair<Laurent, Laurent> signed_expansion_factors(const RibbonGraph& g,
                                                     const EdgeSet& quasi_tree,
                                                     const EdgeOrder& order);

// Signed Bollobas-Riordan polynomial assembled over quasi-trees; equals
// signed_br_polynomial on every connected graph and order.
Laurent qt_expansion_signed(const RibbonGraph& g, const EdgeOrder& order);

// The w=1 specialization for unsigned (all-positive) graphs, assembled with
// the Tutte factor T(G_Q; x, yz^2+1).
Laurent qt_expansion_w1(const RibbonGraph& g, const EdgeOrder& order);

// Multivariate expansion with the Z_T(G_Q; q, beta/c) factor.
Laurent qt_expansion_multivariate(const RibbonGraph& g, const EdgeOrder& order);

// One quasi-tree's term N_G(Q; q, alpha, c) of the signed multivariate
// polynomial; summing over all quasi-trees gives Z_s.
Laurent quasi_tree_term(const RibbonGraph& g, const EdgeSet& quasi_tree, const EdgeOrder& order);

// Closed form of the same term at q = 1.
Laurent quasi_tree_term_q1(const RibbonGraph& g, const EdgeSet& quasi_tree,
                           const EdgeOrder& order);

// Z_s(G; 1, alpha, c) with a single alpha, assembled from the per-dual live
// orientable edge sets: c * sum_Q alpha^{e-(G^{E(Q)})} (1+alpha c)^{e+(L_o)}
// (1+c/alpha)^{e-(L_o)}.
Laurent q1_expansion(const RibbonGraph& g, const EdgeOrder& order);

// E' triangle E(F): the subgraph bijection between a graph and its partial
// dual; an involution in the second argument.
EdgeSet symmetric_difference(const EdgeSet& a, const EdgeSet& b);

}  // namespace ribbon
