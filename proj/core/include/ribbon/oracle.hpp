#pragma once

#include <vector>

#include "ribbon/laurent.hpp"
#include "ribbon/ribbon_graph.hpp"

namespace ribbon {

// All subsets of the edge set, in mask order with the lexicographically first
// label as the least significant bit.
std::vector<EdgeSet> all_edge_subsets(const RibbonGraph& g);

// Spanning-subgraph expansions computed verbatim from their definitions over
// all 2^e subsets. These are the ground truth the quasi-tree machinery is
// checked against.

// R(G; x,y,z,w) = sum_F (x-1)^{r(G)-r(F)} y^{n(F)} z^{(k-f+n)(F)} w^{t(F)},
// reduced modulo w^2 - w.
Laurent br_polynomial(const RibbonGraph& g);

// R_s(G; x+1,y,z) = sum_F x^{k(F)-k(G)+s(F)} y^{n(F)-s(F)} z^{(k-f+n)(F)}
// with s(F) = (e-(F) - e-(F̄))/2, expressed in the shifted variable x.
Laurent signed_br_polynomial(const RibbonGraph& g);

// Z(G; q,beta,c) = sum_F q^{k(F)} (prod_{e in F} beta_e) c^{f(F)}.
Laurent multivariate_br_polynomial(const RibbonGraph& g);

// Z_s(G; q,alpha,c) = sum_F q^{k(F)+s(F)} (prod_{e in E+(F) u E-(F̄)} alpha_e) c^{f(F)}.
Laurent signed_multivariate_br_polynomial(const RibbonGraph& g);

}  // namespace ribbon
