#pragma once

#include "ribbon/ribbon_graph.hpp"

namespace ribbon {

// Partial dual with respect to the edge subset: circles are the boundary
// components of the spanning subgraph on `subset`, edges keep their labels,
// signs flip exactly on `subset`. An involution.
RibbonGraph partial_dual(const RibbonGraph& g, const EdgeSet& subset);

// Partial dual with respect to every edge; swaps vertex and face counts.
RibbonGraph natural_dual(const RibbonGraph& g);

// Removes the edge's arrows and sign, leaving the circles in place.
RibbonGraph remove_edge(const RibbonGraph& g, const std::string& edge);

// Contraction: partial dual at {edge} followed by removal.
RibbonGraph contract_edge(const RibbonGraph& g, const std::string& edge);

// Whether the four arrow positions of the two edges interleave around the
// single vertex; requires a one-vertex graph and distinct edges.
bool edges_cross(const RibbonGraph& g, const std::string& e1, const std::string& e2);

// Whether the edges cross in the partial dual at `quasi_tree`; requires that
// dual to have exactly one vertex.
bool edges_link(const RibbonGraph& g, const EdgeSet& quasi_tree, const std::string& e1,
                const std::string& e2);

}  // namespace ribbon
