#pragma once

#include <random>
#include <vector>

#include "ribbon/ribbon_graph.hpp"
#include "ribbon/virtual_links.hpp"

namespace ribbon {

// Every connected signed ribbon graph with at most `max_edges` edges, one
// representative per relabelling class (all twist/attachment/sign
// combinations). Deterministic order.
std::vector<RibbonGraph> enumerate_connected_graphs(int max_edges);

// Random connected signed ribbon graph with exactly `edges` edges.
RibbonGraph random_connected_graph(int edges, std::mt19937& rng);

// Random Gauss code with `crossings` classical crossings on one or two
// components.
VirtualDiagram random_gauss_code(int crossings, std::mt19937& rng);

}  // namespace ribbon
