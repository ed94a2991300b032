#pragma once

#include <string>
#include <vector>

#include "ribbon/ribbon_graph.hpp"

namespace ribbon {

struct CheckReport {
  std::string name;
  long checks = 0;
  long failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0; }
  void note(bool ok, const std::string& context) {
    ++checks;
    if (!ok && failures++ == 0) first_failure = context;
  }
  void merge(const CheckReport& other) {
    checks += other.checks;
    if (other.failures > 0 && failures == 0) first_failure = other.first_failure;
    failures += other.failures;
  }
};

struct VerifyOptions {
  int max_edges = 4;       // exhaustive population up to min(3, max_edges), random beyond
  unsigned seed = 1;
  int random_graphs = 50;  // per random edge count
  int random_orders = 3;
};

// The graph population the suites run over.
std::vector<RibbonGraph> verification_population(const VerifyOptions& options);

// Quasi-tree expansions against their spanning-subgraph oracles.
std::vector<CheckReport> oracle_equivalence_suite(const std::vector<RibbonGraph>& population,
                                                  const VerifyOptions& options);

// Partial-duality properties: involution, q=1 invariance, per-term
// preservation under the subgraph bijection.
std::vector<CheckReport> duality_suite(const std::vector<RibbonGraph>& population);

// Face/nullity bookkeeping, toggle lemmas, leaf classification, packet
// bijection.
std::vector<CheckReport> structural_suite(const std::vector<RibbonGraph>& population);

std::vector<CheckReport> run_verification(const VerifyOptions& options);

}  // namespace ribbon
