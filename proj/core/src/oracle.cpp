#include "ribbon/oracle.hpp"

#include "ribbon/errors.hpp"
#include "ribbon/parallel.hpp"

namespace ribbon {

namespace {

std::vector<std::string> sorted_labels(const RibbonGraph& g) {
  std::vector<std::string> labels;
  for (const auto& [label, sign] : g.signs) labels.push_back(label);
  return labels;  // map iteration is already sorted
}

EdgeSet subset_from_mask(const std::vector<std::string>& labels, unsigned long mask) {
  EdgeSet out;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (mask & (1ul << i)) out.insert(labels[i]);
  return out;
}

// Sums term(mask) over all 2^e masks, chunked deterministically.
Laurent subset_sum(const RibbonGraph& g, const std::function<Laurent(const EdgeSet&)>& term) {
  const auto labels = sorted_labels(g);
  if (labels.size() >= 26) throw precondition_error("subset sum: too many edges");
  const std::size_t total = 1ul << labels.size();
  return parallel_reduce<Laurent>(
      total, Laurent::zero(),
      [&](std::size_t lo, std::size_t hi) {
        Laurent acc;
        for (std::size_t mask = lo; mask < hi; ++mask)
          acc += term(subset_from_mask(labels, mask));
        return acc;
      },
      [](Laurent& into, Laurent&& part) { into += part; });
}

}  // namespace

std::vector<EdgeSet> all_edge_subsets(const RibbonGraph& g) {
  const auto labels = sorted_labels(g);
  if (labels.size() >= 26) throw precondition_error("all_edge_subsets: too many edges");
  std::vector<EdgeSet> out;
  out.reserve(1ul << labels.size());
  for (unsigned long mask = 0; mask < (1ul << labels.size()); ++mask)
    out.push_back(subset_from_mask(labels, mask));
  return out;
}

Laurent br_polynomial(const RibbonGraph& g) {
  const GraphCounts whole = counts(g);
  const Laurent xm1 = Laurent::var("x") - Laurent::one();
  Laurent sum = subset_sum(g, [&](const EdgeSet& subset) {
    GraphCounts c = subgraph_counts(g, subset);
    Exponents exps;
    if (c.n != 0) exps["y"] = static_cast<int>(2 * c.n);
    long kfn = c.k - c.f + c.n;
    if (kfn != 0) exps["z"] = static_cast<int>(2 * kfn);
    if (c.t != 0) exps["w"] = 2;
    return xm1.pow(static_cast<unsigned>(whole.r - c.r)) * Laurent::monomial(1, std::move(exps));
  });
  return sum.w_reduced();
}

Laurent signed_br_polynomial(const RibbonGraph& g) {
  const GraphCounts whole = counts(g);
  const int neg_total = g.negative_edge_count();
  return subset_sum(g, [&](const EdgeSet& subset) {
    GraphCounts c = subgraph_counts(g, subset);
    int neg_in = g.negative_edge_count(subset);
    int two_s = neg_in - (neg_total - neg_in);  // 2*s(F)
    Exponents exps;
    int hx = static_cast<int>(2 * (c.k - whole.k)) + two_s;
    int hy = static_cast<int>(2 * c.n) - two_s;
    long kfn = c.k - c.f + c.n;
    if (hx != 0) exps["x"] = hx;
    if (hy != 0) exps["y"] = hy;
    if (kfn != 0) exps["z"] = static_cast<int>(2 * kfn);
    return Laurent::monomial(1, std::move(exps));
  });
}

Laurent multivariate_br_polynomial(const RibbonGraph& g) {
  return subset_sum(g, [&](const EdgeSet& subset) {
    GraphCounts c = subgraph_counts(g, subset);
    Exponents exps;
    exps["q"] = static_cast<int>(2 * c.k);
    if (c.f != 0) exps["c"] = static_cast<int>(2 * c.f);
    for (const auto& label : subset) exps["beta:" + label] = 2;
    return Laurent::monomial(1, std::move(exps));
  });
}

Laurent signed_multivariate_br_polynomial(const RibbonGraph& g) {
  const int neg_total = g.negative_edge_count();
  return subset_sum(g, [&](const EdgeSet& subset) {
    GraphCounts c = subgraph_counts(g, subset);
    int neg_in = g.negative_edge_count(subset);
    int two_s = neg_in - (neg_total - neg_in);
    Exponents exps;
    int hq = static_cast<int>(2 * c.k) + two_s;
    if (hq != 0) exps["q"] = hq;
    if (c.f != 0) exps["c"] = static_cast<int>(2 * c.f);
    for (const auto& [label, sign] : g.signs) {
      bool in = subset.count(label) != 0;
      if ((sign > 0 && in) || (sign < 0 && !in)) exps["alpha:" + label] = 2;
    }
    return Laurent::monomial(1, std::move(exps));
  });
}

}  // namespace ribbon
