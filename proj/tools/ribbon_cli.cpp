#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ribbon/errors.hpp"
#include "ribbon/generate.hpp"
#include "ribbon/oracle.hpp"
#include "ribbon/quasitree.hpp"
#include "ribbon/verify.hpp"
#include "ribbon/virtual_links.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ribbon::parse_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::string token;
  std::istringstream in(csv);
  while (std::getline(in, token, ','))
    if (!token.empty()) out.push_back(token);
  return out;
}

ribbon::EdgeOrder order_or_default(const ribbon::RibbonGraph& g, const std::string& csv) {
  if (csv.empty()) return ribbon::default_order(g);
  ribbon::EdgeOrder order = split_csv(csv);
  ribbon::validate_order(g, order);
  return order;
}

std::string join(const ribbon::EdgeSet& set) {
  std::string out = "{";
  bool first = true;
  for (const auto& edge : set) {
    if (!first) out += ",";
    out += edge;
    first = false;
  }
  return out + "}";
}

int run_poly(const std::string& file, const std::string& which) {
  ribbon::RibbonGraph g = ribbon::parse_ribbon(slurp(file));
  ribbon::Laurent value;
  if (which == "R")
    value = ribbon::br_polynomial(g);
  else if (which == "Rs")
    value = ribbon::signed_br_polynomial(g);
  else if (which == "Z")
    value = ribbon::multivariate_br_polynomial(g);
  else if (which == "Zs")
    value = ribbon::signed_multivariate_br_polynomial(g);
  else if (which == "tutte")
    value = ribbon::tutte_polynomial(ribbon::underlying_graph(g));
  else if (which == "rank")
    value = ribbon::rank_polynomial(ribbon::underlying_graph(g));
  else
    throw ribbon::precondition_error("unknown polynomial: " + which);
  std::cout << value.str() << "\n";
  return 0;
}

int run_qtexp(const std::string& file, const std::string& order_csv) {
  ribbon::RibbonGraph g = ribbon::parse_ribbon(slurp(file));
  ribbon::EdgeOrder order = order_or_default(g, order_csv);
  std::cout << "order:";
  for (const auto& edge : order) std::cout << ' ' << edge;
  std::cout << "\n";
  ribbon::Laurent total;
  for (const auto& quasi_tree : ribbon::quasi_trees(g)) {
    ribbon::QuasiTreeRecord record = ribbon::quasi_tree_record(g, quasi_tree, order);
    auto [n_factor, s_factor] = ribbon::signed_expansion_factors(g, quasi_tree, order);
    total += n_factor * s_factor;
    std::cout << "E(Q)=" << join(record.edges)
              << "  I_o=" << join(record.parts.internal_live_orientable)
              << " I_n=" << join(record.parts.internal_live_nonorientable)
              << " D=" << join(record.parts.internal_dead)
              << " E_o=" << join(record.parts.external_live_orientable) << "\n";
    std::cout << "  N(G,Q) = " << n_factor.str() << "\n";
    std::cout << "  G_Q: " << record.reduced.vertex_count << " vertices,";
    for (const auto& edge : record.reduced.edges) std::cout << ' ' << edge.label;
    std::cout << (record.reduced.edges.empty() ? " no edges" : "") << "\n";
    std::cout << "  S(G_Q) = " << s_factor.str() << "\n";
  }
  std::cout << "Rs = " << total.str() << "\n";
  return 0;
}

int run_dual(const std::string& file, const std::string& edges_csv, const std::string& out_path) {
  ribbon::RibbonGraph g = ribbon::parse_ribbon(slurp(file));
  ribbon::EdgeSet subset;
  for (const auto& edge : split_csv(edges_csv)) {
    if (!g.has_edge(edge)) throw ribbon::precondition_error("unknown edge " + edge);
    subset.insert(edge);
  }
  std::string text = ribbon::serialize_ribbon(ribbon::partial_dual(g, subset));
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    out << text;
  }
  return 0;
}

int run_contract(const std::string& file, const std::string& edge, const std::string& out_path) {
  ribbon::RibbonGraph g = ribbon::parse_ribbon(slurp(file));
  std::string text = ribbon::serialize_ribbon(ribbon::contract_edge(g, edge));
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    out << text;
  }
  return 0;
}

int run_bracket(const std::string& file, const std::string& method, const std::string& order_csv) {
  ribbon::VirtualDiagram d = ribbon::parse_gauss(slurp(file));
  ribbon::Laurent value;
  if (method == "statesum") {
    value = ribbon::kauffman_statesum(d);
  } else if (method == "connected") {
    ribbon::EdgeOrder order =
        order_csv.empty() ? ribbon::EdgeOrder(d.crossing_labels()) : split_csv(order_csv);
    value = ribbon::connected_state_expansion(d, order);
  } else if (method == "ribbon") {
    // Evaluate the signed polynomial of any one state's ribbon graph.
    auto states = ribbon::all_states(d);
    ribbon::RibbonGraph g = ribbon::state_ribbon_graph(d, states.front());
    ribbon::GraphCounts c = ribbon::counts(g);
    std::map<std::string, ribbon::Laurent> bind{
        {"x", ribbon::Laurent::monomial(1, {{"A", 2}, {"d", 2}, {"B", -2}})},
        {"y", ribbon::Laurent::monomial(1, {{"B", 2}, {"d", 2}, {"A", -2}})},
        {"z", ribbon::Laurent::var_pow_half("d", -2)},
    };
    value = ribbon::Laurent::monomial(1, {{"A", static_cast<int>(2 * c.n)},
                                          {"B", static_cast<int>(2 * c.r)},
                                          {"d", static_cast<int>(2 * (c.k - 1))}}) *
            ribbon::signed_br_polynomial(g).substituted(bind);
  } else {
    throw ribbon::precondition_error("unknown method: " + method);
  }
  std::cout << value.str() << "\n";
  return 0;
}

int run_verify(int max_edges, unsigned seed, int random_graphs) {
  ribbon::VerifyOptions options;
  options.max_edges = max_edges;
  options.seed = seed;
  options.random_graphs = random_graphs;
  std::cout << "seed " << seed << ", exhaustive up to " << std::min(3, max_edges) << " edges";
  if (max_edges >= 4)
    std::cout << ", " << random_graphs << " random graphs per size 4.." << max_edges;
  std::cout << "\n";
  bool all_ok = true;
  for (const auto& report : ribbon::run_verification(options)) {
    all_ok = all_ok && report.passed();
    std::cout << (report.passed() ? "PASS" : "FAIL") << "  " << report.name << "  ("
              << report.checks << " checks)";
    if (!report.passed()) std::cout << "  first failure on:\n" << report.first_failure;
    std::cout << "\n";
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bollobas-Riordan polynomials, partial duality and Kauffman brackets"};
  app.require_subcommand(1);

  std::string file, which = "Rs", order_csv, edges_csv, out_path, edge, method = "statesum";
  int max_edges = 4, random_graphs = 50;
  unsigned seed = 1;

  auto* poly = app.add_subcommand("poly", "print a graph polynomial");
  poly->add_option("graph-file", file)->required();
  poly->add_option("--which", which, "R|Rs|Z|Zs|tutte|rank");

  auto* qtexp = app.add_subcommand("qtexp", "per-quasi-tree expansion report");
  qtexp->add_option("graph-file", file)->required();
  qtexp->add_option("--order", order_csv, "comma-separated edge order");

  auto* dual = app.add_subcommand("dual", "partial dual of a graph");
  dual->add_option("graph-file", file)->required();
  dual->add_option("--edges", edges_csv, "comma-separated edge subset");
  dual->add_option("--out", out_path, "output file (default stdout)");

  auto* contract = app.add_subcommand("contract", "contract one edge");
  contract->add_option("graph-file", file)->required();
  contract->add_option("--edge", edge)->required();
  contract->add_option("--out", out_path, "output file (default stdout)");

  auto* bracket = app.add_subcommand("bracket", "Kauffman bracket of a Gauss code");
  bracket->add_option("gauss-file", file)->required();
  bracket->add_option("--method", method, "statesum|connected|ribbon");
  bracket->add_option("--order", order_csv, "comma-separated crossing order");

  auto* verify = app.add_subcommand("verify", "run the property suites");
  verify->add_option("--max-edges", max_edges);
  verify->add_option("--seed", seed);
  verify->add_option("--count", random_graphs, "random graphs per edge count");

  CLI11_PARSE(app, argc, argv);

  try {
    if (poly->parsed()) return run_poly(file, which);
    if (qtexp->parsed()) return run_qtexp(file, order_csv);
    if (dual->parsed()) return run_dual(file, edges_csv, out_path);
    if (contract->parsed()) return run_contract(file, edge, out_path);
    if (bracket->parsed()) return run_bracket(file, method, order_csv);
    if (verify->parsed()) return run_verify(max_edges, seed, random_graphs);
  } catch (const ribbon::parse_error& err) {
    std::cerr << "parse error: " << err.what() << "\n";
    return 2;
  } catch (const ribbon::precondition_error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 0;
}
