#include "ribbon/virtual_links.hpp"

#include <algorithm>
#include <sstream>

#include "ribbon/errors.hpp"

namespace ribbon {

std::vector<std::string> VirtualDiagram::crossing_labels() const {
  EdgeSet labels;
  for (const auto& component : components)
    for (const auto& passage : component) labels.insert(passage.crossing);
  return std::vector<std::string>(labels.begin(), labels.end());
}

void validate(const VirtualDiagram& d) {
  std::map<std::string, std::vector<const Passage*>> by_crossing;
  for (const auto& component : d.components)
    for (const auto& passage : component) by_crossing[passage.crossing].push_back(&passage);
  for (const auto& [label, passages] : by_crossing) {
    if (passages.size() != 2)
      throw parse_error("crossing " + label + " appears " + std::to_string(passages.size()) +
                        " times");
    if (passages[0]->over == passages[1]->over)
      throw parse_error("crossing " + label + " lacks an over/under pairing");
    if (passages[0]->sign != passages[1]->sign)
      throw parse_error("crossing " + label + " has inconsistent signs");
  }
}

VirtualDiagram parse_gauss(const std::string& text) {
  VirtualDiagram d;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    std::vector<Passage> component;
    bool saw_token = false;
    while (ls >> tok) {
      saw_token = true;
      if (tok == "(" || tok == ")" || tok == "()") continue;  // crossingless component
      if (tok.size() < 3) throw parse_error("malformed passage token: " + tok);
      char kind = tok.front();
      char sign = tok.back();
      if ((kind != 'O' && kind != 'U') || (sign != '+' && sign != '-'))
        throw parse_error("malformed passage token: " + tok);
      component.push_back(
          Passage{tok.substr(1, tok.size() - 2), kind == 'O', sign == '+' ? +1 : -1});
    }
    if (saw_token) d.components.push_back(std::move(component));
  }
  validate(d);
  return d;
}

std::string serialize_gauss(const VirtualDiagram& d) {
  std::ostringstream out;
  for (const auto& component : d.components) {
    if (component.empty()) {
      out << "( )\n";
      continue;
    }
    bool first = true;
    for (const auto& passage : component) {
      if (!first) out << ' ';
      out << (passage.over ? 'O' : 'U') << passage.crossing << (passage.sign > 0 ? '+' : '-');
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

std::vector<State> all_states(const VirtualDiagram& d) {
  const auto labels = d.crossing_labels();
  if (labels.size() >= 26) throw precondition_error("too many crossings for state enumeration");
  std::vector<State> out;
  for (unsigned long mask = 0; mask < (1ul << labels.size()); ++mask) {
    State s;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      bool b_side = mask & (1ul << (labels.size() - 1 - i));  // highest label fastest
      s[labels[i]] = b_side ? 'B' : 'A';
    }
    out.push_back(std::move(s));
  }
  return out;
}

ResolvedState resolve_state(const VirtualDiagram& d, const State& state) {
  validate(d);
  for (const auto& label : d.crossing_labels()) {
    auto it = state.find(label);
    if (it == state.end() || (it->second != 'A' && it->second != 'B'))
      throw precondition_error("state does not resolve crossing " + label);
  }

  ResolvedState out;
  for (const auto& [label, type] : state) (type == 'A' ? out.a_count : out.b_count)++;

  // Arcs between consecutive passages; flags 2*arc (forward) and 2*arc+1.
  struct PassageRef {
    int in_arc = -1;   // arc ending at this passage
    int out_arc = -1;  // arc starting here
  };
  std::map<std::string, std::vector<PassageRef>> refs;  // [0] = over, [1] = under
  int arc_count = 0;
  std::size_t free_components = 0;
  for (const auto& component : d.components) {
    const int m = static_cast<int>(component.size());
    if (m == 0) {
      ++free_components;
      continue;
    }
    const int base = arc_count;
    arc_count += m;
    for (int j = 0; j < m; ++j) {
      auto& slot = refs[component[j].crossing];
      if (slot.empty()) slot.resize(2);
      PassageRef& ref = slot[component[j].over ? 0 : 1];
      ref.in_arc = base + (j + m - 1) % m;
      ref.out_arc = base + j;
    }
  }

  // Transition tables: next flag and the crossing mark carried over it.
  std::vector<int> next(2 * arc_count, -1);
  std::vector<std::pair<int, bool>> mark(2 * arc_count, {-1, true});  // crossing index, sense
  std::vector<std::string> order;
  for (const auto& [label, slot] : refs) order.push_back(label);

  auto fwd = [](int arc) { return 2 * arc; };
  auto rev = [](int arc) { return 2 * arc + 1; };
  for (std::size_t ci = 0; ci < order.size(); ++ci) {
    const std::string& label = order[ci];
    const auto& slot = refs.at(label);
    const PassageRef& over = slot[0];
    const PassageRef& under = slot[1];
    int sign = 0;
    for (const auto& component : d.components)
      for (const auto& passage : component)
        if (passage.crossing == label) sign = passage.sign;
    const bool oriented = (state.at(label) == 'A') == (sign > 0);
    auto set = [&](int from, int to, bool sense) {
      next[from] = to;
      mark[from] = {static_cast<int>(ci), sense};
    };
    if (oriented) {
      // Flow-preserving smoothing; both marks ride with the strand flow.
      set(fwd(over.in_arc), fwd(under.out_arc), true);
      set(rev(under.out_arc), rev(over.in_arc), false);
      set(fwd(under.in_arc), fwd(over.out_arc), true);
      set(rev(over.out_arc), rev(under.in_arc), false);
    } else {
      // Disoriented smoothing: the walk reverses onto the partner strand and
      // the two marks come out with opposite senses.
      set(fwd(over.in_arc), rev(under.in_arc), true);
      set(fwd(under.in_arc), rev(over.in_arc), false);
      set(rev(over.out_arc), fwd(under.out_arc), false);
      set(rev(under.out_arc), fwd(over.out_arc), true);
    }
  }

  out.circles.assign(free_components, {});
  std::vector<char> visited(2 * arc_count, 0);
  for (int start = 0; start < 2 * arc_count; ++start) {
    if (visited[start]) continue;
    std::vector<Arrow> circle;
    int flag = start;
    do {
      visited[flag] = 1;
      visited[flag ^ 1] = 1;
      auto [crossing, sense] = mark[flag];
      circle.push_back(Arrow{order[static_cast<std::size_t>(crossing)], sense});
      flag = next[flag];
    } while (flag != start && !visited[flag]);
    out.circles.push_back(std::move(circle));
  }
  out.circle_count = static_cast<long>(out.circles.size());
  return out;
}

Laurent kauffman_statesum(const VirtualDiagram& d) {
  Laurent out;
  for (const auto& state : all_states(d)) {
    ResolvedState resolved = resolve_state(d, state);
    Exponents exps;
    if (resolved.a_count != 0) exps["A"] = static_cast<int>(2 * resolved.a_count);
    if (resolved.b_count != 0) exps["B"] = static_cast<int>(2 * resolved.b_count);
    if (resolved.circle_count != 1) exps["d"] = static_cast<int>(2 * (resolved.circle_count - 1));
    out += Laurent::monomial(1, std::move(exps));
  }
  return out;
}

RibbonGraph state_ribbon_graph(const VirtualDiagram& d, const State& state) {
  ResolvedState resolved = resolve_state(d, state);
  RibbonGraph g;
  g.circles = std::move(resolved.circles);
  for (const auto& label : d.crossing_labels()) g.signs[label] = state.at(label) == 'A' ? +1 : -1;
  return g;
}

namespace {

State toggled(const State& base, const EdgeSet& flips) {
  State out = base;
  for (const auto& label : flips) out[label] = out[label] == 'A' ? 'B' : 'A';
  return out;
}

}  // namespace

std::vector<State> connected_states(const VirtualDiagram& d, const State& base) {
  // Direct route: filter every state on its circle count.
  std::vector<State> direct;
  for (const auto& state : all_states(d))
    if (resolve_state(d, state).circle_count == 1) direct.push_back(state);

  // Duality route: quasi-trees of the base ribbon graph, toggled through the
  // state/subgraph correspondence.
  RibbonGraph base_graph = state_ribbon_graph(d, base);
  if (connected(base_graph)) {
    std::vector<State> via_duality;
    for (const auto& quasi_tree : quasi_trees(base_graph))
      via_duality.push_back(toggled(base, quasi_tree));
    std::sort(via_duality.begin(), via_duality.end());
    std::vector<State> sorted_direct = direct;
    std::sort(sorted_direct.begin(), sorted_direct.end());
    if (via_duality != sorted_direct)
      throw std::logic_error("connected-state routes disagree");
  } else if (!direct.empty()) {
    // Partial duality preserves components, so a split base graph admits no
    // one-circle state at all.
    throw std::logic_error("connected states found for a split base graph");
  }
  return direct;
}

CrossingClasses live_orientable_crossings(const VirtualDiagram& d, const State& connected_state,
                                          const EdgeOrder& order) {
  ResolvedState resolved = resolve_state(d, connected_state);
  if (resolved.circle_count != 1)
    throw precondition_error("live_orientable_crossings: state is not connected");
  const auto& word = resolved.circles[0];
  std::map<std::string, std::size_t> rank;
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;

  CrossingClasses out;
  for (const auto& label : d.crossing_labels()) {
    // Marks of `label` split the circle word; a lower-ordered label occurring
    // exactly once strictly between them kills liveness.
    std::vector<std::size_t> at;
    for (std::size_t i = 0; i < word.size(); ++i)
      if (word[i].edge == label) at.push_back(i);
    std::map<std::string, int> between;
    for (std::size_t i = (at[0] + 1) % word.size(); i != at[1]; i = (i + 1) % word.size())
      ++between[word[i].edge];
    bool live = true;
    for (const auto& [other, count] : between)
      if (count == 1 && rank.at(other) < rank.at(label)) live = false;
    if (!live) continue;
    bool orientable = word[at[0]].forward != word[at[1]].forward;
    if (!orientable) continue;
    (connected_state.at(label) == 'A' ? out.live_orientable_a : out.live_orientable_b)
        .insert(label);
  }
  return out;
}

Laurent connected_state_expansion(const VirtualDiagram& d, const EdgeOrder& order) {
  const auto labels = d.crossing_labels();
  {
    EdgeSet in_order(order.begin(), order.end());
    if (in_order.size() != order.size() || in_order != EdgeSet(labels.begin(), labels.end()))
      throw precondition_error("crossing order must list every crossing exactly once");
  }
  const Laurent a_var = Laurent::var("A");
  const Laurent b_var = Laurent::var("B");
  const Laurent bd_over_a = Laurent::monomial(1, {{"A", -2}, {"B", 2}, {"d", 2}});
  const Laurent ad_over_b = Laurent::monomial(1, {{"A", 2}, {"B", -2}, {"d", 2}});
  Laurent out;
  for (const auto& state : all_states(d)) {
    ResolvedState resolved = resolve_state(d, state);
    if (resolved.circle_count != 1) continue;
    CrossingClasses classes = live_orientable_crossings(d, state, order);
    Laurent term = a_var.pow(static_cast<unsigned>(resolved.a_count)) *
                   b_var.pow(static_cast<unsigned>(resolved.b_count));
    term *= (Laurent::one() + bd_over_a).pow(static_cast<unsigned>(classes.live_orientable_a.size()));
    term *= (Laurent::one() + ad_over_b).pow(static_cast<unsigned>(classes.live_orientable_b.size()));
    out += term;
  }
  return out;
}

}  // namespace ribbon
