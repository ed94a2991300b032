#include "ribbon/ribbon_graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ribbon/errors.hpp"

namespace ribbon {

EdgeSet RibbonGraph::edge_set() const {
  EdgeSet out;
  for (const auto& [label, sign] : signs) out.insert(label);
  return out;
}

int RibbonGraph::sign(const std::string& label) const {
  auto it = signs.find(label);
  if (it == signs.end()) throw precondition_error("unknown edge " + label);
  return it->second;
}

int RibbonGraph::negative_edge_count() const {
  int n = 0;
  for (const auto& [label, sign] : signs)
    if (sign < 0) ++n;
  return n;
}

int RibbonGraph::negative_edge_count(const EdgeSet& within) const {
  int n = 0;
  for (const auto& label : within)
    if (sign(label) < 0) ++n;
  return n;
}

int RibbonGraph::positive_edge_count(const EdgeSet& within) const {
  int n = 0;
  for (const auto& label : within)
    if (sign(label) > 0) ++n;
  return n;
}

void validate(const RibbonGraph& g) {
  std::map<std::string, int> occurrences;
  for (const auto& circle : g.circles)
    for (const auto& arrow : circle) ++occurrences[arrow.edge];
  for (const auto& [label, count] : occurrences)
    if (count != 2) throw parse_error("edge " + label + " appears " + std::to_string(count) + " times");
  for (const auto& [label, count] : occurrences)
    if (!g.signs.count(label)) throw parse_error("edge " + label + " has no sign entry");
  for (const auto& [label, sign] : g.signs) {
    if (!occurrences.count(label)) throw parse_error("sign given for unknown edge " + label);
    if (sign != 1 && sign != -1) throw parse_error("bad sign for edge " + label);
  }
}

// ---------------------------------------------------------------------------
// Parsing / serialization
// ---------------------------------------------------------------------------

RibbonGraph parse_ribbon(const std::string& text) {
  RibbonGraph g;
  std::map<std::string, int> explicit_signs;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "sign") {
      std::string label, sign_tok;
      if (!(ls >> label >> sign_tok) || (sign_tok != "+" && sign_tok != "-"))
        throw parse_error("malformed sign line: " + line);
      explicit_signs[label] = sign_tok == "+" ? +1 : -1;
    } else if (head == "circle:") {
      std::vector<Arrow> circle;
      std::string tok;
      while (ls >> tok) {
        char dir = tok.back();
        if (tok.size() < 2 || (dir != '>' && dir != '<'))
          throw parse_error("malformed arrow token: " + tok);
        circle.push_back(Arrow{tok.substr(0, tok.size() - 1), dir == '>'});
      }
      g.circles.push_back(std::move(circle));
    } else {
      throw parse_error("unrecognized line: " + line);
    }
  }
  for (const auto& circle : g.circles)
    for (const auto& arrow : circle)
      if (!g.signs.count(arrow.edge)) g.signs[arrow.edge] = +1;
  for (const auto& [label, sign] : explicit_signs) {
    if (!g.signs.count(label)) throw parse_error("sign given for unknown edge " + label);
    g.signs[label] = sign;
  }
  validate(g);
  return g;
}

std::string serialize_ribbon(const RibbonGraph& g) {
  std::ostringstream out;
  for (const auto& [label, sign] : g.signs)
    if (sign < 0) out << "sign " << label << " -\n";
  for (const auto& circle : g.circles) {
    out << "circle:";
    for (const auto& arrow : circle) out << ' ' << arrow.edge << (arrow.forward ? '>' : '<');
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Boundary tracing (flag model)
// ---------------------------------------------------------------------------

namespace {

// An arrow occupies a segment of its circle with two endpoint corners: START
// is met first walking the circle's orientation, FINISH second. The walkable
// boundary pieces are circle gap arcs between consecutive segments, the
// segments of detached arrows (transcribed as marks), and for each attached
// edge the two band sides joining its arrows head-to-head and tail-to-tail.
struct Piece {
  int end_a = -1;          // endpoint node ids; -1 only while building
  int end_b = -1;
  int transcribe = -1;     // index into occurrence list of the edge label to emit, -1 for gaps
  bool emit_forward = true;  // arrow direction relative to a->b traversal
};

struct Occurrence {
  int circle = 0;
  int pos = 0;
  std::string edge;
  bool forward = true;
};

}  // namespace

std::vector<std::vector<Arrow>> boundary_components(const RibbonGraph& g, const EdgeSet& attached) {
  for (const auto& label : attached)
    if (!g.has_edge(label)) throw precondition_error("attached edge not in graph: " + label);

  std::vector<Occurrence> occs;
  std::vector<std::vector<int>> occ_of_circle(g.circles.size());
  for (std::size_t c = 0; c < g.circles.size(); ++c) {
    for (std::size_t p = 0; p < g.circles[c].size(); ++p) {
      occ_of_circle[c].push_back(static_cast<int>(occs.size()));
      occs.push_back(
          Occurrence{static_cast<int>(c), static_cast<int>(p), g.circles[c][p].edge, g.circles[c][p].forward});
    }
  }

  // Endpoint node ids: 2*i = START of occurrence i, 2*i+1 = FINISH.
  auto start_of = [](int occ) { return 2 * occ; };
  auto finish_of = [](int occ) { return 2 * occ + 1; };
  auto head_of = [&](int occ) { return occs[occ].forward ? finish_of(occ) : start_of(occ); };
  auto tail_of = [&](int occ) { return occs[occ].forward ? start_of(occ) : finish_of(occ); };

  std::vector<Piece> pieces;
  std::size_t empty_circles = 0;

  for (std::size_t c = 0; c < g.circles.size(); ++c) {
    const auto& on_circle = occ_of_circle[c];
    if (on_circle.empty()) {
      ++empty_circles;
      continue;
    }
    const int m = static_cast<int>(on_circle.size());
    for (int i = 0; i < m; ++i) {
      // Gap arc from FINISH of occurrence i to START of occurrence i+1.
      pieces.push_back(Piece{finish_of(on_circle[i]), start_of(on_circle[(i + 1) % m]), -1, true});
    }
    for (int i = 0; i < m; ++i) {
      int occ = on_circle[i];
      if (!attached.count(occs[occ].edge)) {
        // Detached segments stay on the boundary and carry the mark.
        pieces.push_back(Piece{start_of(occ), finish_of(occ), occ, occs[occ].forward});
      }
    }
  }

  // Band sides of attached edges: head(a)-head(a'), tail(a)-tail(a'), both
  // transcribed in the a -> a' direction.
  for (const auto& label : attached) {
    int first = -1, second = -1;
    for (std::size_t i = 0; i < occs.size(); ++i) {
      if (occs[i].edge != label) continue;
      (first < 0 ? first : second) = static_cast<int>(i);
    }
    pieces.push_back(Piece{head_of(first), head_of(second), first, true});
    pieces.push_back(Piece{tail_of(first), tail_of(second), first, true});
  }

  // Each endpoint is incident to exactly two pieces.
  std::vector<std::vector<std::pair<int, bool>>> at_endpoint(2 * occs.size());
  for (std::size_t p = 0; p < pieces.size(); ++p) {
    at_endpoint[pieces[p].end_a].push_back({static_cast<int>(p), true});    // leaves via end_a
    at_endpoint[pieces[p].end_b].push_back({static_cast<int>(p), false});
  }

  // Directed flags: 2*p = piece p traversed a->b, 2*p+1 = b->a.
  auto flag_target = [&](int flag) {
    const Piece& piece = pieces[flag / 2];
    return flag % 2 == 0 ? piece.end_b : piece.end_a;
  };
  auto successor = [&](int flag) {
    int node = flag_target(flag);
    for (auto [p, from_a] : at_endpoint[node]) {
      if (p == flag / 2) continue;
      return from_a ? 2 * p : 2 * p + 1;  // leave the node along the other piece
    }
    throw std::logic_error("boundary walk: endpoint is not incident to two pieces");
  };

  std::vector<std::vector<Arrow>> out(empty_circles);  // isolated vertices trace to empty circles
  std::vector<char> visited(2 * pieces.size(), 0);
  for (std::size_t start = 0; start < 2 * pieces.size(); ++start) {
    if (visited[start]) continue;
    std::vector<Arrow> circle;
    int flag = static_cast<int>(start);
    do {
      visited[flag] = 1;
      visited[flag ^ 1] = 1;  // retire the mirror flag so each component is traced once
      const Piece& piece = pieces[flag / 2];
      if (piece.transcribe >= 0) {
        bool along = flag % 2 == 0;
        circle.push_back(Arrow{occs[piece.transcribe].edge, along == piece.emit_forward});
      }
      flag = successor(flag);
    } while (flag != static_cast<int>(start) && !visited[flag]);
    out.push_back(std::move(circle));
  }
  return out;
}

RibbonGraph spanning_subgraph(const RibbonGraph& g, const EdgeSet& keep) {
  RibbonGraph out;
  out.circles.reserve(g.circles.size());
  for (const auto& circle : g.circles) {
    std::vector<Arrow> kept;
    for (const auto& arrow : circle)
      if (keep.count(arrow.edge)) kept.push_back(arrow);
    out.circles.push_back(std::move(kept));
  }
  for (const auto& label : keep) out.signs[label] = g.sign(label);
  return out;
}

bool subgraph_orientable(const RibbonGraph& g, const EdgeSet& keep) {
  // 2-colour circles so that every kept edge is untwisted; a twisted loop or
  // an odd-parity cycle obstructs. Same-sense arrow pairs are the twists.
  std::map<std::string, std::vector<std::pair<int, bool>>> ends;
  for (std::size_t c = 0; c < g.circles.size(); ++c)
    for (const auto& arrow : g.circles[c])
      if (keep.count(arrow.edge)) ends[arrow.edge].push_back({static_cast<int>(c), arrow.forward});

  std::vector<int> colour(g.circles.size(), -1);
  std::vector<std::vector<std::pair<int, int>>> adj(g.circles.size());  // (neighbour, parity)
  for (const auto& [label, pair] : ends) {
    int twist = pair[0].second == pair[1].second ? 1 : 0;
    if (pair[0].first == pair[1].first) {
      if (twist) return false;
      continue;
    }
    adj[pair[0].first].push_back({pair[1].first, twist});
    adj[pair[1].first].push_back({pair[0].first, twist});
  }
  for (std::size_t root = 0; root < g.circles.size(); ++root) {
    if (colour[root] != -1) continue;
    colour[root] = 0;
    std::vector<int> stack{static_cast<int>(root)};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto [w, parity] : adj[v]) {
        int want = colour[v] ^ parity;
        if (colour[w] == -1) {
          colour[w] = want;
          stack.push_back(w);
        } else if (colour[w] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

bool orientable(const RibbonGraph& g) { return subgraph_orientable(g, g.edge_set()); }

GraphCounts subgraph_counts(const RibbonGraph& g, const EdgeSet& keep) {
  GraphCounts out;
  out.v = static_cast<long>(g.circles.size());
  out.e = static_cast<long>(keep.size());
  AbstractGraph underlying = underlying_graph(g);
  unsigned long mask = 0;
  for (std::size_t i = 0; i < underlying.edges.size(); ++i)
    if (keep.count(underlying.edges[i].label)) mask |= 1ul << i;
  out.k = out.v == 0 ? 0 : component_count(underlying, mask);
  out.r = out.v - out.k;
  out.n = out.e - out.r;
  out.f = static_cast<long>(boundary_components(g, keep).size());
  out.t = subgraph_orientable(g, keep) ? 0 : 1;
  return out;
}

GraphCounts counts(const RibbonGraph& g) { return subgraph_counts(g, g.edge_set()); }

AbstractGraph underlying_graph(const RibbonGraph& g) {
  AbstractGraph out;
  out.vertex_count = static_cast<int>(g.circles.size());
  std::map<std::string, std::vector<int>> ends;
  for (std::size_t c = 0; c < g.circles.size(); ++c)
    for (const auto& arrow : g.circles[c]) ends[arrow.edge].push_back(static_cast<int>(c));
  for (const auto& [label, cs] : ends)
    out.edges.push_back(AbstractGraph::Edge{cs[0], cs[1], g.sign(label), label});
  return out;
}

bool connected(const RibbonGraph& g) {
  if (g.circles.empty()) return false;
  return component_count(underlying_graph(g), ~0ul) == 1;
}

// ---------------------------------------------------------------------------
// Canonical form
// ---------------------------------------------------------------------------

namespace {

std::string circle_token_string(const std::vector<Arrow>& circle, bool flipped) {
  std::vector<Arrow> tokens = circle;
  if (flipped) {
    std::reverse(tokens.begin(), tokens.end());
    for (auto& arrow : tokens) arrow.forward = !arrow.forward;
  }
  // Least rotation of the token sequence.
  auto render = [&](std::size_t shift) {
    std::string s;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      const Arrow& a = tokens[(i + shift) % tokens.size()];
      s += a.edge;
      s += a.forward ? '>' : '<';
      s += ' ';
    }
    return s;
  };
  if (tokens.empty()) return "";
  std::string best = render(0);
  for (std::size_t shift = 1; shift < tokens.size(); ++shift) best = std::min(best, render(shift));
  return best;
}

}  // namespace

std::string canonical_form(const RibbonGraph& g) {
  const std::size_t v = g.circles.size();
  const std::size_t e = g.signs.size();
  if (v + e > 22) throw precondition_error("canonical_form: graph too large");
  std::vector<std::string> labels;
  for (const auto& [label, sign] : g.signs) labels.push_back(label);

  // Minimize over the presentation gauge: re-orienting any vertex disc
  // (circle flip) or any edge disc (reversing both of its arrows), plus
  // rotations and circle order.
  std::string best;
  bool have = false;
  for (unsigned long rev = 0; rev < (1ul << e); ++rev) {
    std::vector<std::vector<Arrow>> circles = g.circles;
    for (std::size_t i = 0; i < e; ++i) {
      if (!(rev & (1ul << i))) continue;
      for (auto& circle : circles)
        for (auto& arrow : circle)
          if (arrow.edge == labels[i]) arrow.forward = !arrow.forward;
    }
    for (unsigned long flips = 0; flips < (1ul << v); ++flips) {
      std::vector<std::string> rows;
      rows.reserve(v);
      for (std::size_t c = 0; c < v; ++c)
        rows.push_back(circle_token_string(circles[c], flips & (1ul << c)));
      std::sort(rows.begin(), rows.end());
      std::string candidate;
      for (const auto& row : rows) {
        candidate += row;
        candidate += '|';
      }
      if (!have || candidate < best) {
        best = std::move(candidate);
        have = true;
      }
    }
  }
  std::string sig = "/signs:";
  for (const auto& [label, sign] : g.signs) sig += label + (sign < 0 ? "-" : "+");
  return best + sig;
}

bool same_graph(const RibbonGraph& a, const RibbonGraph& b) {
  return canonical_form(a) == canonical_form(b);
}

}  // namespace ribbon
