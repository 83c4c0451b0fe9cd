#include "krsl2/linkweb.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

namespace krsl2 {

ParseError::ParseError(int line, int col, const std::string& what)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + what),
      line_(line),
      col_(col) {}

int Crossing::oriented_partner(int in) const {
  if (sign > 0) return in == 0 ? 1 : 2;  // 0 -> 1, 3 -> 2
  return in == 0 ? 3 : 2;                // 0 -> 3, 1 -> 2
}

namespace {

struct Occurrence {
  int crossing;
  int slot;
};

// Direction at each slot: +1 when the arc enters the crossing there, -1 when
// it leaves, 0 unknown.
using SlotDirs = std::vector<std::array<int, 4>>;

std::map<int, std::vector<Occurrence>> occurrences(const std::vector<std::array<int, 4>>& xs) {
  std::map<int, std::vector<Occurrence>> occ;
  for (int c = 0; c < static_cast<int>(xs.size()); ++c)
    for (int s = 0; s < 4; ++s) occ[xs[c][s]].push_back({c, s});
  return occ;
}

}  // namespace

LinkDiagram build_oriented(std::vector<Crossing> crossings, std::vector<int> loops) {
  LinkDiagram d;
  d.crossings_ = std::move(crossings);
  d.loops_ = std::move(loops);
  std::sort(d.loops_.begin(), d.loops_.end());
  d.index_arcs();
  d.label_components();
  return d;
}

LinkDiagram::LinkDiagram(std::vector<std::array<int, 4>> xs, std::vector<int> loops) {
  auto occ = occurrences(xs);
  for (const auto& [arc, list] : occ) {
    if (list.size() != 2)
      throw std::invalid_argument("arc " + std::to_string(arc) + " appears " + std::to_string(list.size()) +
                                  " times in crossing slots");
  }
  for (int l : loops)
    if (occ.count(l)) throw std::invalid_argument("loop arc " + std::to_string(l) + " also used by a crossing");
  {
    std::set<int> seen;
    for (int l : loops)
      if (!seen.insert(l).second) throw std::invalid_argument("loop arc " + std::to_string(l) + " repeated");
  }

  SlotDirs dir(xs.size(), std::array<int, 4>{1, 0, -1, 0});
  std::deque<Occurrence> work;
  for (int c = 0; c < static_cast<int>(xs.size()); ++c) {
    work.push_back({c, 0});
    work.push_back({c, 2});
  }
  auto set_dir = [&](int c, int s, int v) {
    if (dir[c][s] == v) return;
    if (dir[c][s] != 0)
      throw std::invalid_argument("inconsistent orientation at arc " + std::to_string(xs[c][s]));
    dir[c][s] = v;
    work.push_back({c, s});
  };
  auto propagate = [&] {
    while (!work.empty()) {
      auto [c, s] = work.front();
      work.pop_front();
      int v = dir[c][s];
      // The other end of this arc points the opposite way.
      for (const auto& o : occ.at(xs[c][s]))
        if (o.crossing != c || o.slot != s) set_dir(o.crossing, o.slot, -v);
      // The strand continues through the crossing.
      set_dir(c, (s + 2) % 4, -v);
    }
  };
  propagate();
  for (int c = 0; c < static_cast<int>(xs.size()); ++c) {
    if (dir[c][1] != 0) continue;
    // Component made only of over-strands: fall back on consecutive numbering.
    int j = xs[c][1], l = xs[c][3];
    bool enters_at_l = (j - l == 1) || (l - j > 1);
    set_dir(c, 3, enters_at_l ? 1 : -1);
    propagate();
  }

  crossings_.reserve(xs.size());
  for (int c = 0; c < static_cast<int>(xs.size()); ++c) {
    Crossing x;
    x.arcs = xs[c];
    x.over_in_slot = dir[c][3] == 1 ? 3 : 1;
    x.sign = x.over_in_slot == 3 ? 1 : -1;
    crossings_.push_back(x);
  }
  loops_ = std::move(loops);
  std::sort(loops_.begin(), loops_.end());
  index_arcs();
  label_components();
}

void LinkDiagram::index_arcs() {
  arcs_.clear();
  for (int c = 0; c < static_cast<int>(crossings_.size()); ++c) {
    const auto& x = crossings_[c];
    for (int k = 0; k < 2; ++k) {
      int in = x.in_slot(k), out = x.out_slot(k);
      auto& ai = arcs_[x.arcs[in]];
      auto& ao = arcs_[x.arcs[out]];
      if (ai.head) throw std::invalid_argument("arc " + std::to_string(x.arcs[in]) + " enters two crossings");
      if (ao.tail) throw std::invalid_argument("arc " + std::to_string(x.arcs[out]) + " leaves two crossings");
      ai.head = SlotRef{c, in};
      ao.tail = SlotRef{c, out};
    }
  }
  for (const auto& [id, info] : arcs_)
    if (!info.head || !info.tail) throw std::invalid_argument("dangling arc " + std::to_string(id));
  for (int l : loops_) {
    if (arcs_.count(l)) throw std::invalid_argument("loop arc " + std::to_string(l) + " also used by a crossing");
    arcs_[l] = ArcInfo{};
  }
}

void LinkDiagram::label_components() {
  std::map<int, int> comp;
  std::vector<int> labels;
  for (const auto& [id, info] : arcs_) {
    if (comp.count(id)) continue;
    int label = static_cast<int>(labels.size());
    labels.push_back(id);
    int cur = id;
    while (!comp.count(cur)) {
      comp[cur] = label;
      const auto& ai = arcs_.at(cur);
      if (!ai.head) break;
      const auto& x = crossings_[ai.head->crossing];
      cur = x.arcs[Crossing::through(ai.head->slot)];
    }
  }
  for (auto& [id, info] : arcs_) info.component = comp.at(id);
  component_count_ = static_cast<int>(labels.size());
  component_labels_ = std::move(labels);
}

int LinkDiagram::writhe() const {
  int w = 0;
  for (const auto& x : crossings_) w += x.sign;
  return w;
}

int LinkDiagram::under_component(int c) const { return arcs_.at(crossings_.at(c).arcs[0]).component; }
int LinkDiagram::over_component(int c) const { return arcs_.at(crossings_.at(c).arcs[1]).component; }

std::string LinkDiagram::to_pd_text() const {
  std::ostringstream os;
  for (const auto& x : crossings_)
    os << "X[" << x.arcs[0] << "," << x.arcs[1] << "," << x.arcs[2] << "," << x.arcs[3] << "]\n";
  for (int l : loops_) os << "O[" << l << "]\n";
  return os.str();
}

// ------------------------------------------------------------------ parser

LinkDiagram parse_diagram(const std::string& text) {
  std::vector<std::array<int, 4>> xs;
  std::vector<int> loops;
  std::size_t i = 0;
  int line = 1, col = 1;
  auto advance = [&] {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  };
  auto skip_space = [&] {
    while (i < text.size()) {
      char ch = text[i];
      if (ch == '#') {
        while (i < text.size() && text[i] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
        advance();
      } else {
        break;
      }
    }
  };
  auto expect = [&](char ch) {
    skip_space();
    if (i >= text.size() || text[i] != ch)
      throw ParseError(line, col, std::string("expected '") + ch + "'");
    advance();
  };
  auto read_int = [&]() -> int {
    skip_space();
    int l0 = line, c0 = col;
    std::size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) advance();
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) advance();
    std::string tok = text.substr(start, i - start);
    if (tok.empty() || tok == "-" || tok == "+") throw ParseError(l0, c0, "expected an arc id");
    try {
      return std::stoi(tok);
    } catch (const std::exception&) {
      throw ParseError(l0, c0, "arc id out of range");
    }
  };
  // Crossing index -> position, for diagnostics after validation.
  std::vector<std::pair<int, int>> where;

  int depth = 0;
  for (;;) {
    skip_space();
    if (i >= text.size()) break;
    int l0 = line, c0 = col;
    char ch = text[i];
    if (ch == ']' && depth > 0) {
      advance();
      --depth;
      continue;
    }
    if (text.compare(i, 3, "PD[") == 0) {
      advance();
      advance();
      advance();
      ++depth;
      continue;
    }
    if (ch == 'X') {
      advance();
      expect('[');
      std::array<int, 4> x{};
      for (int k = 0; k < 4; ++k) x[k] = read_int();
      expect(']');
      xs.push_back(x);
      where.emplace_back(l0, c0);
      continue;
    }
    if (ch == 'O') {
      advance();
      expect('[');
      loops.push_back(read_int());
      expect(']');
      continue;
    }
    throw ParseError(l0, c0, std::string("unexpected character '") + ch + "'");
  }
  if (depth != 0) throw ParseError(line, col, "unterminated PD[");

  // Report dangling or overused arcs at the first offending crossing.
  auto occ = occurrences(xs);
  for (const auto& [arc, list] : occ) {
    if (list.size() != 2) {
      auto [l, c] = where[list.front().crossing];
      throw ParseError(l, c, list.size() == 1 ? "dangling arc " + std::to_string(arc)
                                              : "arc " + std::to_string(arc) + " used more than twice");
    }
  }
  try {
    return LinkDiagram(std::move(xs), std::move(loops));
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, col, e.what());
  }
}

// ------------------------------------------------------------ constructions

LinkDiagram renumbered(const LinkDiagram& d) {
  std::map<int, int> relabel;
  int next = 1;
  for (int label : d.component_labels()) {
    int cur = label;
    while (!relabel.count(cur)) {
      relabel[cur] = next++;
      const auto& ai = d.arc(cur);
      if (!ai.head) break;
      const auto& x = d.crossings()[ai.head->crossing];
      cur = x.arcs[Crossing::through(ai.head->slot)];
    }
  }
  std::vector<Crossing> xs = d.crossings();
  for (auto& x : xs)
    for (auto& a : x.arcs) a = relabel.at(a);
  std::vector<int> loops;
  for (int l : d.loops()) loops.push_back(relabel.at(l));
  return build_oriented(std::move(xs), std::move(loops));
}

LinkDiagram braid_closure(int strands, const std::vector<int>& word) {
  if (strands < 1) throw std::invalid_argument("braid_closure: need at least one strand");
  std::vector<int> label(strands);
  std::iota(label.begin(), label.end(), 1);
  std::vector<int> initial = label;
  int fresh = strands + 1;
  std::vector<Crossing> xs;
  for (int g : word) {
    int p = std::abs(g) - 1;
    if (g == 0 || p + 1 >= strands) throw std::invalid_argument("braid_closure: generator out of range");
    int bl = label[p], br = label[p + 1];
    int tl = fresh++, tr = fresh++;
    Crossing x;
    if (g > 0) {
      x.arcs = {br, tr, tl, bl};
      x.over_in_slot = 3;
      x.sign = 1;
    } else {
      x.arcs = {bl, br, tr, tl};
      x.over_in_slot = 1;
      x.sign = -1;
    }
    xs.push_back(x);
    label[p] = tl;
    label[p + 1] = tr;
  }
  // Closing the braid identifies each top label with the bottom label below it.
  std::map<int, int> close;
  for (int p = 0; p < strands; ++p)
    if (label[p] != initial[p]) close[label[p]] = initial[p];
  for (auto& x : xs)
    for (auto& a : x.arcs)
      if (close.count(a)) a = close.at(a);
  std::vector<int> loops;
  for (int p = 0; p < strands; ++p)
    if (label[p] == initial[p]) loops.push_back(initial[p]);
  return renumbered(build_oriented(std::move(xs), std::move(loops)));
}

LinkDiagram switch_crossing(const LinkDiagram& d, int c) {
  std::vector<Crossing> xs = d.crossings();
  Crossing& x = xs.at(c);
  const auto a = x.arcs;
  if (x.sign > 0) {
    x.arcs = {a[3], a[0], a[1], a[2]};  // under now runs l -> j, over i -> k enters at slot 1
    x.over_in_slot = 1;
    x.sign = -1;
  } else {
    x.arcs = {a[1], a[2], a[3], a[0]};  // under now runs j -> l, over i -> k enters at slot 3
    x.over_in_slot = 3;
    x.sign = 1;
  }
  return build_oriented(std::move(xs), d.loops());
}

LinkDiagram mirror(const LinkDiagram& d) {
  LinkDiagram m = d;
  for (int c = 0; c < static_cast<int>(d.crossing_count()); ++c) m = switch_crossing(m, c);
  return m;
}

LinkDiagram smooth_crossing(const LinkDiagram& d, int c) {
  const Crossing& x = d.crossings().at(c);
  std::map<int, int> rename;
  std::function<int(int)> find = [&](int a) {
    auto it = rename.find(a);
    return it == rename.end() ? a : find(it->second);
  };
  std::set<int> closed;
  for (int k = 0; k < 2; ++k) {
    int in = x.in_slot(k);
    int out = x.oriented_partner(in);
    int ai = find(x.arcs[in]), ao = find(x.arcs[out]);
    if (ai == ao) {
      closed.insert(ai);
    } else {
      int keep = std::min(ai, ao), drop = std::max(ai, ao);
      rename[drop] = keep;
    }
  }
  std::vector<Crossing> xs;
  for (int k = 0; k < static_cast<int>(d.crossing_count()); ++k) {
    if (k == c) continue;
    Crossing y = d.crossings()[k];
    for (auto& a : y.arcs) a = find(a);
    xs.push_back(y);
  }
  std::vector<int> loops = d.loops();
  for (int a : closed) loops.push_back(find(a));
  return build_oriented(std::move(xs), std::move(loops));
}

// -------------------------------------------------------------- resolution

Web resolve(const LinkDiagram& d, const ResolutionWord& w) {
  const auto& xs = d.crossings();
  if (w.size() != xs.size()) throw std::invalid_argument("resolve: word does not cover all crossings");
  Web g;
  std::vector<int> sink(xs.size(), -1), source(xs.size(), -1);
  for (int c = 0; c < static_cast<int>(xs.size()); ++c) {
    if (w[c] != Smoothing::Singular) continue;
    sink[c] = static_cast<int>(g.vertices.size());
    g.vertices.push_back({Vertex::Kind::Sink, c});
    source[c] = static_cast<int>(g.vertices.size());
    g.vertices.push_back({Vertex::Kind::Source, c});
    g.singular_pairs.emplace_back(sink[c], source[c]);
  }
  // Arc following `a` in the resolved picture, or nullopt when `a` ends at a sink.
  auto next = [&](int a) -> std::optional<int> {
    const auto& h = d.arc(a).head;
    if (!h) return a;  // crossing-free loop
    if (w[h->crossing] == Smoothing::Singular) return std::nullopt;
    const auto& x = xs[h->crossing];
    return x.arcs[x.oriented_partner(h->slot)];
  };
  std::set<int> used;
  // Edges starting at source vertices, in crossing and slot order.
  for (int c = 0; c < static_cast<int>(xs.size()); ++c) {
    if (w[c] != Smoothing::Singular) continue;
    for (int k = 0; k < 2; ++k) {
      Edge e;
      e.tail = source[c];
      int a = xs[c].arcs[xs[c].out_slot(k)];
      for (;;) {
        e.marks.push_back(a);
        used.insert(a);
        auto n = next(a);
        if (!n) {
          e.head = sink[d.arc(a).head->crossing];
          break;
        }
        a = *n;
      }
      g.edges.push_back(std::move(e));
    }
  }
  for (const auto& [id, info] : d.arcs()) {
    if (used.count(id)) continue;
    Edge e;
    int a = id;
    do {
      e.marks.push_back(a);
      used.insert(a);
      a = *next(a);
    } while (a != id);
    g.edges.push_back(std::move(e));
  }

  // Provenance: circle count of the all-oriented resolution.
  std::set<int> seen;
  int circles = 0;
  for (const auto& [id, info] : d.arcs()) {
    if (seen.count(id)) continue;
    ++circles;
    int a = id;
    while (seen.insert(a).second) {
      const auto& h = d.arc(a).head;
      if (!h) break;
      const auto& x = xs[h->crossing];
      a = x.arcs[x.oriented_partner(h->slot)];
    }
  }
  g.oriented_circle_count = circles;
  return g;
}

std::vector<Cycle> cycles(const Web& g) {
  // Union edges that share a vertex.
  std::vector<int> parent(g.edges.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int e) { return parent[e] == e ? e : parent[e] = find(parent[e]); };
  std::vector<std::vector<int>> at_vertex(g.vertices.size());
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    if (g.edges[e].tail) at_vertex[*g.edges[e].tail].push_back(e);
    if (g.edges[e].head) at_vertex[*g.edges[e].head].push_back(e);
  }
  for (const auto& list : at_vertex)
    for (std::size_t k = 1; k < list.size(); ++k) parent[find(list[k])] = find(list[0]);

  std::map<int, std::vector<int>> groups;
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) groups[find(e)].push_back(e);

  std::vector<Cycle> out;
  for (const auto& [root, members] : groups) {
    Cycle cy;
    cy.smallest_mark = std::numeric_limits<int>::max();
    for (int e : members)
      for (int m : g.edges[e].marks) cy.smallest_mark = std::min(cy.smallest_mark, m);
    // Walk the cycle: from an edge, cross its head (or tail) vertex to the
    // other edge there, alternating direction as the vertex types dictate.
    int start = members.front();
    cy.edges.push_back(start);
    if (g.edges[start].head) {
      int cur = start;
      int v = *g.edges[start].head;
      std::set<int> vs;
      for (;;) {
        vs.insert(v);
        const auto& list = at_vertex[v];
        int nxt = list[0] == cur ? list[1] : list[0];
        if (nxt == start) break;
        cy.edges.push_back(nxt);
        const auto& en = g.edges[nxt];
        v = (en.tail && *en.tail == v) ? *en.head : *en.tail;
        cur = nxt;
      }
      cy.vertex_count = static_cast<int>(vs.size());
    }
    out.push_back(std::move(cy));
  }
  std::sort(out.begin(), out.end(), [](const Cycle& l, const Cycle& r) { return l.smallest_mark < r.smallest_mark; });
  return out;
}

std::vector<int> edge_cycle_map(const Web& g, const std::vector<Cycle>& cs) {
  std::vector<int> m(g.edges.size(), -1);
  for (int k = 0; k < static_cast<int>(cs.size()); ++k)
    for (int e : cs[k].edges) m[e] = k;
  return m;
}

MarkSet mark_set(const Web& g) {
  MarkSet ms;
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) ms[e] = g.edges[e].marks;
  return ms;
}

int p_parity(const Web& g) {
  if (!g.oriented_circle_count) throw std::logic_error("p_parity: web has no resolution provenance");
  return *g.oriented_circle_count % 2;
}

void validate_web(const Web& g) {
  std::vector<int> in(g.vertices.size(), 0), out(g.vertices.size(), 0);
  std::set<int> marks;
  for (const auto& e : g.edges) {
    if (e.marks.empty()) throw std::logic_error("web edge without marks");
    for (int m : e.marks)
      if (!marks.insert(m).second) throw std::logic_error("mark used twice");
    if (e.tail.has_value() != e.head.has_value()) throw std::logic_error("half-open edge");
    if (e.tail) ++out[*e.tail];
    if (e.head) ++in[*e.head];
  }
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    bool sink = g.vertices[v].kind == Vertex::Kind::Sink;
    if (sink ? (in[v] != 2 || out[v] != 0) : (out[v] != 2 || in[v] != 0))
      throw std::logic_error("vertex " + std::to_string(v) + " is not bivalent of its type");
  }
  for (const auto& c : cycles(g))
    if (c.vertex_count % 2) throw std::logic_error("cycle with an odd number of vertices");
}

std::vector<std::vector<Rational>> linking_matrix(const LinkDiagram& d) {
  int n = d.component_count();
  std::vector<std::vector<Rational>> lk(n, std::vector<Rational>(n, Rational(0)));
  for (int c = 0; c < static_cast<int>(d.crossing_count()); ++c) {
    int i = d.under_component(c), j = d.over_component(c);
    int s = d.crossings()[c].sign;
    if (i == j) {
      lk[i][i] += s;
    } else {
      lk[i][j] += Rational(s, 2);
      lk[j][i] += Rational(s, 2);
    }
  }
  return lk;
}

}  // namespace krsl2
