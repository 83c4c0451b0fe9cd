#include "krsl2/webalg.hpp"

#include <deque>
#include <limits>
#include <stdexcept>

namespace krsl2 {

WebAlgebra::WebAlgebra(const Web& g) : WebAlgebra(g, mark_set(g)) {}

WebAlgebra::WebAlgebra(const Web& g, const MarkSet& marks) {
  auto cs = cycles(g);
  auto ec = edge_cycle_map(g, cs);
  const int ne = static_cast<int>(g.edges.size());
  auto marks_of = [&](int e) -> const std::vector<int>& {
    auto it = marks.find(e);
    if (it == marks.end() || it->second.empty())
      throw std::invalid_argument("WebAlgebra: edge " + std::to_string(e) + " has no marks");
    return it->second;
  };
  std::vector<std::vector<int>> at_vertex(g.vertices.size());
  for (int e = 0; e < ne; ++e) {
    if (g.edges[e].tail) at_vertex[*g.edges[e].tail].push_back(e);
    if (g.edges[e].head) at_vertex[*g.edges[e].head].push_back(e);
  }

  std::vector<int> parity(ne, -1);
  for (int k = 0; k < static_cast<int>(cs.size()); ++k) {
    int best = std::numeric_limits<int>::max(), start = -1;
    for (int e : cs[k].edges)
      for (int m : marks_of(e))
        if (m < best) {
          best = m;
          start = e;
        }
    reps_.push_back(x_var(best));
    std::deque<int> queue{start};
    parity[start] = 0;
    while (!queue.empty()) {
      int e = queue.front();
      queue.pop_front();
      for (const auto& end : {g.edges[e].tail, g.edges[e].head}) {
        if (!end) continue;
        for (int f : at_vertex[*end]) {
          if (f == e) continue;
          int want = parity[e] ^ 1;
          if (parity[f] < 0) {
            parity[f] = want;
            queue.push_back(f);
          } else if (parity[f] != want) {
            throw std::logic_error("WebAlgebra: cycle with inconsistent vertex parity");
          }
        }
      }
    }
  }
  for (int e = 0; e < ne; ++e)
    for (int m : marks_of(e)) labels_[x_var(m)] = {ec[e], parity[e] == 1};

  const MultiPoly h = MultiPoly::h(), a = MultiPoly::a();
  for (const auto& [v, l] : labels_) {
    MultiPoly x = MultiPoly::variable(v);
    relations_.push_back(x * x - h * x - a);
  }
  for (int e = 0; e < ne; ++e) {
    const auto& m = marks_of(e);
    for (std::size_t k = 0; k + 1 < m.size(); ++k) relations_.push_back(MultiPoly::x(m[k + 1]) - MultiPoly::x(m[k]));
  }
  for (const auto& [sink, source] : g.singular_pairs) {
    std::vector<MultiPoly> outs, ins;
    for (int e = 0; e < ne; ++e) {
      if (g.edges[e].tail == source) outs.push_back(MultiPoly::x(marks_of(e).front()));
      if (g.edges[e].head == sink) ins.push_back(MultiPoly::x(marks_of(e).back()));
    }
    if (outs.size() != 2 || ins.size() != 2) throw std::logic_error("WebAlgebra: malformed singular pair");
    relations_.push_back(outs[0] + outs[1] - h);
    relations_.push_back(ins[0] + ins[1] - h);
    relations_.push_back(outs[0] * outs[1] + a);
    relations_.push_back(ins[0] * ins[1] + a);
  }
}

MultiPoly WebAlgebra::image(VarId v) const {
  if (!is_mark_var(v)) return MultiPoly::variable(v);
  auto it = labels_.find(v);
  if (it == labels_.end()) throw std::invalid_argument("WebAlgebra: " + var_name(v) + " is not a mark of the web");
  MultiPoly rep = MultiPoly::variable(reps_[it->second.cycle]);
  return it->second.flipped ? MultiPoly::h() - rep : rep;
}

namespace {

// c m with rep^2 | m becomes c (m / rep^2)(h rep + a).
MultiPoly reduce_term(const Monomial& m, const Rational& c, VarId rep) {
  Monomial rest = Monomial::variable(rep, 2).quotient_of(m);
  MultiPoly r = MultiPoly::term(rest, c);
  return r * (MultiPoly::h() * MultiPoly::variable(rep) + MultiPoly::a());
}

}  // namespace

NormalForm WebAlgebra::normal_form(const MultiPoly& e) const {
  std::map<VarId, MultiPoly> bind;
  for (VarId v : e.variables()) {
    if (!is_mark_var(v)) continue;
    MultiPoly img = image(v);
    if (img != MultiPoly::variable(v)) bind[v] = img;
  }
  MultiPoly p = substitute(e, bind);
  for (;;) {
    bool changed = false;
    for (const auto& [m, c] : p.terms()) {
      for (VarId rep : reps_)
        if (m.exponent(rep) >= 2) {
          MultiPoly t = MultiPoly::term(m, c);
          p = p - t + reduce_term(m, c, rep);
          changed = true;
          break;
        }
      if (changed) break;
    }
    if (!changed) break;
  }
  return from_reduced(p);
}

NormalForm WebAlgebra::normal_form_random(const MultiPoly& e, std::mt19937_64& rng) const {
  MultiPoly p = e;
  for (;;) {
    struct Rule {
      VarId var;       // non-representative to substitute, or
      int term = -1;   // term index to reduce by rep
    };
    std::vector<Rule> rules;
    for (VarId v : p.variables()) {
      if (!is_mark_var(v)) continue;
      if (image(v) != MultiPoly::variable(v)) rules.push_back({v, -1});
    }
    const auto& ts = p.terms();
    for (int t = 0; t < static_cast<int>(ts.size()); ++t)
      for (VarId rep : reps_)
        if (ts[t].first.exponent(rep) >= 2) rules.push_back({rep, t});
    if (rules.empty()) break;
    const Rule& r = rules[std::uniform_int_distribution<std::size_t>(0, rules.size() - 1)(rng)];
    if (r.term < 0) {
      p = substitute(p, {{r.var, image(r.var)}});
    } else {
      const auto& [m, c] = ts[r.term];
      MultiPoly replaced = reduce_term(m, c, r.var) - MultiPoly::term(m, c);
      p += replaced;
    }
  }
  return from_reduced(p);
}

NormalForm WebAlgebra::from_reduced(const MultiPoly& p) const {
  AElem out(cycle_count());
  for (const auto& [m, c] : p.terms()) {
    Word w = 0;
    Monomial coef = m;
    for (int k = 0; k < cycle_count(); ++k) {
      std::uint32_t e = m.exponent(reps_[k]);
      if (e > 1) throw std::logic_error("WebAlgebra: unreduced representative power");
      if (e) w |= Word(1) << k;
      coef = coef.without(reps_[k]);
    }
    for (std::size_t v = 2; v < coef.width(); ++v)
      if (coef.exponent(v)) throw std::logic_error("WebAlgebra: stray variable " + var_name(v));
    out.add(w, MultiPoly::term(coef, c));
  }
  return out;
}

MultiPoly WebAlgebra::to_poly(const NormalForm& n) const {
  if (n.arity() != cycle_count()) throw std::invalid_argument("WebAlgebra: normal form arity mismatch");
  MultiPoly out;
  for (const auto& [w, c] : n.terms()) {
    MultiPoly t = c;
    for (int k = 0; k < cycle_count(); ++k)
      if ((w >> k) & 1u) t *= MultiPoly::variable(reps_[k]);
    out += t;
  }
  return out;
}

AElem WebAlgebra::act(const MultiPoly& e, const AElem& v) const {
  if (v.arity() != cycle_count()) throw std::invalid_argument("WebAlgebra::act: arity does not match the cycles");
  AElem out(v.arity());
  NormalForm n = normal_form(e);
  for (const auto& [w, c] : n.terms()) {
    AElem x = v;
    for (int k = 0; k < cycle_count(); ++k)
      if ((w >> k) & 1u) x = dot(x, k);
    out += x.scaled(c);
  }
  return out;
}

LaurentPoly WebAlgebra::graded_rank() const {
  return (LaurentPoly::monomial(0) + LaurentPoly::monomial(2)).pow(static_cast<unsigned>(cycle_count()));
}

}  // namespace krsl2
