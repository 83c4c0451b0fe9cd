#include "krsl2/cube.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include <json.hpp>

#include "krsl2/parallel.hpp"
#include "krsl2/skein.hpp"

namespace krsl2 {

int Cube::arc_index(int arc) const {
  auto it = std::lower_bound(arc_ids.begin(), arc_ids.end(), arc);
  if (it == arc_ids.end() || *it != arc) throw std::out_of_range("unknown arc " + std::to_string(arc));
  return static_cast<int>(it - arc_ids.begin());
}

Smoothing later_smoothing(int sign) { return sign > 0 ? Smoothing::Oriented : Smoothing::Singular; }

namespace {

Smoothing earlier_smoothing(int sign) { return sign > 0 ? Smoothing::Singular : Smoothing::Oriented; }

struct EdgeShape {
  bool merge = true;
  int s0 = -1, s1 = -1;  // touched source cycles
  int t0 = -1, t1 = -1;  // touched target cycles
  std::vector<int> untouched_source;  // in source order
  std::vector<int> untouched_target;  // image of each untouched source cycle
};

EdgeShape edge_shape(const Cube& cube, const CubeVertex& src, const CubeVertex& tgt, int crossing) {
  const auto& x = cube.diagram.crossings()[crossing];
  std::vector<int> sc, tc;
  for (int a : x.arcs) {
    int i = cube.arc_index(a);
    sc.push_back(src.arc_cycle[i]);
    tc.push_back(tgt.arc_cycle[i]);
  }
  std::sort(sc.begin(), sc.end());
  sc.erase(std::unique(sc.begin(), sc.end()), sc.end());
  std::sort(tc.begin(), tc.end());
  tc.erase(std::unique(tc.begin(), tc.end()), tc.end());

  EdgeShape e;
  if (sc.size() == 2 && tc.size() == 1) {
    e.merge = true;
    e.s0 = sc[0];
    e.s1 = sc[1];
    e.t0 = tc[0];
  } else if (sc.size() == 1 && tc.size() == 2) {
    e.merge = false;
    e.s0 = sc[0];
    e.t0 = tc[0];
    e.t1 = tc[1];
  } else {
    throw std::logic_error("edge_shape: resolution change is neither a merge nor a split");
  }
  for (int k = 0; k < src.cycle_count(); ++k) {
    if (k == e.s0 || k == e.s1) continue;
    int arc = src.cycles[k].smallest_mark;
    e.untouched_source.push_back(k);
    e.untouched_target.push_back(tgt.arc_cycle[cube.arc_index(arc)]);
  }
  return e;
}

int changed_crossing(const CubeVertex& src, const CubeVertex& tgt) {
  Mask diff = tgt.mask ^ src.mask;
  if (diff == 0 || (diff & (diff - 1)) != 0 || (tgt.mask & diff) == 0)
    throw std::invalid_argument("edge_map: vertices are not adjacent");
  int c = 0;
  while (!((diff >> c) & 1u)) ++c;
  return c;
}

int edge_sign(Mask source, int crossing) {
  Mask below = source & ((Mask(1) << crossing) - 1);
  return std::popcount(below) % 2 ? -1 : 1;
}

bool is_zero_coef(const MultiPoly& p) { return p.is_zero(); }
bool is_zero_coef(const Rational& r) { return r == 0; }

template <class C, class Convert>
Complex<C> assemble(const Cube& cube, int jobs, Convert convert, bool graded) {
  Complex<C> out;
  out.graded = graded;
  const std::size_t nv = cube.vertices.size();
  std::vector<Mask> order(nv);
  for (std::size_t v = 0; v < nv; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](Mask l, Mask r) {
    return cube.vertices[l].hom_degree < cube.vertices[r].hom_degree;
  });
  std::vector<std::size_t> base(nv);
  std::size_t total = 0;
  for (Mask v : order) {
    base[v] = total;
    total += std::size_t(1) << cube.vertices[v].cycle_count();
  }
  out.gens.resize(total);
  out.out.resize(total);
  for (Mask v : order) {
    const auto& cv = cube.vertices[v];
    Word words = Word(1) << cv.cycle_count();
    for (Word w = 0; w < words; ++w) {
      auto& g = out.gens[base[v] + w];
      g.hom = cv.hom_degree;
      g.qdeg = cv.q_shift + word_degree(w, cv.cycle_count());
      g.vertex = v;
      g.word = w;
    }
  }

  const int n = static_cast<int>(cube.diagram.crossing_count());
  parallel_for(nv, jobs, [&](std::size_t vi) {
    const auto& src = cube.vertices[vi];
    for (int c = 0; c < n; ++c) {
      if ((src.mask >> c) & 1u) continue;
      const auto& tgt = cube.vertices[src.mask | (Mask(1) << c)];
      EdgeShape e = edge_shape(cube, src, tgt, c);
      int sign = edge_sign(src.mask, c);
      Word words = Word(1) << src.cycle_count();
      for (Word w = 0; w < words; ++w) {
        Word rest = 0;
        for (std::size_t k = 0; k < e.untouched_source.size(); ++k)
          if ((w >> e.untouched_source[k]) & 1u) rest |= Word(1) << e.untouched_target[k];
        auto& row = out.out[base[vi] + w];
        auto emit = [&](Word tw, LocalCoef lc) {
          lc.one *= sign;
          lc.h *= sign;
          lc.a *= sign;
          C coef = convert(lc);
          if (is_zero_coef(coef)) return;
          int t = static_cast<int>(base[tgt.mask] + (rest | tw));
          auto it = row.find(t);
          if (it == row.end()) {
            row.emplace(t, std::move(coef));
          } else {
            it->second += coef;
            if (is_zero_coef(it->second)) row.erase(it);
          }
        };
        if (e.merge) {
          bool p = (w >> e.s0) & 1u, q = (w >> e.s1) & 1u;
          Word tx = Word(1) << e.t0;
          if (p && q) {
            emit(tx, {0, 1, 0});
            emit(0, {0, 0, 1});
          } else {
            emit((p || q) ? tx : 0, {1, 0, 0});
          }
        } else {
          Word x0 = Word(1) << e.t0, x1 = Word(1) << e.t1;
          if (!((w >> e.s0) & 1u)) {
            emit(x0, {1, 0, 0});
            emit(x1, {1, 0, 0});
            emit(0, {0, -1, 0});
          } else {
            emit(x0 | x1, {1, 0, 0});
            emit(0, {0, 0, 1});
          }
        }
      }
    }
  });
  return out;
}

}  // namespace

Cube build_cube(const LinkDiagram& d, int jobs) {
  const int n = static_cast<int>(d.crossing_count());
  if (n > 24) throw std::invalid_argument("build_cube: too many crossings");
  Cube cube;
  cube.diagram = d;
  for (const auto& [id, info] : d.arcs()) cube.arc_ids.push_back(id);
  const std::size_t nv = std::size_t(1) << n;
  cube.vertices.resize(nv);
  parallel_for(nv, jobs, [&](std::size_t m) {
    CubeVertex& v = cube.vertices[m];
    v.mask = m;
    v.word.resize(n);
    for (int c = 0; c < n; ++c) {
      int sign = d.crossings()[c].sign;
      v.word[c] = ((m >> c) & 1u) ? later_smoothing(sign) : earlier_smoothing(sign);
      auto [i, a] = smoothing_grading(sign, v.word[c]);
      v.hom_degree += i;
      v.q_shift += a;
    }
    v.web = resolve(d, v.word);
    v.cycles = cycles(v.web);
    v.arc_cycle.assign(cube.arc_ids.size(), -1);
    auto ec = edge_cycle_map(v.web, v.cycles);
    for (int e = 0; e < static_cast<int>(v.web.edges.size()); ++e)
      for (int mark : v.web.edges[e].marks) v.arc_cycle[cube.arc_index(mark)] = ec[e];
  });
  for (Mask m = 0; m < nv; ++m)
    for (int c = 0; c < n; ++c)
      if (!((m >> c) & 1u)) cube.edges.push_back({m, m | (Mask(1) << c), c, edge_sign(m, c)});
  return cube;
}

CobordismMap edge_map(const Cube& cube, const CubeVertex& source, const CubeVertex& target) {
  int c = changed_crossing(source, target);
  EdgeShape e = edge_shape(cube, source, target, c);
  CobordismMap f(source.cycle_count(), edge_sign(source.mask, c));
  std::vector<int> front;
  front.push_back(e.s0);
  if (e.merge) front.push_back(e.s1);
  front.insert(front.end(), e.untouched_source.begin(), e.untouched_source.end());
  f.permute(front);
  if (e.merge) {
    f.merge(0);
  } else {
    f.split(0);
  }
  // Intermediate slots: touched target cycles first, then the untouched ones.
  std::vector<int> inter_target;
  inter_target.push_back(e.t0);
  if (!e.merge) inter_target.push_back(e.t1);
  inter_target.insert(inter_target.end(), e.untouched_target.begin(), e.untouched_target.end());
  std::vector<int> back(target.cycle_count(), -1);
  for (int k = 0; k < static_cast<int>(inter_target.size()); ++k) back[inter_target[k]] = k;
  f.permute(back);
  return f;
}

GradedComplex assemble_complex(const Cube& cube, int jobs) {
  return assemble<MultiPoly>(
      cube, jobs,
      [](const LocalCoef& lc) {
        return MultiPoly(lc.one) + MultiPoly(lc.h) * MultiPoly::h() + MultiPoly(lc.a) * MultiPoly::a();
      },
      true);
}

RationalComplex assemble_specialized(const Cube& cube, const Rational& a0, const Rational& h0, int jobs) {
  return assemble<Rational>(
      cube, jobs, [&](const LocalCoef& lc) { return Rational(Rational(lc.one) + lc.h * h0 + lc.a * a0); },
      a0 == 0 && h0 == 0);
}

template <class C>
std::string check_d_squared(const Complex<C>& c) {
  for (std::size_t s = 0; s < c.size(); ++s) {
    std::map<int, C> dd;
    for (const auto& [t, x] : c.out[s])
      for (const auto& [u, y] : c.out[t]) {
        C p = x * y;
        dd[u] += p;
      }
    for (const auto& [u, v] : dd)
      if (!is_zero_coef(v))
        return "d^2 nonzero from generator " + std::to_string(s) + " to " + std::to_string(u);
  }
  return {};
}

template std::string check_d_squared<MultiPoly>(const Complex<MultiPoly>&);
template std::string check_d_squared<Rational>(const Complex<Rational>&);

std::string check_grading(const GradedComplex& c) {
  for (std::size_t s = 0; s < c.size(); ++s)
    for (const auto& [t, x] : c.out[s]) {
      auto d = x.homogeneous_degree();
      int want = c.gens[s].qdeg - c.gens[t].qdeg;
      if (!d || *d != want)
        return "entry " + x.to_string() + " from " + std::to_string(s) + " to " + std::to_string(t) +
               " is not of degree " + std::to_string(want);
      if (c.gens[t].hom != c.gens[s].hom + 1) return "entry does not raise the homological degree";
    }
  return {};
}

std::string complex_to_json(const GradedComplex& c) {
  using nlohmann::json;
  std::map<int, std::vector<int>> by_degree;
  for (std::size_t s = 0; s < c.size(); ++s) by_degree[c.gens[s].hom].push_back(static_cast<int>(s));
  std::vector<int> local(c.size(), -1);
  for (const auto& [i, list] : by_degree)
    for (std::size_t k = 0; k < list.size(); ++k) local[list[k]] = static_cast<int>(k);

  json degrees = json::array();
  for (const auto& [i, list] : by_degree) {
    json gens = json::array();
    for (int s : list) {
      const auto& g = c.gens[s];
      gens.push_back({{"q", g.qdeg}, {"vertex", g.vertex}, {"word", g.word}});
    }
    json entries = json::array();
    for (int s : list)
      for (const auto& [t, x] : c.out[s])
        entries.push_back({{"row", local[t]}, {"col", local[s]}, {"entry", x.to_string()}});
    degrees.push_back({{"hom", i}, {"generators", gens}, {"differential", entries}});
  }
  json root = {{"degrees", degrees}};
  return root.dump(1);
}

}  // namespace krsl2
