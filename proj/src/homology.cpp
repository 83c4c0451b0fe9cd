#include "krsl2/homology.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace krsl2 {

std::string Specialization::label() const {
  return name.empty() ? a0.get_str() + "," + h0.get_str() : name;
}

std::vector<Specialization> preset_specializations() {
  return {
      {"khovanov", Rational(0), Rational(0)},
      {"distinct1", Rational(1), Rational(0)},
      {"distinct2", Rational(0), Rational(1)},
      {"double", rat(-1, 4), Rational(1)},
  };
}

namespace {

Rational parse_rational(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) throw std::invalid_argument("empty rational");
  std::size_t slash = t.find('/');
  auto is_int = [](const std::string& s) {
    std::size_t k = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (k >= s.size()) return false;
    return std::all_of(s.begin() + k, s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
  };
  std::string num = slash == std::string::npos ? t : t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den.find('-') != std::string::npos)
    throw std::invalid_argument("not a rational: " + text);
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + text);
  Rational r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace

Specialization parse_specialization(const std::string& text) {
  for (const auto& s : preset_specializations())
    if (s.name == text) return s;
  std::size_t comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("unknown specialization: " + text);
  Specialization s;
  s.a0 = parse_rational(text.substr(0, comma));
  s.h0 = parse_rational(text.substr(comma + 1));
  for (const auto& p : preset_specializations())
    if (p.a0 == s.a0 && p.h0 == s.h0) return p;
  return s;
}

bool is_unit(const MultiPoly& p) { return !p.is_zero() && p.is_constant(); }
bool is_unit(const Rational& r) { return r != 0; }

namespace {

bool is_zero_coef(const MultiPoly& p) { return p.is_zero(); }
bool is_zero_coef(const Rational& r) { return r == 0; }

MultiPoly inverse(const MultiPoly& p) { return MultiPoly(Rational(1 / p.constant_value())); }
Rational inverse(const Rational& r) { return Rational(1 / r); }

}  // namespace

template <class C>
Complex<C> gauss_reduce(const Complex<C>& input) {
  const std::size_t n = input.size();
  std::vector<std::map<int, C>> out = input.out;
  std::vector<std::set<int>> in(n);
  for (std::size_t s = 0; s < n; ++s)
    for (const auto& [t, x] : out[s]) in[t].insert(static_cast<int>(s));
  std::vector<char> alive(n, 1);

  auto cancel = [&](int s, int t) {
    C cinv = inverse(out[s].at(t));
    std::vector<int> xs(in[t].begin(), in[t].end());
    for (int x : xs) {
      if (x == s) continue;
      C factor = out[x].at(t) * cinv;
      for (const auto& [y, dsy] : out[s]) {
        if (y == t) continue;
        C delta = factor * dsy;
        auto it = out[x].find(y);
        if (it == out[x].end()) {
          out[x].emplace(y, -delta);
          in[y].insert(x);
        } else {
          it->second -= delta;
          if (is_zero_coef(it->second)) {
            out[x].erase(it);
            in[y].erase(x);
          }
        }
      }
    }
    for (const auto& [y, v] : out[s]) in[y].erase(s);
    for (int x : in[s]) out[x].erase(s);
    for (const auto& [y, v] : out[t]) in[y].erase(t);
    for (int x : in[t]) out[x].erase(t);
    out[s].clear();
    out[t].clear();
    in[s].clear();
    in[t].clear();
    alive[s] = alive[t] = 0;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < n; ++s) {
      if (!alive[s]) continue;
      int best = -1;
      std::size_t best_cost = 0;
      for (const auto& [t, x] : out[s]) {
        if (!is_unit(x)) continue;
        std::size_t cost = in[t].size();
        if (best < 0 || cost < best_cost) {
          best = t;
          best_cost = cost;
        }
      }
      if (best >= 0) {
        cancel(static_cast<int>(s), best);
        changed = true;
      }
    }
  }

  Complex<C> result;
  result.graded = input.graded;
  std::vector<int> index(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (!alive[s]) continue;
    index[s] = static_cast<int>(result.gens.size());
    result.gens.push_back(input.gens[s]);
  }
  result.out.resize(result.gens.size());
  for (std::size_t s = 0; s < n; ++s) {
    if (!alive[s]) continue;
    for (auto& [t, x] : out[s]) result.out[index[s]].emplace(index[t], std::move(x));
  }
  return result;
}

template Complex<MultiPoly> gauss_reduce<MultiPoly>(const Complex<MultiPoly>&);
template Complex<Rational> gauss_reduce<Rational>(const Complex<Rational>&);

RationalComplex specialize(const GradedComplex& c, const Specialization& s) {
  RationalComplex r;
  r.graded = c.graded && s.graded();
  r.gens.reserve(c.size());
  for (const auto& g : c.gens) r.gens.push_back({g.hom, g.qdeg, g.vertex, g.word});
  r.out.resize(c.size());
  std::map<VarId, Rational> point{{kVarA, s.a0}, {kVarH, s.h0}};
  for (std::size_t k = 0; k < c.size(); ++k)
    for (const auto& [t, x] : c.out[k]) {
      Rational v = evaluate(x, point);
      if (v != 0) r.out[k].emplace(t, v);
    }
  return r;
}

long HomologyTable::total() const {
  long n = 0;
  for (const auto& [i, d] : totals) n += d;
  return n;
}

std::string HomologyTable::to_tsv() const {
  std::ostringstream os;
  if (bigraded) {
    os << "i\tj\tdim\n";
    for (const auto& [ij, d] : dims) os << ij.first << "\t" << ij.second << "\t" << d << "\n";
  } else {
    os << "i\tdim\n";
    for (const auto& [i, d] : totals) os << i << "\t" << d << "\n";
  }
  return os.str();
}

std::string HomologyTable::to_text() const {
  std::ostringstream os;
  if (bigraded) {
    for (const auto& [i, d] : totals) {
      os << "H^" << i << ":";
      for (const auto& [ij, k] : dims)
        if (ij.first == i) os << " " << k << "*q^" << ij.second;
      os << "  (dim " << d << ")\n";
    }
  } else {
    for (const auto& [i, d] : totals) os << "H^" << i << ": dim " << d << "\n";
  }
  os << "total: " << total() << "\n";
  return os.str();
}

std::string HomologyTable::to_json() const {
  using nlohmann::json;
  json rows = json::array();
  if (bigraded) {
    for (const auto& [ij, d] : dims) rows.push_back({{"i", ij.first}, {"j", ij.second}, {"dim", d}});
  } else {
    for (const auto& [i, d] : totals) rows.push_back({{"i", i}, {"dim", d}});
  }
  return json{{"bigraded", bigraded}, {"rows", rows}, {"total", total()}}.dump();
}

HomologyTable homology_dims(const RationalComplex& c) {
  RationalComplex r = gauss_reduce(c);
  if (r.entry_count() != 0) throw std::logic_error("homology_dims: reduction left nonzero entries");
  HomologyTable t;
  t.bigraded = c.graded;
  for (const auto& g : r.gens) {
    ++t.totals[g.hom];
    if (t.bigraded) ++t.dims[{g.hom, g.qdeg}];
  }
  return t;
}

HomologyTable compute_homology(const LinkDiagram& d, const Specialization& s, int jobs) {
  Cube cube = build_cube(d, jobs);
  return homology_dims(assemble_specialized(cube, s.a0, s.h0, jobs));
}

LaurentPoly euler_characteristic(const HomologyTable& t) {
  if (!t.bigraded) throw std::logic_error("euler_characteristic: table is not bigraded");
  LaurentPoly e;
  for (const auto& [ij, d] : t.dims) e += LaurentPoly::monomial(ij.second, ij.first % 2 ? -d : d);
  return e;
}

DistinctRootReport distinct_root_report(const LinkDiagram& d, const Specialization& s, int multiplier, int jobs) {
  if (!s.distinct_roots()) throw std::invalid_argument("distinct_root_report: specialization has a double root");
  DistinctRootReport rep;
  auto lk = linking_matrix(d);
  const int n = d.component_count();
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    DistinctRootReport::Assignment a;
    a.linking = 0;
    for (int i = 0; i < n; ++i) a.phi.push_back((m >> i) & 1u);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (a.phi[i] == 0 && a.phi[j] == 1) a.linking += lk[i][j];
    a.expected_degree = multiplier * a.linking;
    ++rep.expected[a.expected_degree];
    rep.assignments.push_back(std::move(a));
  }
  HomologyTable t = compute_homology(d, s, jobs);
  rep.computed = t.totals;
  rep.total = t.total();
  std::map<Rational, long> computed;
  for (const auto& [i, k] : t.totals) computed[Rational(i)] += k;
  rep.ok = computed == rep.expected && rep.total == (1L << n);
  if (!rep.ok) {
    std::ostringstream os;
    os << "expected degrees {";
    bool first = true;
    for (const auto& [deg, k] : rep.expected) {
      os << (first ? "" : ", ") << deg.get_str() << ":" << k;
      first = false;
    }
    os << "} computed {";
    first = true;
    for (const auto& [deg, k] : rep.computed) {
      os << (first ? "" : ", ") << deg << ":" << k;
      first = false;
    }
    os << "}";
    rep.diagnostic = os.str();
  }
  return rep;
}

std::optional<Rational> measure_degree_multiplier(const LinkDiagram& d, const Specialization& s, int jobs) {
  auto rep = distinct_root_report(d, s, 0, jobs);
  // Pair each nonzero computed degree with the nonzero linking values.
  std::set<Rational> lks;
  for (const auto& a : rep.assignments)
    if (a.linking != 0) lks.insert(a.linking);
  std::set<int> degrees;
  for (const auto& [i, k] : rep.computed)
    if (i != 0) degrees.insert(i);
  if (lks.size() != 1 || degrees.size() != 1) return std::nullopt;
  return Rational(Rational(*degrees.begin()) / *lks.begin());
}

}  // namespace krsl2
