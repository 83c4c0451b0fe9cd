#include "krsl2/mfact.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <stdexcept>

namespace krsl2 {

namespace {

int degree_of(const MultiPoly& p, const char* what) {
  auto d = p.homogeneous_degree();
  if (!d) throw std::invalid_argument(std::string(what) + " is not homogeneous: " + p.to_string());
  return *d;
}

void check_row(const KoszulMF& f, int i, const char* op) {
  if (i < 0 || i >= static_cast<int>(f.rows.size()))
    throw std::invalid_argument(std::string(op) + ": row index " + std::to_string(i) + " out of range");
}

void check_pair(const KoszulMF& f, int i, int j, const char* op) {
  check_row(f, i, op);
  check_row(f, j, op);
  if (i == j) throw std::invalid_argument(std::string(op) + ": rows must differ");
}

}  // namespace

int KoszulRow::target_shift() const {
  if (!a.is_zero()) return shift + 3 - degree_of(a, "row entry a");
  if (!b.is_zero()) return shift + degree_of(b, "row entry b") - 3;
  return shift;
}

MultiPoly KoszulMF::potential() const {
  MultiPoly w;
  for (const auto& r : rows) w += r.a * r.b;
  return w;
}

std::string KoszulMF::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows.size(); ++i)
    os << "(" << rows[i].a << ", " << rows[i].b << "){" << rows[i].shift << "}\n";
  os << "{" << q_shift << "}<" << ((z2_shift % 2) + 2) % 2 << ">";
  return os.str();
}

MultiPoly pi_bar(const MultiPoly& xi, const MultiPoly& xj) {
  return xi * xi + xi * xj + xj * xj - MultiPoly(rat(3, 2)) * MultiPoly::h() * (xi + xj) - 3 * MultiPoly::a();
}

MultiPoly u1_bar(const MultiPoly& y1, const MultiPoly& y2, const MultiPoly& y3, const MultiPoly& y4) {
  MultiPoly s = y1 + y2, t = y3 + y4;
  return s * s + s * t + t * t - 3 * y1 * y2 - MultiPoly(rat(3, 2)) * MultiPoly::h() * (s + t) - 3 * MultiPoly::a();
}

MultiPoly u2_bar(const MultiPoly&, const MultiPoly&, const MultiPoly& y3, const MultiPoly& y4) {
  return -3 * (y3 + y4) + 3 * MultiPoly::h();
}

KoszulMF arc_factorization(int i, int j) {
  if (i == j) throw std::invalid_argument("arc_factorization: marks must differ");
  MultiPoly xi = MultiPoly::x(i), xj = MultiPoly::x(j);
  return KoszulMF{{{pi_bar(xi, xj), xj - xi, 0}}, 0, 0};
}

KoszulMF loop_factorization(int i) {
  MultiPoly x = MultiPoly::x(i);
  return KoszulMF{{{3 * (x * x - MultiPoly::h() * x - MultiPoly::a()), MultiPoly(), 0}}, 0, 0};
}

namespace {

// Closed webs may glue an out mark to an in mark, so no distinctness here.
KoszulMF singular_rows(int m1, int m2, int m3, int m4) {
  MultiPoly y1 = MultiPoly::x(m1), y2 = MultiPoly::x(m2), y3 = MultiPoly::x(m3), y4 = MultiPoly::x(m4);
  KoszulMF f;
  f.rows.push_back({u1_bar(y1, y2, y3, y4), y1 + y2 - y3 - y4, 0});
  f.rows.push_back({u2_bar(y1, y2, y3, y4), y1 * y2 - y3 * y4, -1});
  return f;
}

}  // namespace

KoszulMF singular_factorization(int m1, int m2, int m3, int m4) {
  std::set<int> marks{m1, m2, m3, m4};
  if (marks.size() != 4) throw std::invalid_argument("singular_factorization: marks must be distinct");
  return singular_rows(m1, m2, m3, m4);
}

KoszulMF tensor(const KoszulMF& f, const KoszulMF& g) {
  KoszulMF r = f;
  r.rows.insert(r.rows.end(), g.rows.begin(), g.rows.end());
  r.q_shift += g.q_shift;
  r.z2_shift += g.z2_shift;
  return r;
}

KoszulMF row_op(const KoszulMF& f, int i, int j, const MultiPoly& c) {
  check_pair(f, i, j, "row_op");
  KoszulMF r = f;
  r.rows[i].a += c * f.rows[j].a;
  r.rows[j].b -= c * f.rows[i].b;
  return r;
}

KoszulMF twist(const KoszulMF& f, int i, int j, const MultiPoly& k) {
  check_pair(f, i, j, "twist");
  KoszulMF r = f;
  r.rows[i].a += k * f.rows[j].b;
  r.rows[j].a -= k * f.rows[i].b;
  return r;
}

KoszulMF twist_b(const KoszulMF& f, int i, int j, const MultiPoly& k) {
  check_pair(f, i, j, "twist_b");
  KoszulMF r = f;
  r.rows[i].b += k * f.rows[j].a;
  r.rows[j].b -= k * f.rows[i].a;
  return r;
}

KoszulMF swap_row(const KoszulMF& f, int i) {
  check_row(f, i, "swap_row");
  KoszulMF r = f;
  auto& row = r.rows[i];
  int t = row.target_shift();
  std::swap(row.a, row.b);
  row.shift = t;
  r.z2_shift += 1;
  return r;
}

KoszulMF permute_rows(const KoszulMF& f, const std::vector<int>& perm) {
  if (perm.size() != f.rows.size()) throw std::invalid_argument("permute_rows: wrong permutation length");
  std::vector<char> seen(perm.size(), 0);
  KoszulMF r = f;
  for (std::size_t k = 0; k < perm.size(); ++k) {
    check_row(f, perm[k], "permute_rows");
    if (seen[perm[k]]++) throw std::invalid_argument("permute_rows: not a permutation");
    r.rows[k] = f.rows[perm[k]];
  }
  return r;
}

KoszulMF quotient(const KoszulMF& f, const std::map<VarId, MultiPoly>& bindings) {
  KoszulMF r = f;
  for (auto& row : r.rows) {
    row.a = substitute(row.a, bindings);
    row.b = substitute(row.b, bindings);
  }
  return r;
}

std::optional<MultiPoly> linear_solution(const MultiPoly& p, VarId x) {
  Monomial mx = Monomial::variable(x);
  Rational c = 0;
  MultiPoly rest;
  for (const auto& [m, coef] : p.terms()) {
    if (m.exponent(x) == 0) {
      rest += MultiPoly::term(m, coef);
    } else if (m == mx) {
      c = coef;
    } else {
      return std::nullopt;
    }
  }
  if (c == 0) return std::nullopt;
  rest *= Rational(-1 / c);
  return rest;
}

KoszulMF exclude_variable(const KoszulMF& f, int row, VarId x) {
  check_row(f, row, "exclude_variable");
  auto alpha = linear_solution(f.rows[row].b, x);
  if (!alpha)
    throw std::invalid_argument("exclude_variable: b entry " + f.rows[row].b.to_string() + " is not linear in " +
                                var_name(x));
  KoszulMF r;
  r.q_shift = f.q_shift + f.rows[row].shift;
  r.z2_shift = f.z2_shift;
  std::map<VarId, MultiPoly> bind{{x, *alpha}};
  for (int k = 0; k < static_cast<int>(f.rows.size()); ++k) {
    if (k == row) continue;
    r.rows.push_back({substitute(f.rows[k].a, bind), substitute(f.rows[k].b, bind), f.rows[k].shift});
  }
  return r;
}

std::string check_degrees(const KoszulMF& f) {
  for (std::size_t i = 0; i < f.rows.size(); ++i) {
    const auto& r = f.rows[i];
    auto da = r.a.homogeneous_degree(), db = r.b.homogeneous_degree();
    if (!r.a.is_zero() && !da) return "row " + std::to_string(i) + ": a is inhomogeneous";
    if (!r.b.is_zero() && !db) return "row " + std::to_string(i) + ": b is inhomogeneous";
    if (da && db && *da + *db != 6) return "row " + std::to_string(i) + ": deg a + deg b != 6";
  }
  auto w = f.potential();
  if (!w.is_zero() && w.homogeneous_degree() != 6) return "potential is not homogeneous of degree 6";
  return {};
}

// ---------------------------------------------------------------- matrices

PolyMatrix PolyMatrix::from_rows(const std::vector<std::vector<MultiPoly>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  PolyMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("PolyMatrix: ragged rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

PolyMatrix PolyMatrix::scalar(int n, const MultiPoly& c) {
  PolyMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = c;
  return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("PolyMatrix: shape mismatch in product");
  PolyMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const auto& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j)
        if (!o.at(k, j).is_zero()) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

PolyMatrix PolyMatrix::substituted(const std::map<VarId, MultiPoly>& bindings) const {
  PolyMatrix r = *this;
  for (auto& x : r.data_) x = substitute(x, bindings);
  return r;
}

std::string PolyMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j);
  }
  os << "]";
  return os.str();
}

TwoPeriodic expand(const KoszulMF& f) {
  const int n = static_cast<int>(f.rows.size());
  if (n > 16) throw std::invalid_argument("expand: too many rows");
  std::vector<int> s(n), t(n);
  for (int i = 0; i < n; ++i) {
    s[i] = f.rows[i].shift;
    t[i] = f.rows[i].target_shift();
  }
  const unsigned total = 1u << n;
  std::vector<int> index(total);
  TwoPeriodic tp;
  std::vector<unsigned> even, odd;
  std::vector<int> deven, dodd;
  for (unsigned e = 0; e < total; ++e) {
    int g = f.q_shift;
    for (int i = 0; i < n; ++i) g += ((e >> i) & 1u) ? t[i] : s[i];
    if (std::popcount(e) % 2 == 0) {
      index[e] = static_cast<int>(even.size());
      even.push_back(e);
      deven.push_back(g);
    } else {
      index[e] = static_cast<int>(odd.size());
      odd.push_back(e);
      dodd.push_back(g);
    }
  }
  PolyMatrix de(static_cast<int>(odd.size()), static_cast<int>(even.size()));
  PolyMatrix dd(static_cast<int>(even.size()), static_cast<int>(odd.size()));
  auto fill = [&](PolyMatrix& m, const std::vector<unsigned>& src) {
    for (std::size_t c = 0; c < src.size(); ++c) {
      unsigned e = src[c];
      for (int i = 0; i < n; ++i) {
        int later = std::popcount(e >> (i + 1));
        MultiPoly coef = ((e >> i) & 1u) ? f.rows[i].b : f.rows[i].a;
        if (coef.is_zero()) continue;
        if (later % 2) coef = -coef;
        m.at(index[e ^ (1u << i)], static_cast<int>(c)) += coef;
      }
    }
  };
  fill(de, even);
  fill(dd, odd);
  if (((f.z2_shift % 2) + 2) % 2 == 0) {
    tp.basis0 = even;
    tp.basis1 = odd;
    tp.deg0 = deven;
    tp.deg1 = dodd;
    tp.d0 = de;
    tp.d1 = dd;
  } else {
    tp.basis0 = odd;
    tp.basis1 = even;
    tp.deg0 = dodd;
    tp.deg1 = deven;
    tp.d0 = dd;
    tp.d1 = de;
  }
  return tp;
}

namespace {

// Entry (r, c) of a map of degree k from a module with degrees src to one
// with degrees tgt must be homogeneous of degree k + src[c] - tgt[r].
std::string check_entry_degrees(const PolyMatrix& m, const std::vector<int>& src, const std::vector<int>& tgt, int k,
                                const std::string& name) {
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) {
      const auto& x = m.at(r, c);
      if (x.is_zero()) continue;
      int want = k + src[c] - tgt[r];
      auto d = x.homogeneous_degree();
      if (!d || *d != want)
        return name + " entry (" + std::to_string(r) + "," + std::to_string(c) + ") = " + x.to_string() +
               " is not of degree " + std::to_string(want);
    }
  return {};
}

}  // namespace

std::string check_two_periodic(const KoszulMF& f) {
  TwoPeriodic tp = expand(f);
  MultiPoly w = f.potential();
  if (tp.d1 * tp.d0 != PolyMatrix::scalar(tp.d0.cols(), w)) return "d1 d0 != potential * id";
  if (tp.d0 * tp.d1 != PolyMatrix::scalar(tp.d1.cols(), w)) return "d0 d1 != potential * id";
  if (auto e = check_entry_degrees(tp.d0, tp.deg0, tp.deg1, 3, "d0"); !e.empty()) return e;
  if (auto e = check_entry_degrees(tp.d1, tp.deg1, tp.deg0, 3, "d1"); !e.empty()) return e;
  return {};
}

MorphismCheck check_morphism(const KoszulMF& source, const KoszulMF& target, const MFMorphism& phi) {
  TwoPeriodic s = expand(source), t = expand(target);
  if (phi.m0.rows() != static_cast<int>(t.basis0.size()) || phi.m0.cols() != static_cast<int>(s.basis0.size()) ||
      phi.m1.rows() != static_cast<int>(t.basis1.size()) || phi.m1.cols() != static_cast<int>(s.basis1.size()))
    throw std::invalid_argument("check_morphism: shape mismatch");
  MorphismCheck res;
  bool c0 = t.d0 * phi.m0 == phi.m1 * s.d0;
  bool c1 = t.d1 * phi.m1 == phi.m0 * s.d1;
  res.commutes = c0 && c1;
  if (!c0) res.detail = "square with d0 does not commute";
  else if (!c1) res.detail = "square with d1 does not commute";
  std::string e0 = check_entry_degrees(phi.m0, s.deg0, t.deg0, phi.degree, "M0");
  std::string e1 = e0.empty() ? check_entry_degrees(phi.m1, s.deg1, t.deg1, phi.degree, "M1") : e0;
  res.homogeneous = e1.empty();
  if (res.detail.empty()) res.detail = e1;
  return res;
}

MFMorphism identity_morphism(const KoszulMF& f) {
  TwoPeriodic tp = expand(f);
  return {PolyMatrix::scalar(static_cast<int>(tp.basis0.size()), 1),
          PolyMatrix::scalar(static_cast<int>(tp.basis1.size()), 1), 0};
}

KoszulMF gamma0() { return tensor(arc_factorization(4, 1), arc_factorization(3, 2)); }
KoszulMF gamma1() { return singular_factorization(1, 2, 3, 4); }

MFMorphism lambda0() {
  MultiPoly x1 = MultiPoly::x(1), x2 = MultiPoly::x(2), x3 = MultiPoly::x(3), x4 = MultiPoly::x(4);
  MultiPoly h32 = MultiPoly(rat(3, 2)) * MultiPoly::h();
  MFMorphism m;
  m.m0 = PolyMatrix::from_rows({{x4 - x2, 0}, {x1 - x2 + x3 + 2 * x4 - h32, 1}});
  m.m1 = PolyMatrix::from_rows({{x4, -x2}, {-1, 1}});
  m.degree = 1;
  return m;
}

MFMorphism lambda1() {
  MultiPoly x1 = MultiPoly::x(1), x2 = MultiPoly::x(2), x3 = MultiPoly::x(3), x4 = MultiPoly::x(4);
  MultiPoly h32 = MultiPoly(rat(3, 2)) * MultiPoly::h();
  MFMorphism m;
  m.m0 = PolyMatrix::from_rows({{1, 0}, {-x1 + x2 - x3 - 2 * x4 + h32, x4 - x2}});
  m.m1 = PolyMatrix::from_rows({{1, x2}, {1, x4}});
  m.degree = 1;
  return m;
}

// ---------------------------------------------------------------- homology

namespace {

// x-part of a monomial (a and h dropped).
Monomial x_part(const Monomial& m) { return m.without(kVarA).without(kVarH); }

// Pure lex on mark variables, highest index most significant.
bool x_lex_less(const Monomial& l, const Monomial& r) {
  std::size_t w = std::max(l.width(), r.width());
  for (std::size_t v = w; v-- > 2;) {
    if (l.exponent(v) != r.exponent(v)) return l.exponent(v) < r.exponent(v);
  }
  return false;
}

struct Lead {
  VarId var;
  std::uint32_t power;
  MultiPoly monic;
};

// Leading x-monomial must be x_v^d with a rational coefficient.
std::optional<Lead> pure_power_lead(const MultiPoly& g) {
  if (g.is_zero()) return std::nullopt;
  Monomial best = x_part(g.terms().front().first);
  for (const auto& [m, c] : g.terms())
    if (x_lex_less(best, x_part(m))) best = x_part(m);
  int hits = 0;
  Rational coef;
  for (const auto& [m, c] : g.terms())
    if (x_part(m) == best) {
      ++hits;
      if (m != best) return std::nullopt;
      coef = c;
    }
  if (hits != 1) return std::nullopt;
  Lead l;
  if (best.is_one()) {
    l.var = 0;
    l.power = 0;
  } else {
    int vars = 0;
    for (std::size_t v = 2; v < best.width(); ++v)
      if (best.exponent(v)) {
        ++vars;
        l.var = v;
        l.power = best.exponent(v);
      }
    if (vars != 1) return std::nullopt;
  }
  l.monic = g;
  l.monic *= Rational(1 / coef);
  return l;
}

// Fully reduces p by the generator with leading term x_v^d (monic).
MultiPoly reduce_by(MultiPoly p, const Lead& l) {
  for (;;) {
    bool changed = false;
    for (const auto& [m, c] : p.terms()) {
      if (m.exponent(l.var) < l.power) continue;
      Monomial rest = Monomial::variable(l.var, l.power).quotient_of(m);
      p -= MultiPoly::term(rest, c) * l.monic;
      changed = true;
      break;
    }
    if (!changed) return p;
  }
}

// Interreduces generators that have pure-power leads until no lead divides a
// term of another generator.  A generator may reduce to zero, which signals
// that the rows were not a regular sequence.
void autoreduce(std::vector<MultiPoly>& ideal) {
  for (int round = 0; round < 1000; ++round) {
    bool changed = false;
    for (std::size_t j = 0; j < ideal.size() && !changed; ++j) {
      auto l = pure_power_lead(ideal[j]);
      if (!l || l->power == 0) continue;
      for (std::size_t i = 0; i < ideal.size(); ++i) {
        if (i == j || ideal[i].is_zero()) continue;
        MultiPoly r = reduce_by(ideal[i], *l);
        if (r != ideal[i]) {
          ideal[i] = r;
          changed = true;
          break;
        }
      }
    }
    if (!changed) return;
  }
  throw std::logic_error("autoreduce: no fixed point");
}

}  // namespace

std::optional<LaurentPoly> QuotientPresentation::graded_rank() const {
  std::map<VarId, std::uint32_t> powers;
  for (const auto& g : ideal) {
    auto l = pure_power_lead(g);
    if (!l) return std::nullopt;
    if (l->power == 0) return LaurentPoly();
    if (!powers.emplace(l->var, l->power).second) return std::nullopt;
  }
  for (VarId v : variables)
    if (!powers.count(v)) return std::nullopt;
  if (powers.size() != variables.size()) return std::nullopt;
  LaurentPoly r = LaurentPoly::monomial(q_shift);
  for (const auto& [v, d] : powers) {
    LaurentPoly f;
    for (std::uint32_t e = 0; e < d; ++e) f += LaurentPoly::monomial(2 * static_cast<int>(e));
    r = r * f;
  }
  return r;
}

MultiPoly QuotientPresentation::reduce(const MultiPoly& p) const {
  MultiPoly r = p;
  for (const auto& [v, alpha] : substitutions) r = substitute(r, {{v, alpha}});
  std::vector<Lead> leads;
  for (const auto& g : ideal) {
    if (g.is_zero()) continue;
    auto l = pure_power_lead(g);
    if (!l) throw std::logic_error("reduce: ideal generator without a pure-power leading term");
    if (l->power == 0) return MultiPoly();
    leads.push_back(*l);
  }
  for (;;) {
    MultiPoly before = r;
    for (const auto& l : leads) r = reduce_by(r, l);
    if (r == before) return r;
  }
}

std::string QuotientPresentation::to_string() const {
  std::ostringstream os;
  os << "H^" << hom_degree << " = Q[a,h";
  for (VarId v : variables) os << "," << var_name(v);
  os << "]/(";
  for (std::size_t i = 0; i < ideal.size(); ++i) os << (i ? ", " : "") << ideal[i];
  os << "){" << q_shift << "}";
  return os.str();
}

QuotientPresentation koszul_homology(const KoszulMF& f, const std::vector<VarId>& internal_in) {
  std::set<VarId> internal(internal_in.begin(), internal_in.end());
  std::set<VarId> all;
  for (const auto& r : f.rows)
    for (const auto* p : {&r.a, &r.b})
      for (VarId v : p->variables())
        if (is_mark_var(v)) all.insert(v);
  if (internal_in.empty()) internal = all;

  QuotientPresentation out;
  KoszulMF g = f;
  auto try_exclude = [&](bool via_a) {
    for (int j = 0; j < static_cast<int>(g.rows.size()); ++j) {
      const MultiPoly& e = via_a ? g.rows[j].a : g.rows[j].b;
      for (auto it = internal.rbegin(); it != internal.rend(); ++it) {
        auto alpha = linear_solution(e, *it);
        if (!alpha) continue;
        if (via_a) g = swap_row(g, j);
        g = exclude_variable(g, j, *it);
        out.substitutions.emplace_back(*it, *alpha);
        internal.erase(*it);
        return true;
      }
    }
    return false;
  };
  while (try_exclude(false) || try_exclude(true)) {
  }

  std::set<VarId> excluded;
  for (const auto& [v, e] : out.substitutions) excluded.insert(v);
  for (VarId v : all)
    if (!excluded.count(v)) out.variables.push_back(v);

  for (int j = 0; j < static_cast<int>(g.rows.size()); ++j) {
    const auto& r = g.rows[j];
    if ((!r.a.is_zero() && r.a.is_constant()) || (!r.b.is_zero() && r.b.is_constant())) {
      // A unit entry makes the whole factorization contractible.
      out.ideal = {MultiPoly(1)};
      out.q_shift = g.q_shift;
      out.hom_degree = 0;
      return out;
    }
  }
  for (int j = 0; j < static_cast<int>(g.rows.size()); ++j)
    if (g.rows[j].a.is_zero() && !g.rows[j].b.is_zero()) g = swap_row(g, j);
  int shift = g.q_shift;
  for (const auto& r : g.rows) {
    if (!r.b.is_zero() || r.a.is_zero())
      throw std::runtime_error("koszul_homology: exclusion cannot complete at row (" + r.a.to_string() + ", " +
                               r.b.to_string() + ")");
    out.ideal.push_back(r.a);
    shift += r.target_shift();
  }
  autoreduce(out.ideal);
  out.q_shift = shift;
  out.hom_degree = static_cast<int>(((g.rows.size() + g.z2_shift) % 2 + 2) % 2);
  return out;
}

KoszulMF closed_web_factorization(const Web& g, const MarkSet& marks) {
  KoszulMF f;
  auto marks_of = [&](int e) -> const std::vector<int>& {
    auto it = marks.find(e);
    if (it == marks.end() || it->second.empty())
      throw std::invalid_argument("closed_web_factorization: edge " + std::to_string(e) + " has no marks");
    return it->second;
  };
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    const auto& m = marks_of(e);
    for (std::size_t k = 0; k + 1 < m.size(); ++k) f = tensor(f, arc_factorization(m[k], m[k + 1]));
    if (!g.edges[e].tail && !g.edges[e].head) {
      if (m.size() == 1) {
        f = tensor(f, loop_factorization(m[0]));
      } else {
        f = tensor(f, arc_factorization(m.back(), m.front()));
      }
    } else if (!g.edges[e].tail || !g.edges[e].head) {
      throw std::invalid_argument("closed_web_factorization: web is not closed");
    }
  }
  for (const auto& [sink, source] : g.singular_pairs) {
    std::vector<int> outs, ins;
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
      if (g.edges[e].tail == source) outs.push_back(marks_of(e).front());
      if (g.edges[e].head == sink) ins.push_back(marks_of(e).back());
    }
    if (outs.size() != 2 || ins.size() != 2)
      throw std::invalid_argument("closed_web_factorization: singular pair without two in and two out edges");
    f = tensor(f, singular_rows(outs[0], outs[1], ins[0], ins[1]));
  }
  return f;
}

QuotientPresentation closed_web_homology(const Web& g, const MarkSet& marks) {
  return koszul_homology(closed_web_factorization(g, marks));
}

QuotientPresentation closed_web_homology(const Web& g) { return closed_web_homology(g, mark_set(g)); }

}  // namespace krsl2
