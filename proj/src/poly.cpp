#include "krsl2/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace krsl2 {

Rational rat(long num, long den) {
  if (den == 0) throw std::domain_error("rat: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string var_name(VarId v) {
  if (v == kVarA) return "a";
  if (v == kVarH) return "h";
  return "x" + std::to_string(mark_of(v));
}

int var_weight(VarId v) { return v == kVarA ? 4 : 2; }

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) { normalize(); }

void Monomial::normalize() {
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
  degree_ = 0;
  for (std::size_t v = 0; v < exps_.size(); ++v) degree_ += var_weight(v) * static_cast<int>(exps_[v]);
}

Monomial Monomial::variable(VarId v, std::uint32_t e) {
  std::vector<std::uint32_t> exps(v + 1, 0);
  exps[v] = e;
  return Monomial(std::move(exps));
}

Monomial Monomial::operator*(const Monomial& o) const {
  const auto& big = exps_.size() >= o.exps_.size() ? exps_ : o.exps_;
  const auto& small = exps_.size() >= o.exps_.size() ? o.exps_ : exps_;
  Monomial r;
  r.exps_ = big;
  for (std::size_t i = 0; i < small.size(); ++i) r.exps_[i] += small[i];
  r.degree_ = degree_ + o.degree_;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (exps_.size() > o.exps_.size()) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > o.exps_[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
  std::vector<std::uint32_t> e = o.exps_;
  for (std::size_t i = 0; i < exps_.size(); ++i) e[i] -= exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::without(VarId v) const {
  if (v >= exps_.size()) return *this;
  std::vector<std::uint32_t> e = exps_;
  e[v] = 0;
  return Monomial(std::move(e));
}

std::string Monomial::to_string() const {
  if (exps_.empty()) return "1";
  std::string out;
  for (std::size_t v = 0; v < exps_.size(); ++v) {
    if (exps_[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += var_name(v);
    if (exps_[v] > 1) out += "^" + std::to_string(exps_[v]);
  }
  return out;
}

bool graded_lex_less(const Monomial& l, const Monomial& r) {
  if (l.degree() != r.degree()) return l.degree() < r.degree();
  std::size_t w = std::max(l.width(), r.width());
  for (std::size_t i = w; i-- > 0;) {
    auto el = l.exponent(i), er = r.exponent(i);
    if (el != er) return el < er;
  }
  return false;
}

// --------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(const Rational& c) {
  if (c != 0) terms_.emplace_back(Monomial(), c);
}

MultiPoly::MultiPoly(int c) : MultiPoly(Rational(c)) {}

MultiPoly MultiPoly::variable(VarId v) { return term(Monomial::variable(v), Rational(1)); }

MultiPoly MultiPoly::term(Monomial m, Rational c) {
  MultiPoly p;
  if (c != 0) p.terms_.emplace_back(std::move(m), std::move(c));
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  MultiPoly p;
  p.terms_ = std::move(terms);
  p.canonicalize();
  return p;
}

void MultiPoly::canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& l, const Term& r) { return graded_lex_less(l.first, r.first); });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && out.back().second == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().second == 0) out.pop_back();
  terms_ = std::move(out);
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

Rational MultiPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw std::logic_error("constant_value: polynomial is not constant");
  return terms_[0].second;
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& k) { return graded_lex_less(t.first, k); });
  if (it != terms_.end() && it->first == m) return it->second;
  return Rational(0);
}

bool MultiPoly::contains(VarId v) const {
  return std::any_of(terms_.begin(), terms_.end(), [v](const Term& t) { return t.first.exponent(v) > 0; });
}

std::uint32_t MultiPoly::degree_in(VarId v) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.exponent(v));
  return d;
}

std::vector<VarId> MultiPoly::variables() const {
  std::set<VarId> vs;
  for (const auto& t : terms_)
    for (std::size_t v = 0; v < t.first.width(); ++v)
      if (t.first.exponent(v) > 0) vs.insert(v);
  return {vs.begin(), vs.end()};
}

std::optional<int> MultiPoly::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = terms_.front().first.degree();
  if (terms_.back().first.degree() != d) return std::nullopt;
  return d;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && graded_lex_less(i->first, j->first))) {
      out.push_back(std::move(*i++));
    } else if (i == terms_.end() || graded_lex_less(j->first, i->first)) {
      out.push_back(*j++);
    } else {
      Rational c = i->second + j->second;
      if (c != 0) out.emplace_back(std::move(i->first), std::move(c));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

MultiPoly operator-(MultiPoly p) {
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly operator*(const MultiPoly& l, const MultiPoly& r) {
  if (l.is_zero() || r.is_zero()) return {};
  MultiPoly p;
  p.terms_.reserve(l.terms_.size() * r.terms_.size());
  for (const auto& a : l.terms_)
    for (const auto& b : r.terms_) p.terms_.emplace_back(a.first * b.first, a.second * b.second);
  p.canonicalize();
  return p;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].first != o.terms_[i].first || terms_[i].second != o.terms_[i].second) return false;
  return true;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Rational& c = it->second;
    bool neg = c < 0;
    Rational mag = neg ? Rational(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (it->first.is_one()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += it->first.to_string();
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

MultiPoly pow(const MultiPoly& p, unsigned n) {
  MultiPoly r(1), b = p;
  while (n) {
    if (n & 1u) r *= b;
    n >>= 1u;
    if (n) b *= b;
  }
  return r;
}

MultiPoly substitute(const MultiPoly& p, const std::map<VarId, MultiPoly>& bindings) {
  std::set<VarId> active;
  for (const auto& [v, e] : bindings)
    if (e != MultiPoly::variable(v)) active.insert(v);
  for (const auto& [v, e] : bindings) {
    if (!active.count(v)) continue;
    for (VarId w : e.variables())
      if (active.count(w))
        throw std::invalid_argument("substitute: cyclic binding " + var_name(v) + " -> " + e.to_string());
  }
  if (active.empty()) return p;

  // Cache powers of each bound expression.
  std::map<std::pair<VarId, std::uint32_t>, MultiPoly> powers;
  auto power_of = [&](VarId v, std::uint32_t e) -> const MultiPoly& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    return powers.emplace(key, pow(bindings.at(v), e)).first->second;
  };

  MultiPoly out;
  for (const auto& [m, c] : p.terms()) {
    std::vector<std::uint32_t> rest(m.exponents().begin(), m.exponents().end());
    MultiPoly factor(c);
    for (VarId v : active) {
      if (v < rest.size() && rest[v] > 0) {
        factor *= power_of(v, rest[v]);
        rest[v] = 0;
      }
    }
    out += factor * MultiPoly::term(Monomial(std::move(rest)), Rational(1));
  }
  return out;
}

MultiPoly divide_exact(const MultiPoly& p, const MultiPoly& d) {
  if (d.is_zero()) throw std::domain_error("divide_exact: division by zero");
  const auto& [lm, lc] = d.leading_term();
  MultiPoly rem = p, quo;
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.leading_term();
    if (!lm.divides(rm))
      throw std::domain_error("divide_exact: " + d.to_string() + " does not divide " + p.to_string());
    MultiPoly t = MultiPoly::term(lm.quotient_of(rm), rc / lc);
    quo += t;
    rem -= t * d;
  }
  return quo;
}

Rational evaluate(const MultiPoly& p, const std::map<VarId, Rational>& point) {
  Rational sum = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational t = c;
    for (std::size_t v = 0; v < m.width(); ++v) {
      auto e = m.exponent(v);
      if (e == 0) continue;
      auto it = point.find(v);
      if (it == point.end()) throw std::invalid_argument("evaluate: unbound variable " + var_name(v));
      Rational base = it->second;
      for (std::uint32_t k = 0; k < e; ++k) t *= base;
    }
    sum += t;
  }
  return sum;
}

MultiPoly specialize_ah(const MultiPoly& p, const Rational& a0, const Rational& h0) {
  return substitute(p, {{kVarA, MultiPoly(a0)}, {kVarH, MultiPoly(h0)}});
}

MultiPoly potential(const MultiPoly& x) {
  return pow(x, 3) - MultiPoly(rat(3, 2)) * MultiPoly::h() * pow(x, 2) - MultiPoly(3) * MultiPoly::a() * x;
}

// ------------------------------------------------------------- LaurentPoly

LaurentPoly LaurentPoly::monomial(int exp, long long coef) {
  LaurentPoly p;
  p.add(exp, coef);
  return p;
}

LaurentPoly LaurentPoly::q_plus_q_inv() { return monomial(1) + monomial(-1); }

void LaurentPoly::add(int exp, long long c) {
  if (c == 0) return;
  auto& slot = coeffs_[exp];
  slot += c;
  if (slot == 0) coeffs_.erase(exp);
}

long long LaurentPoly::coefficient(int exp) const {
  auto it = coeffs_.find(exp);
  return it == coeffs_.end() ? 0 : it->second;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeffs_) add(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeffs_) add(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& l, const LaurentPoly& r) {
  LaurentPoly p;
  for (const auto& [e1, c1] : l.coeffs_)
    for (const auto& [e2, c2] : r.coeffs_) p.add(e1 + e2, c1 * c2);
  return p;
}

LaurentPoly LaurentPoly::scaled(long long c) const {
  LaurentPoly p;
  for (const auto& [e, k] : coeffs_) p.add(e, k * c);
  return p;
}

LaurentPoly LaurentPoly::shifted(int by) const {
  LaurentPoly p;
  for (const auto& [e, k] : coeffs_) p.add(e + by, k);
  return p;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly r = monomial(0);
  for (unsigned i = 0; i < n; ++i) r = r * *this;
  return r;
}

LaurentPoly LaurentPoly::mirrored() const {
  LaurentPoly p;
  for (const auto& [e, k] : coeffs_) p.add(-e, k);
  return p;
}

long long LaurentPoly::at_one() const {
  long long s = 0;
  for (const auto& [e, k] : coeffs_) s += k;
  return s;
}

std::string LaurentPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    long long c = it->second;
    bool neg = c < 0;
    long long mag = neg ? -c : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    int e = it->first;
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += "q";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

}  // namespace krsl2
