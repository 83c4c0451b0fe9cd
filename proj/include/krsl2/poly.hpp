#pragma once

// Exact polynomial arithmetic over Q in the variables a, h, x0, x1, ...
//
// Variables are identified by a dense index: a = 0, h = 1 and the mark
// variable x_i = i + 2.  Exponent vectors are stored densely up to the
// highest variable that occurs, so two polynomials built in different
// "sessions" always agree on the meaning of each slot.
//
// Quantum grading: deg(a) = 4, deg(h) = 2, deg(x_i) = 2.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace krsl2 {

using Rational = mpq_class;

// num/den in canonical form.
Rational rat(long num, long den = 1);
std::string to_string(const Rational& r);

using VarId = std::size_t;

inline constexpr VarId kVarA = 0;
inline constexpr VarId kVarH = 1;

constexpr VarId x_var(int mark) { return static_cast<VarId>(mark) + 2; }
constexpr bool is_mark_var(VarId v) { return v >= 2; }
constexpr int mark_of(VarId v) { return static_cast<int>(v) - 2; }

std::string var_name(VarId v);
int var_weight(VarId v);

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exps);

  static Monomial variable(VarId v, std::uint32_t e = 1);

  std::uint32_t exponent(VarId v) const { return v < exps_.size() ? exps_[v] : 0; }
  std::span<const std::uint32_t> exponents() const { return exps_; }
  std::size_t width() const { return exps_.size(); }
  bool is_one() const { return exps_.empty(); }
  int degree() const { return degree_; }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  // o / *this; requires divides(o).
  Monomial quotient_of(const Monomial& o) const;
  Monomial without(VarId v) const;

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void normalize();

  std::vector<std::uint32_t> exps_;
  int degree_ = 0;
};

// Graded lexicographic order: quantum degree first, then lex with
// a < h < x0 < x1 < ... (the highest variable is most significant).
bool graded_lex_less(const Monomial& l, const Monomial& r);

struct GradedLexLess {
  bool operator()(const Monomial& l, const Monomial& r) const { return graded_lex_less(l, r); }
};

class MultiPoly {
 public:
  using Term = std::pair<Monomial, Rational>;

  MultiPoly() = default;
  MultiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  MultiPoly(int c);              // NOLINT(google-explicit-constructor)

  static MultiPoly variable(VarId v);
  static MultiPoly a() { return variable(kVarA); }
  static MultiPoly h() { return variable(kVarH); }
  static MultiPoly x(int mark) { return variable(x_var(mark)); }
  static MultiPoly term(Monomial m, Rational c);
  static MultiPoly from_terms(std::vector<Term> terms);

  // Terms in ascending graded-lex order, never with zero coefficient.
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Precondition: is_constant().
  Rational constant_value() const;
  Rational coefficient(const Monomial& m) const;
  const Term& leading_term() const { return terms_.back(); }

  bool contains(VarId v) const;
  std::uint32_t degree_in(VarId v) const;
  std::vector<VarId> variables() const;

  // Common quantum degree of all monomials; nullopt when the polynomial is
  // inhomogeneous or zero.
  std::optional<int> homogeneous_degree() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly l, const MultiPoly& r) { return l += r; }
  friend MultiPoly operator-(MultiPoly l, const MultiPoly& r) { return l -= r; }
  friend MultiPoly operator*(const MultiPoly& l, const MultiPoly& r);
  friend MultiPoly operator-(MultiPoly p);

  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void canonicalize();

  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

MultiPoly pow(const MultiPoly& p, unsigned n);

// Simultaneous substitution.  Bound expressions may not mention any bound
// variable other than through an identity binding x -> x.
MultiPoly substitute(const MultiPoly& p, const std::map<VarId, MultiPoly>& bindings);

// Exact quotient p / d.  Throws std::domain_error if d does not divide p.
MultiPoly divide_exact(const MultiPoly& p, const MultiPoly& d);

// Exact value at a rational point binding every variable of p.
Rational evaluate(const MultiPoly& p, const std::map<VarId, Rational>& point);

// Evaluate only a and h; mark variables are kept.
MultiPoly specialize_ah(const MultiPoly& p, const Rational& a0, const Rational& h0);

// The potential p(a,h,x) = x^3 - 3/2 h x^2 - 3 a x.
MultiPoly potential(const MultiPoly& x);

// Laurent polynomial in q with integer coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(int exp, long long coef = 1);
  static LaurentPoly q_plus_q_inv();

  const std::map<int, long long>& coefficients() const { return coeffs_; }
  long long coefficient(int exp) const;
  bool is_zero() const { return coeffs_.empty(); }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly l, const LaurentPoly& r) { return l += r; }
  friend LaurentPoly operator-(LaurentPoly l, const LaurentPoly& r) { return l -= r; }
  friend LaurentPoly operator*(const LaurentPoly& l, const LaurentPoly& r);
  LaurentPoly scaled(long long c) const;
  LaurentPoly shifted(int by) const;
  LaurentPoly pow(unsigned n) const;
  // q -> q^-1
  LaurentPoly mirrored() const;
  // Value at q = 1.
  long long at_one() const;

  bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // Descending powers, e.g. "q^6 + q^4 + q^2 + 1" or "q + q^-1".
  std::string to_string() const;

 private:
  void add(int exp, long long c);

  std::map<int, long long> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace krsl2
