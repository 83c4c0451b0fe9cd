#pragma once

// Graded Koszul matrix factorizations over Q[a, h, x...].
//
// A row (a, b){s} is R{s} --a--> R{t} --b--> R{s} with t = s + 3 - deg a, so
// that both maps have degree 3 (element 1 of R{r} sits in degree r).  The
// expanded module has basis e_E for subsets E of the rows (bit i = row i);
// even subsets form M0 and odd ones M1, each sorted by mask, and row i acts
// with sign (-1)^(number of later rows in E).

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "krsl2/linkweb.hpp"
#include "krsl2/poly.hpp"

namespace krsl2 {

struct KoszulRow {
  MultiPoly a;
  MultiPoly b;
  int shift = 0;

  int target_shift() const;
  bool operator==(const KoszulRow& o) const { return a == o.a && b == o.b && shift == o.shift; }
};

struct KoszulMF {
  std::vector<KoszulRow> rows;
  int q_shift = 0;   // global {r}
  int z2_shift = 0;  // global <s>, taken mod 2

  MultiPoly potential() const;
  std::string to_string() const;
  bool operator==(const KoszulMF& o) const {
    return rows == o.rows && q_shift == o.q_shift && (z2_shift - o.z2_shift) % 2 == 0;
  }
};

MultiPoly pi_bar(const MultiPoly& xi, const MultiPoly& xj);
MultiPoly u1_bar(const MultiPoly& y1, const MultiPoly& y2, const MultiPoly& y3, const MultiPoly& y4);
MultiPoly u2_bar(const MultiPoly& y1, const MultiPoly& y2, const MultiPoly& y3, const MultiPoly& y4);

// Arc oriented from mark i to mark j.
KoszulMF arc_factorization(int i, int j);
// Circle with the single mark i.
KoszulMF loop_factorization(int i);
// y1, y2 leave the singular pair, y3, y4 enter it.
KoszulMF singular_factorization(int y1, int y2, int y3, int y4);
KoszulMF tensor(const KoszulMF& f, const KoszulMF& g);

// Moves.  Row indices are 0-based; all throw std::invalid_argument on bad
// indices or violated preconditions.
KoszulMF row_op(const KoszulMF& f, int i, int j, const MultiPoly& c);
KoszulMF twist(const KoszulMF& f, int i, int j, const MultiPoly& k);
KoszulMF twist_b(const KoszulMF& f, int i, int j, const MultiPoly& k);
KoszulMF swap_row(const KoszulMF& f, int i);
KoszulMF permute_rows(const KoszulMF& f, const std::vector<int>& perm);
KoszulMF quotient(const KoszulMF& f, const std::map<VarId, MultiPoly>& bindings);
// Requires b_row = c (x - alpha) with c in Q*, alpha free of x, and x absent
// from every other external datum (the caller names x as internal).
KoszulMF exclude_variable(const KoszulMF& f, int row, VarId x);

// When p = c x + r with c a nonzero rational and r free of x, returns -r/c.
std::optional<MultiPoly> linear_solution(const MultiPoly& p, VarId x);

// Empty when every row is homogeneous with deg a + deg b = 6 (or a zero side).
std::string check_degrees(const KoszulMF& f);

class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}
  static PolyMatrix from_rows(const std::vector<std::vector<MultiPoly>>& rows);
  static PolyMatrix scalar(int n, const MultiPoly& c);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  MultiPoly& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const MultiPoly& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  PolyMatrix operator*(const PolyMatrix& o) const;
  bool operator==(const PolyMatrix& o) const;
  bool operator!=(const PolyMatrix& o) const { return !(*this == o); }
  PolyMatrix substituted(const std::map<VarId, MultiPoly>& bindings) const;
  std::string to_string() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<MultiPoly> data_;
};

struct TwoPeriodic {
  std::vector<unsigned> basis0, basis1;  // subsets of rows
  std::vector<int> deg0, deg1;           // q-degrees of the basis elements
  PolyMatrix d0;                         // M0 -> M1
  PolyMatrix d1;                         // M1 -> M0
};

TwoPeriodic expand(const KoszulMF& f);
// Empty when d1 d0 = d0 d1 = potential * id and all entries have degree 3.
std::string check_two_periodic(const KoszulMF& f);

struct MFMorphism {
  PolyMatrix m0;  // source M0 -> target M0
  PolyMatrix m1;  // source M1 -> target M1
  int degree = 0;
};

struct MorphismCheck {
  bool commutes = false;
  bool homogeneous = false;
  std::string detail;
  bool ok() const { return commutes && homogeneous; }
};

// Throws std::invalid_argument on a shape mismatch.
MorphismCheck check_morphism(const KoszulMF& source, const KoszulMF& target, const MFMorphism& phi);
MFMorphism identity_morphism(const KoszulMF& f);

// C(Gamma^0) = arc(4,1) (x) arc(3,2) and C(Gamma^1) = singular(1,2,3,4).
KoszulMF gamma0();
KoszulMF gamma1();
// Lambda_0 = (U0, U1): C(Gamma^0) -> C(Gamma^1); Lambda_1 = (V0, V1) back.
MFMorphism lambda0();
MFMorphism lambda1();

// Homology of a Koszul factorization whose internal variables can all be
// excluded; lands on rows (a_i, 0).
struct QuotientPresentation {
  std::vector<VarId> variables;
  std::vector<MultiPoly> ideal;
  int q_shift = 0;
  int hom_degree = 0;
  std::vector<std::pair<VarId, MultiPoly>> substitutions;  // in application order

  // Graded rank over Q[a, h] when the ideal generators have pairwise coprime
  // pure-power leading terms with rational coefficients; nullopt otherwise.
  std::optional<LaurentPoly> graded_rank() const;
  // Normal form of a polynomial in the original variables.
  MultiPoly reduce(const MultiPoly& p) const;
  std::string to_string() const;
};

// `internal` lists the variables that may be excluded; empty means every
// mark variable.  Throws std::runtime_error when exclusion gets stuck.
QuotientPresentation koszul_homology(const KoszulMF& f, const std::vector<VarId>& internal = {});

// Factorization of a closed web with the given marks per edge.
KoszulMF closed_web_factorization(const Web& g, const MarkSet& marks);
QuotientPresentation closed_web_homology(const Web& g, const MarkSet& marks);
QuotientPresentation closed_web_homology(const Web& g);

}  // namespace krsl2
