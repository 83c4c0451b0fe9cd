#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "krsl2/cube.hpp"
#include "krsl2/linkweb.hpp"
#include "krsl2/poly.hpp"

namespace krsl2 {

struct Specialization {
  std::string name;
  Rational a0;
  Rational h0;

  // h0^2 + 4 a0, the discriminant of X^2 - h0 X - a0.
  Rational discriminant() const { return h0 * h0 + 4 * a0; }
  bool distinct_roots() const { return discriminant() != 0; }
  bool graded() const { return a0 == 0 && h0 == 0; }
  std::string label() const;
};

std::vector<Specialization> preset_specializations();
// Accepts a preset name (khovanov, distinct1, distinct2, double) or "a,h"
// with rational entries such as "-1/4,1".  Throws std::invalid_argument.
Specialization parse_specialization(const std::string& text);

bool is_unit(const MultiPoly& p);
bool is_unit(const Rational& r);

// Cancels differential entries that are units until none remain, using the
// zig-zag update d'(x -> y) = d(x -> y) - d(x -> t) d(s -> t)^-1 d(s -> y).
template <class C>
Complex<C> gauss_reduce(const Complex<C>& c);

RationalComplex specialize(const GradedComplex& c, const Specialization& s);

struct HomologyTable {
  bool bigraded = false;
  std::map<std::pair<int, int>, long> dims;  // (i, j) -> dim, when bigraded
  std::map<int, long> totals;                // i -> dim

  long total() const;
  std::string to_tsv() const;
  std::string to_text() const;
  std::string to_json() const;
  bool operator==(const HomologyTable& o) const { return bigraded == o.bigraded && dims == o.dims && totals == o.totals; }
};

// Homology of a complex over Q by full cancellation.
HomologyTable homology_dims(const RationalComplex& c);

HomologyTable compute_homology(const LinkDiagram& d, const Specialization& s, int jobs = 1);

template <class C>
LaurentPoly euler_characteristic(const Complex<C>& c) {
  LaurentPoly e;
  for (const auto& g : c.gens) e += LaurentPoly::monomial(g.qdeg, g.hom % 2 ? -1 : 1);
  return e;
}

LaurentPoly euler_characteristic(const HomologyTable& t);

// Degree multiplier in the distinct-root formula, measured on the Hopf links:
// a class indexed by phi sits in degree kDegreeMultiplier * lk(phi^-1(u1), phi^-1(u2)).
inline constexpr int kDegreeMultiplier = -2;

struct DistinctRootReport {
  struct Assignment {
    std::vector<int> phi;  // component -> root (0 or 1)
    Rational linking;      // lk between the two preimages
    Rational expected_degree;
  };
  std::vector<Assignment> assignments;
  std::map<int, long> computed;  // hom degree -> dim
  std::map<Rational, long> expected;
  long total = 0;
  bool ok = false;
  std::string diagnostic;
};

DistinctRootReport distinct_root_report(const LinkDiagram& d, const Specialization& s, int multiplier = kDegreeMultiplier,
                                        int jobs = 1);

// Measured multiplier: degree / lk over classes in nonzero degree, or nullopt
// when the homology is concentrated in degree 0 or the ratio is not uniform.
std::optional<Rational> measure_degree_multiplier(const LinkDiagram& d, const Specialization& s, int jobs = 1);

}  // namespace krsl2
