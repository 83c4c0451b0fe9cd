#pragma once

// The edge algebra of a closed web: generators X_i per mark with
//   X_i^2 = h X_i + a,  X_i = X_j on one edge,
//   X_1 + X_2 = h = X_3 + X_4 and X_1 X_2 = -a = X_3 X_4 at each singular pair.
// Each cycle is generated by the variable of its smallest mark; every other
// mark on the cycle equals it or h minus it, flipping at each vertex.

#include <map>
#include <random>
#include <vector>

#include "krsl2/frobenius.hpp"
#include "krsl2/linkweb.hpp"
#include "krsl2/poly.hpp"

namespace krsl2 {

// Coefficient of prod_k rep_k^(bit k) over Q[a, h], stored as an AElem whose
// slot k is cycle k.
using NormalForm = AElem;

class WebAlgebra {
 public:
  struct Label {
    int cycle = 0;
    bool flipped = false;  // X = h - rep
  };

  WebAlgebra(const Web& g, const MarkSet& marks);
  explicit WebAlgebra(const Web& g);

  int cycle_count() const { return static_cast<int>(reps_.size()); }
  VarId representative(int cycle) const { return reps_.at(cycle); }
  const std::map<VarId, Label>& labels() const { return labels_; }
  // Defining relations, as polynomials that vanish in the algebra.
  const std::vector<MultiPoly>& relations() const { return relations_; }

  // Throws std::invalid_argument on a mark variable foreign to the web.
  NormalForm normal_form(const MultiPoly& e) const;
  // Same rewriting system, applying one randomly chosen rule instance at a time.
  NormalForm normal_form_random(const MultiPoly& e, std::mt19937_64& rng) const;
  MultiPoly to_poly(const NormalForm& n) const;

  // e acting on v in A^(x cycles), representatives acting as dots.
  AElem act(const MultiPoly& e, const AElem& v) const;

  // Graded rank of the algebra itself, (1 + q^2)^cycles.
  LaurentPoly graded_rank() const;

 private:
  MultiPoly image(VarId v) const;
  NormalForm from_reduced(const MultiPoly& p) const;

  std::vector<VarId> reps_;
  std::map<VarId, Label> labels_;
  std::vector<MultiPoly> relations_;
};

}  // namespace krsl2
