#pragma once

// The Frobenius algebra A = Q[a,h][X]/(X^2 - hX - a) and its tensor powers.
// A tensor word over {1, X} is a bit mask: bit s set means slot s holds X.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "krsl2/poly.hpp"

namespace krsl2 {

using Word = std::uint32_t;

class AElem {
 public:
  explicit AElem(int arity = 0) : arity_(arity) {}
  static AElem basis(int arity, Word w, MultiPoly coef = MultiPoly(1));
  static AElem one() { return basis(1, 0); }
  static AElem x() { return basis(1, 1); }

  int arity() const { return arity_; }
  const std::map<Word, MultiPoly>& terms() const { return terms_; }
  MultiPoly coefficient(Word w) const;
  bool is_zero() const { return terms_.empty(); }

  void add(Word w, const MultiPoly& c);
  AElem& operator+=(const AElem& o);
  AElem& operator-=(const AElem& o);
  friend AElem operator+(AElem l, const AElem& r) { return l += r; }
  friend AElem operator-(AElem l, const AElem& r) { return l -= r; }
  AElem scaled(const MultiPoly& c) const;

  bool operator==(const AElem& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }
  bool operator!=(const AElem& o) const { return !(*this == o); }

  // Word degree (#X - #1) plus coefficient degree, when common to all terms.
  std::optional<int> homogeneous_degree() const;
  std::string to_string() const;

 private:
  int arity_;
  std::map<Word, MultiPoly> terms_;
};

int word_degree(Word w, int arity);

AElem tensor(const AElem& l, const AElem& r);

// Each map acts on designated slots and is extended by the identity.
AElem m(const AElem& x, int slot);       // merges slots slot, slot+1 into slot
AElem delta(const AElem& x, int slot);   // splits slot into slot, slot+1
AElem eps(const AElem& x, int slot);     // removes slot
AElem iota(const AElem& x, int slot);    // inserts 1 at slot
AElem dot(const AElem& x, int slot);     // multiplies slot by X
// New slot k carries old slot perm[k].
AElem permute(const AElem& x, const std::vector<int>& perm);

struct CobordismPiece {
  enum class Kind { Merge, Split, Cup, Cap, Dot, Permute };
  Kind kind;
  int slot = 0;
  std::vector<int> perm;
};

class CobordismMap {
 public:
  CobordismMap(int source_arity, int sign = 1) : source_arity_(source_arity), sign_(sign) {}

  CobordismMap& merge(int slot);
  CobordismMap& split(int slot);
  CobordismMap& cup(int slot);
  CobordismMap& cap(int slot);
  CobordismMap& dot(int slot);
  CobordismMap& permute(std::vector<int> perm);

  int source_arity() const { return source_arity_; }
  int target_arity() const;
  int sign() const { return sign_; }
  const std::vector<CobordismPiece>& pieces() const { return pieces_; }
  // -chi of the surface plus 2 per dot.
  int degree() const;
  int merge_count() const;
  int split_count() const;

  AElem apply(const AElem& x) const;
  std::string describe() const;

 private:
  int source_arity_;
  int sign_;
  std::vector<CobordismPiece> pieces_;
};

}  // namespace krsl2
