#include <doctest.h>

#include "gen.hpp"
#include "krsl2/frobenius.hpp"

using namespace krsl2;

namespace {

const MultiPoly a = MultiPoly::a();
const MultiPoly h = MultiPoly::h();

AElem one1() { return AElem::one(); }
AElem X1() { return AElem::x(); }

AElem word(int arity, Word w, MultiPoly c = 1) { return AElem::basis(arity, w, c); }

}  // namespace

TEST_CASE("multiplication") {
  // slot 0 is the low bit
  CHECK(m(word(2, 0b10), 0) == X1());
  CHECK(m(word(2, 0b11), 0) == X1().scaled(h) + one1().scaled(a));
  CHECK(m(delta(one1(), 0), 0) == X1().scaled(2) - one1().scaled(h));
  CHECK_THROWS(m(one1(), 0));
}

TEST_CASE("comultiplication") {
  AElem d1 = word(2, 0b10) + word(2, 0b01) - word(2, 0).scaled(h);
  CHECK(delta(one1(), 0) == d1);
  CHECK(delta(X1(), 0) == word(2, 0b11) + word(2, 0).scaled(a));
  CHECK(*delta(X1(), 0).homogeneous_degree() - *X1().homogeneous_degree() == 1);
  CHECK_THROWS(delta(one1(), 1));
}

TEST_CASE("counit and unit") {
  CHECK(eps(X1(), 0) == AElem::basis(0, 0));
  CHECK(eps(one1(), 0).is_zero());
  CHECK(eps(m(delta(one1(), 0), 0), 0) == AElem::basis(0, 0, 2));
  CHECK(iota(AElem::basis(0, 0), 0) == one1());
  for (const AElem& v : {one1(), X1()}) CHECK(m(iota(v, 0), 0) == v);
  CHECK(*iota(AElem::basis(0, 0), 0).homogeneous_degree() == -1);
  CHECK(*eps(X1(), 0).homogeneous_degree() == *X1().homogeneous_degree() - 1);
}

TEST_CASE("dot") {
  CHECK(dot(one1(), 0) == X1());
  CHECK(dot(X1(), 0) == X1().scaled(h) + one1().scaled(a));
  CHECK((dot(dot(one1(), 0), 0) - dot(one1(), 0).scaled(h) - one1().scaled(a)).is_zero());
}

TEST_CASE("word degrees") {
  CHECK(word_degree(0, 1) == -1);
  CHECK(word_degree(1, 1) == 1);
  CHECK(word_degree(0b101, 3) == 1);
}

TEST_CASE("cobordism maps compose pieces and report -chi") {
  CobordismMap merge(2);
  merge.merge(0);
  CHECK(merge.degree() == 1);
  CHECK(merge.target_arity() == 1);
  CHECK(merge.apply(word(2, 0b11)) == m(word(2, 0b11), 0));

  CobordismMap pants(1);
  pants.split(0).merge(0);
  CHECK(pants.degree() == 2);
  CHECK(pants.apply(one1()) == X1().scaled(2) - one1().scaled(h));

  CobordismMap sphere(0);
  sphere.cup(0).dot(0).cap(0);
  CHECK(sphere.degree() == 0);
  CHECK(sphere.apply(AElem::basis(0, 0)) == AElem::basis(0, 0));

  CobordismMap neg(2, -1);
  neg.permute({1, 0});
  CHECK(neg.apply(word(2, 0b01)) == word(2, 0b10).scaled(-1));
}

TEST_CASE("property: frobenius algebra axioms") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 250; ++i) {
    AElem x3 = gen::aelem(rng, 3), x2 = gen::aelem(rng, 2), x1 = gen::aelem(rng, 1);
    CHECK(m(m(x3, 0), 0) == m(m(x3, 1), 0));
    CHECK(delta(delta(x1, 0), 0) == delta(delta(x1, 0), 1));
    CHECK(delta(m(x2, 0), 0) == m(delta(x2, 1), 0));
    CHECK(delta(m(x2, 0), 0) == m(delta(x2, 0), 1));
    CHECK(eps(delta(x1, 0), 0) == x1);
    CHECK(eps(delta(x1, 0), 1) == x1);
    CHECK(m(iota(x1, 0), 0) == x1);
    CHECK(m(iota(x1, 1), 0) == x1);
    CHECK(m(permute(x2, {1, 0}), 0) == m(x2, 0));
    CHECK(permute(delta(x1, 0), {1, 0}) == delta(x1, 0));
  }
}

TEST_CASE("property: structure maps shift degree") {
  std::mt19937_64 rng(42);
  int tested = 0;
  while (tested < 250) {
    int arity = gen::uniform(rng, 1, 3);
    Word w = static_cast<Word>(gen::uniform(rng, 0, (1 << arity) - 1));
    int cdeg = 2 * gen::uniform(rng, 0, 2);
    MultiPoly c = gen::homogeneous(rng, {kVarA, kVarH}, cdeg);
    if (c.is_zero()) continue;
    ++tested;
    AElem v = AElem::basis(arity, w, c);
    int d = *v.homogeneous_degree();
    REQUIRE(d == cdeg + word_degree(w, arity));
    int slot = gen::uniform(rng, 0, arity - 1);
    CHECK(*delta(v, slot).homogeneous_degree() == d + 1);
    CHECK(*iota(v, slot).homogeneous_degree() == d - 1);
    if (auto e = eps(v, slot); !e.is_zero()) CHECK(*e.homogeneous_degree() == d - 1);
    if (arity >= 2 && slot + 1 < arity) CHECK(*m(v, slot).homogeneous_degree() == d + 1);
    CHECK(*dot(v, slot).homogeneous_degree() == d + 2);
  }
}

TEST_CASE("property: cobordism degree equals -chi") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 250; ++i) {
    int arity = gen::uniform(rng, 1, 3);
    CobordismMap f(arity);
    int cur = arity, merges = 0, splits = 0, cups = 0, caps = 0, dots = 0;
    for (int k = 0; k < 5; ++k) {
      switch (gen::uniform(rng, 0, 4)) {
        case 0:
          if (cur >= 2) f.merge(gen::uniform(rng, 0, cur - 2)), --cur, ++merges;
          break;
        case 1:
          if (cur >= 1) f.split(gen::uniform(rng, 0, cur - 1)), ++cur, ++splits;
          break;
        case 2:
          f.cup(gen::uniform(rng, 0, cur)), ++cur, ++cups;
          break;
        case 3:
          if (cur >= 1) f.cap(gen::uniform(rng, 0, cur - 1)), --cur, ++caps;
          break;
        default:
          if (cur >= 1) f.dot(gen::uniform(rng, 0, cur - 1)), ++dots;
      }
    }
    CHECK(f.target_arity() == cur);
    // Pants have chi = -1, discs chi = 1.
    CHECK(f.degree() == merges + splits - cups - caps + 2 * dots);
    AElem v = gen::aelem(rng, arity);
    AElem out = f.apply(v);
    CHECK(out.arity() == cur);
  }
}
