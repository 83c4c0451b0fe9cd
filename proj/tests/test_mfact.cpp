#include <doctest.h>

#include "gen.hpp"
#include "krsl2/mfact.hpp"
#include "krsl2/proofs.hpp"
#include "krsl2/skein.hpp"
#include "krsl2/verify.hpp"

using namespace krsl2;

namespace {

const MultiPoly a = MultiPoly::a();
const MultiPoly h = MultiPoly::h();
MultiPoly x(int i) { return MultiPoly::x(i); }
const Rational half3 = rat(3, 2);

// Written out by hand rather than through divide_exact.
MultiPoly pibar(int i, int j) {
  return x(i) * x(i) + x(i) * x(j) + x(j) * x(j) - MultiPoly(half3) * h * (x(i) + x(j)) - 3 * a;
}

MultiPoly p(const MultiPoly& y) { return y * y * y - MultiPoly(half3) * h * y * y - 3 * a * y; }

const auto O = Smoothing::Oriented;
const auto S = Smoothing::Singular;

}  // namespace

TEST_CASE("arc factorization") {
  KoszulMF f = arc_factorization(1, 2);
  REQUIRE(f.rows.size() == 1);
  CHECK(f.rows[0].a == pibar(1, 2));
  CHECK(f.rows[0].b == x(2) - x(1));
  CHECK(f.potential() == p(x(2)) - p(x(1)));
  KoszulMF closed = quotient(f, {{x_var(2), x(1)}});
  CHECK(closed.rows[0].a == 3 * (x(1) * x(1) - h * x(1) - a));
  CHECK(closed.rows[0].b.is_zero());
  CHECK(check_degrees(f).empty());
  CHECK(check_two_periodic(f).empty());
  CHECK_THROWS_AS(arc_factorization(3, 3), std::invalid_argument);
}

TEST_CASE("singular factorization") {
  KoszulMF f = singular_factorization(1, 2, 3, 4);
  REQUIRE(f.rows.size() == 2);
  CHECK(f.rows[1].a == -3 * (x(3) + x(4)) + 3 * h);
  CHECK(f.potential() == p(x(1)) + p(x(2)) - p(x(3)) - p(x(4)));
  // u1 from the divided differences of p(x1) + p(x2) - p(x3) - p(x4).
  MultiPoly u1 = divide_exact(p(x(1)) + p(x(2)) - p(x(3)) - p(x(4)) - f.rows[1].a * (x(1) * x(2) - x(3) * x(4)),
                              x(1) + x(2) - x(3) - x(4));
  CHECK(f.rows[0].a == u1);

  TwoPeriodic t = expand(f);
  PolyMatrix q0 = PolyMatrix::from_rows({{u1, x(1) * x(2) - x(3) * x(4)},
                                         {-3 * (x(3) + x(4)) + 3 * h, x(3) + x(4) - x(1) - x(2)}});
  CHECK(t.d0 == q0);
  CHECK(check_two_periodic(f).empty());
  CHECK(gamma0().potential() == gamma1().potential());
  CHECK_THROWS_AS(singular_factorization(1, 2, 1, 3), std::invalid_argument);
}

TEST_CASE("tensor") {
  CHECK(gamma0() == tensor(arc_factorization(4, 1), arc_factorization(3, 2)));
  KoszulMF g = gamma1();
  CHECK(tensor(g, KoszulMF{}) == g);
  CHECK(tensor(KoszulMF{}, g) == g);
  CHECK(tensor(g, gamma0()).potential() == g.potential() + gamma0().potential());
}

TEST_CASE("row operations") {
  // First isomorphism: marks y = (2, 1, 5, 3) with x5 identified with x1.
  KoszulMF f = quotient(singular_factorization(2, 1, 5, 3), {{x_var(5), x(1)}});
  MultiPoly u1p = u1_bar(x(2), x(1), x(1), x(3)), u2p = u2_bar(x(2), x(1), x(1), x(3));
  CHECK(f.rows[0].a == u1p);
  CHECK(f.rows[1].a == u2p);
  KoszulMF g = row_op(f, 0, 1, x(1));
  CHECK(g.rows[0].a == u1p + x(1) * u2p);
  CHECK(g.rows[0].b == x(2) - x(3));
  CHECK(g.rows[1].a == u2p);
  CHECK(g.rows[1].b.is_zero());
  CHECK(g.potential() == f.potential());

  CHECK(row_op(f, 0, 1, 0) == f);
  CHECK(twist(f, 0, 1, 0) == f);
  CHECK_THROWS_AS(row_op(f, 0, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(row_op(f, 0, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(twist(f, -1, 0, 1), std::invalid_argument);
}

TEST_CASE("twist reproduces the common first row of the two local factorizations") {
  MultiPoly k = x(1) + x(2) + x(3) - MultiPoly(half3) * h;
  KoszulMF f = twist(row_op(gamma0(), 1, 0, -1), 0, 1, -k);
  MultiPoly L = 3 * h - 2 * x(1) - 2 * x(2) - x(3) - x(4);
  CHECK(f.rows[0].a == pibar(4, 1) - pibar(2, 1) + pibar(3, 1));
  CHECK(f.rows[0].b == x(1) + x(2) - x(3) - x(4));
  CHECK(f.rows[1].a == (x(4) - x(2)) * L);
  CHECK(f.rows[1].b == x(2) - x(3));
  CHECK(f.potential() == gamma0().potential());

  KoszulMF g = twist(row_op(gamma1(), 0, 1, x(2)), 0, 1, 2);
  CHECK(g.rows[0] == f.rows[0]);
  CHECK(g.rows[1].a == L);
  CHECK(g.rows[1].b == (x(4) - x(2)) * (x(2) - x(3)));
}

TEST_CASE("exclude_variable") {
  // After [12]_{x1} the first isomorphism excludes x1 against the swapped row.
  KoszulMF f = swap_row(row_op(quotient(singular_factorization(2, 1, 5, 3), {{x_var(5), x(1)}}), 0, 1, x(1)), 1);
  KoszulMF g = exclude_variable(f, 1, x_var(1));
  REQUIRE(g.rows.size() == 1);
  CHECK(g.rows[0].a == pibar(2, 3));
  CHECK(g.rows[0].b == x(2) - x(3));
  CHECK(g.z2_shift % 2 == 1);

  // Third isomorphism: x5 = h - x2 and x6 = h - x4 turn u1 into pi_21.
  CHECK(substitute(u1_bar(x(1), x(5), x(6), x(4)), {{x_var(5), h - x(2)}, {x_var(6), h - x(4)}}) == pibar(2, 1));

  // x4 occurs only in the excluded row.
  KoszulMF two = tensor(arc_factorization(1, 2), arc_factorization(3, 4));
  KoszulMF one = exclude_variable(two, 1, x_var(4));
  CHECK(one == arc_factorization(1, 2));

  CHECK_THROWS_AS(exclude_variable(gamma1(), 1, x_var(1)), std::invalid_argument);
  CHECK_THROWS_AS(exclude_variable(gamma1(), 0, x_var(7)), std::invalid_argument);
  CHECK(linear_solution(2 * x(3) - 4 * x(1) + h, x_var(3)) == 2 * x(1) - MultiPoly(rat(1, 2)) * h);
  CHECK_FALSE(linear_solution(x(3) * x(3), x_var(3)).has_value());
  CHECK_FALSE(linear_solution(x(1) * x(3) + x(3), x_var(3)).has_value());
}

TEST_CASE("swap and permute") {
  KoszulMF f = arc_factorization(1, 2);
  KoszulMF s = swap_row(f, 0);
  CHECK(s.rows[0].a == f.rows[0].b);
  CHECK(s.rows[0].shift == f.rows[0].target_shift());
  CHECK(s.z2_shift % 2 == 1);
  CHECK(swap_row(s, 0) == f);
  KoszulMF g = gamma1();
  KoszulMF pg = permute_rows(g, {1, 0});
  CHECK(pg.rows[0] == g.rows[1]);
  CHECK_THROWS_AS(permute_rows(g, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(permute_rows(g, {0}), std::invalid_argument);
}

TEST_CASE("morphisms") {
  CHECK(check_morphism(gamma0(), gamma1(), lambda0()).ok());
  CHECK(check_morphism(gamma1(), gamma0(), lambda1()).ok());
  CHECK(check_morphism(gamma1(), gamma1(), identity_morphism(gamma1())).ok());
  CHECK(check_morphism(gamma0(), gamma0(), identity_morphism(gamma0())).ok());

  MFMorphism bad = lambda0();
  bad.m0.at(1, 0) += x(1);
  auto r = check_morphism(gamma0(), gamma1(), bad);
  CHECK_FALSE(r.commutes);
  CHECK_FALSE(r.detail.empty());

  // Lambda_0 does not go the other way.
  CHECK_FALSE(check_morphism(gamma1(), gamma0(), lambda0()).commutes);
  CHECK_THROWS_AS(check_morphism(arc_factorization(1, 2), gamma1(), lambda0()), std::invalid_argument);
}

TEST_CASE("products of the local maps") {
  MFMorphism l0 = lambda0(), l1 = lambda1();
  PolyMatrix want = PolyMatrix::scalar(2, x(4) - x(2));
  CHECK(l0.m0 * l1.m0 == want);
  CHECK(l0.m1 * l1.m1 == want);
  CHECK(l1.m0 * l0.m0 == want);
  CHECK(l1.m1 * l0.m1 == want);
  CHECK(l0.degree == 1);
  CHECK(l1.degree == 1);
  CHECK(compose_check(l0, l1).ok);
  MFMorphism bad = l0;
  bad.m1.at(0, 1) += 1;
  CHECK_FALSE(compose_check(bad, l1).ok);
  CHECK(lambda_commutation_check(l0, l1).ok);
  CHECK_FALSE(lambda_commutation_check(bad, l1).ok);
  CHECK(two_periodic_check().ok);
  CHECK(flip_maps_check().ok);
}

TEST_CASE("closed web homology") {
  // One marked circle: homology in degree 1 only.
  Web circle = resolve(unknot(), {});
  QuotientPresentation c = closed_web_homology(circle);
  CHECK(c.hom_degree == 1);
  CHECK(c.q_shift == -1);
  REQUIRE(c.ideal.size() == 1);
  MultiPoly y = MultiPoly::variable(c.variables.at(0));
  CHECK(c.reduce(y * y - h * y - a).is_zero());
  CHECK(c.graded_rank() == LaurentPoly::q_plus_q_inv());

  // Basic closed web with marks 1, 2: degree 0 and X1 + X2 = h, X1 X2 = -a.
  Web basic = resolve(positive_kink(), {S});
  QuotientPresentation b = closed_web_homology(basic);
  CHECK(b.hom_degree == 0);
  CHECK(b.q_shift == -1);
  CHECK(b.graded_rank() == LaurentPoly::q_plus_q_inv());
  CHECK(b.reduce(x(1) + x(2) - h).is_zero());
  CHECK(b.reduce(x(1) * x(2) + a).is_zero());
  CHECK_FALSE(b.reduce(x(1)).is_zero());

  // Two circles: A (x) A in degree 0.
  QuotientPresentation two = closed_web_homology(resolve(unlink2(), {}));
  CHECK(two.hom_degree == 0);
  CHECK(two.q_shift == -2);
  CHECK(two.graded_rank() == LaurentPoly::q_plus_q_inv().pow(2));
  CHECK_FALSE(two.to_string().empty());
}

TEST_CASE("closed web rank equals the bracket on the corpus") {
  for (const auto& [name, d] : corpus()) {
    std::size_t n = d.crossing_count();
    for (std::uint64_t m = 0; m < (1ull << n); ++m) {
      ResolutionWord w(n);
      for (std::size_t c = 0; c < n; ++c) w[c] = (m >> c & 1) ? S : O;
      Web g = resolve(d, w);
      auto hp = closed_web_homology(g);
      CHECK_MESSAGE(hp.graded_rank() == web_bracket(g), name);
      CHECK_MESSAGE(hp.hom_degree == p_parity(g), name);
    }
  }
}

TEST_CASE("induced maps on homology") {
  InducedMaps im = induced_maps(lambda0(), lambda1());
  REQUIRE(im.lambda0_images.size() == 4);
  REQUIRE(im.lambda1_images.size() == 2);
  AElem one = AElem::one(), X = AElem::x();
  CHECK(im.lambda0_images[0] == one);
  CHECK(im.lambda0_images[1] == X);
  CHECK(im.lambda0_images[2] == X);
  CHECK(im.lambda0_images[3] == X.scaled(h) + one.scaled(a));
  AElem d1 = AElem::basis(2, 0b01) + AElem::basis(2, 0b10) - AElem::basis(2, 0, h);
  AElem dX = AElem::basis(2, 0b11) + AElem::basis(2, 0, a);
  CHECK(im.lambda1_images[0] == d1);
  CHECK(im.lambda1_images[1] == dX);
  CHECK(induced_map_check(lambda0(), lambda1()).ok);
}

TEST_CASE("proof replays") {
  auto scripts = builtin_scripts();
  CHECK(scripts.size() == 5);
  for (const auto& s : scripts) {
    ReplayResult r = replay_proof(s);
    CHECK_MESSAGE(r.ok, std::string(s.name + ": " + r.diagnostic));
    CHECK(r.failed_step == -1);
    CHECK(r.final == s.target);
  }
  KoszulMF arc32 = arc_factorization(3, 2);
  arc32.z2_shift = 1;
  CHECK(first_isomorphism_script().target == arc32);
  CHECK(third_isomorphism_script().target == tensor(arc_factorization(2, 1), arc_factorization(4, 3)));
  CHECK(fourth_isomorphism_script().target.rows.size() == 3);
  CHECK(second_isomorphism_check().ok);
}

TEST_CASE("replay reports the failing step") {
  ProofScript s = fourth_isomorphism_script();
  // Spoil the twist coefficient of the third move.
  REQUIRE(s.steps.size() > 6);
  int spoiled = -1;
  for (std::size_t k = 0; k < s.steps.size(); ++k)
    if (auto* t = std::get_if<step::RowOp>(&s.steps[k]); t && k > 5) {
      t->c += x(1);
      spoiled = static_cast<int>(k);
      break;
    }
  REQUIRE(spoiled >= 0);
  ReplayResult r = replay_proof(s);
  CHECK_FALSE(r.ok);
  CHECK(r.failed_step >= spoiled);
  CHECK_FALSE(r.diagnostic.empty());

  // Excluding an external variable breaks the potential check.
  ProofScript ext{"ext", tensor(arc_factorization(1, 2), arc_factorization(2, 3)), {step::Exclude{1, x_var(3)}},
                  arc_factorization(1, 2)};
  ReplayResult e = replay_proof(ext);
  CHECK_FALSE(e.ok);
  CHECK(e.failed_step == 0);

  // Excluding the internal mark 2 is fine.
  ProofScript in{"int", tensor(arc_factorization(1, 2), arc_factorization(2, 3)), {step::Exclude{0, x_var(2)}},
                 arc_factorization(1, 3)};
  CHECK(replay_proof(in).ok);

  ProofScript wrong_target = in;
  wrong_target.target = arc_factorization(3, 1);
  ReplayResult w = replay_proof(wrong_target);
  CHECK_FALSE(w.ok);
  CHECK(w.failed_step == 1);
  CHECK_FALSE(describe(step::Twist{0, 1, h}).empty());
}

TEST_CASE("property: moves keep the potential and the degrees") {
  std::mt19937_64 rng(71);
  auto vars = gen::ah_x(12);
  for (int i = 0; i < 250; ++i) {
    KoszulMF f = gen::factorization(rng);
    MultiPoly w = f.potential();
    KoszulMF g = f;
    for (int k = 0; k < 4; ++k) g = gen::random_move(rng, g, vars);
    CHECK(g.potential() == w);
    CHECK(check_degrees(g).empty());
    if (g.rows.size() <= 4) CHECK(check_two_periodic(g).empty());
  }
}

TEST_CASE("property: d0 d1 = d1 d0 = potential") {
  std::mt19937_64 rng(72);
  for (int i = 0; i < 250; ++i) {
    KoszulMF f = gen::factorization(rng, 2);
    CHECK(check_two_periodic(f).empty());
    CHECK(check_morphism(f, f, identity_morphism(f)).ok());
  }
}

TEST_CASE("property: excluding internal marks keeps the potential") {
  std::mt19937_64 rng(73);
  int excluded = 0, cases = 0;
  while (cases < 250) {
    // A chain of arcs m0 -> m1 -> ... -> mk; the inner marks are internal.
    int len = gen::uniform(rng, 2, 4);
    std::vector<int> marks;
    for (int m = 1; m <= 8; ++m) marks.push_back(m);
    std::shuffle(marks.begin(), marks.end(), rng);
    KoszulMF f;
    for (int k = 0; k < len; ++k) f = tensor(f, arc_factorization(marks[k], marks[k + 1]));
    std::vector<VarId> vars{kVarA, kVarH};
    for (int k = 0; k <= len; ++k) vars.push_back(x_var(marks[k]));
    for (int k = 0; k < 3; ++k) f = gen::random_move(rng, f, vars);
    MultiPoly w = f.potential();
    ++cases;
    for (int k = 1; k < len; ++k) {
      VarId v = x_var(marks[k]);
      for (int r = 0; r < static_cast<int>(f.rows.size()); ++r)
        if (linear_solution(f.rows[r].b, v)) {
          f = exclude_variable(f, r, v);
          ++excluded;
          CHECK(f.potential() == w);
          CHECK(check_degrees(f).empty());
          break;
        }
    }
  }
  CHECK(excluded >= 200);
}

TEST_CASE("property: closed web rank, parity and null-homotopies on random resolutions") {
  std::mt19937_64 rng(74);
  for (int i = 0; i < 220; ++i) {
    LinkDiagram d = gen::braid_diagram(rng, 5);
    Web g = resolve(d, gen::resolution(rng, d.crossing_count()));
    auto hp = closed_web_homology(g);
    CHECK(hp.graded_rank() == web_bracket(g));
    CHECK(hp.hom_degree == p_parity(g));
    for (const auto& [e, ms] : mark_set(g))
      for (int m : ms) CHECK(hp.reduce(x(m) * x(m) - h * x(m) - a).is_zero());
  }
}
