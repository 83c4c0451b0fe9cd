#include <doctest.h>

#include "gen.hpp"
#include "krsl2/linkweb.hpp"
#include "krsl2/skein.hpp"

using namespace krsl2;

namespace {

const auto O = Smoothing::Oriented;
const auto S = Smoothing::Singular;

int total_vertices(const std::vector<Cycle>& cs) {
  int n = 0;
  for (const auto& c : cs) n += c.vertex_count;
  return n;
}

}  // namespace

TEST_CASE("parse_diagram examples") {
  LinkDiagram u = parse_diagram("O[1]");
  CHECK(u.component_count() == 1);
  CHECK(u.crossing_count() == 0);

  LinkDiagram hopf = parse_diagram("X[1,3,2,4] X[3,1,4,2]");
  CHECK(hopf.component_count() == 2);
  REQUIRE(hopf.crossing_count() == 2);
  CHECK(hopf.crossings()[0].sign == hopf.crossings()[1].sign);

  LinkDiagram tre = parse_diagram("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]");
  CHECK(tre.component_count() == 1);
  CHECK(tre.crossing_count() == 3);
  CHECK(std::abs(tre.writhe()) == 3);
}

TEST_CASE("parse_diagram accepts wrappers, commas and comments") {
  LinkDiagram d = parse_diagram("# hopf\nPD[X[1,3,2,4], X[3,1,4,2]]\n");
  CHECK(d.component_count() == 2);
  CHECK(parse_diagram("").component_count() == 0);
}

TEST_CASE("parse errors carry a location") {
  try {
    parse_diagram("X[1,2,3");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() >= 1);
  }
  try {
    parse_diagram("X[1,1,2,2] foo");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.col() == 12);
  }
  // Every arc must appear twice.
  CHECK_THROWS(parse_diagram("X[1,2,3,4]"));
  CHECK_THROWS(parse_diagram("O[1] O[1]"));
  // Arc 1 enters both crossings along the under-strand.
  CHECK_THROWS(parse_diagram("X[1,2,3,4] X[1,4,3,2]"));
}

TEST_CASE("resolve examples") {
  LinkDiagram hopf = hopf_positive();
  auto both = cycles(resolve(hopf, {O, O}));
  CHECK(both.size() == 2);
  CHECK(total_vertices(both) == 0);

  auto one = cycles(resolve(hopf, {S, O}));
  REQUIRE(one.size() == 1);
  CHECK(one[0].vertex_count == 2);

  auto kink = cycles(resolve(positive_kink(), {S}));
  REQUIRE(kink.size() == 1);
  CHECK(kink[0].vertex_count == 2);
}

TEST_CASE("cycles examples") {
  auto two = cycles(resolve(unlink2(), {}));
  REQUIRE(two.size() == 2);
  CHECK(two[0].vertex_count == 0);
  CHECK(two[1].vertex_count == 0);

  auto basic = cycles(resolve(positive_kink(), {S}));
  REQUIRE(basic.size() == 1);
  CHECK(basic[0].vertex_count == 2);

  // Hopf with both crossings singular: the two singular pairs close into two
  // 2-vertex cycles.
  auto ladder = cycles(resolve(hopf_positive(), {S, S}));
  CHECK(ladder.size() == 2);
  CHECK(total_vertices(ladder) == 4);
}

TEST_CASE("linking_matrix examples") {
  auto split = linking_matrix(unlink2());
  REQUIRE(split.size() == 2);
  CHECK(split[0][1] == 0);

  auto hp = linking_matrix(hopf_positive());
  CHECK(hp[0][1] == 1);
  CHECK(hp[1][0] == 1);
  CHECK(linking_matrix(hopf_negative())[0][1] == -1);

  auto tr = linking_matrix(trefoil_right());
  REQUIRE(tr.size() == 1);
  CHECK(abs(tr[0][0]) == 3);
}

TEST_CASE("p_parity examples") {
  CHECK(p_parity(resolve(unknot(), {})) == 1);
  CHECK(p_parity(resolve(positive_kink(), {S})) == 0);
  CHECK(p_parity(resolve(unlink2(), {})) == 0);
  Web bare = resolve(unknot(), {});
  bare.oriented_circle_count.reset();
  CHECK_THROWS_AS(p_parity(bare), std::logic_error);
}

TEST_CASE("crossing signs follow the right-hand rule") {
  for (int c : {0, 1}) {
    CHECK(hopf_positive().crossings()[c].sign == 1);
    CHECK(hopf_negative().crossings()[c].sign == -1);
  }
  CHECK(trefoil_right().writhe() == 3);
  CHECK(trefoil_left().writhe() == -3);
  CHECK(figure_eight().writhe() == 0);
  CHECK(mirror(trefoil_right()).writhe() == -3);
  CHECK(switch_crossing(hopf_positive(), 0).writhe() == 0);
}

TEST_CASE("pd text round trips") {
  for (const auto& [name, d] : corpus()) {
    LinkDiagram back = parse_diagram(d.to_pd_text());
    CHECK_MESSAGE(back.writhe() == d.writhe(), name);
    CHECK_MESSAGE(back.component_count() == d.component_count(), name);
  }
}

TEST_CASE("property: resolutions satisfy the web invariants and share provenance") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 250; ++i) {
    LinkDiagram d = gen::braid_diagram(rng, 6);
    int oriented = static_cast<int>(cycles(resolve(d, ResolutionWord(d.crossing_count(), O))).size());
    Web g = resolve(d, gen::resolution(rng, d.crossing_count()));
    CHECK_NOTHROW(validate_web(g));
    REQUIRE(g.oriented_circle_count.has_value());
    CHECK(*g.oriented_circle_count == oriented);
    CHECK(p_parity(g) == oriented % 2);
    for (const auto& c : cycles(g)) CHECK(c.vertex_count % 2 == 0);
  }
}

TEST_CASE("property: linking matrix is symmetric and sums to the writhe") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 250; ++i) {
    LinkDiagram d = gen::braid_diagram(rng, 7);
    auto lk = linking_matrix(d);
    Rational sum = 0;
    for (std::size_t r = 0; r < lk.size(); ++r)
      for (std::size_t c = 0; c < lk.size(); ++c) {
        CHECK(lk[r][c] == lk[c][r]);
        if (r <= c) sum += lk[r][c] * (r == c ? 1 : 2);
      }
    CHECK(sum == d.writhe());
  }
}
