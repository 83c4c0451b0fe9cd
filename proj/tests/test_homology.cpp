#include <doctest.h>

#include "gen.hpp"
#include "krsl2/homology.hpp"
#include "krsl2/skein.hpp"

using namespace krsl2;

namespace {

// Rank of a dense rational matrix by plain row reduction.
long dense_rank(std::vector<std::vector<Rational>> m) {
  long rank = 0;
  std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<long>(rows); ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == static_cast<std::size_t>(rank) || m[r][c] == 0) continue;
      Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

// dim H per (hom, q) block, or per hom when `by_q` is false.
std::map<std::pair<int, int>, long> oracle_dims(const RationalComplex& c, bool by_q) {
  using Key = std::pair<int, int>;
  auto key = [&](std::size_t s) { return Key{c.gens[s].hom, by_q ? c.gens[s].qdeg : 0}; };
  std::map<Key, std::vector<std::size_t>> blocks;
  for (std::size_t s = 0; s < c.size(); ++s) blocks[key(s)].push_back(s);
  auto rank_from = [&](const Key& k) -> long {
    Key next{k.first + 1, k.second};
    if (!blocks.count(k) || !blocks.count(next)) return 0;
    const auto& src = blocks[k];
    const auto& tgt = blocks[next];
    std::vector<std::vector<Rational>> m(tgt.size(), std::vector<Rational>(src.size()));
    for (std::size_t j = 0; j < src.size(); ++j)
      for (const auto& [t, x] : c.out[src[j]]) {
        auto it = std::find(tgt.begin(), tgt.end(), static_cast<std::size_t>(t));
        REQUIRE(it != tgt.end());
        m[it - tgt.begin()][j] = x;
      }
    return dense_rank(m);
  };
  std::map<Key, long> out;
  for (const auto& [k, list] : blocks) {
    long dim = static_cast<long>(list.size()) - rank_from(k) - rank_from({k.first - 1, k.second});
    if (dim) out[k] = dim;
  }
  return out;
}

std::map<int, long> totals_of(const std::map<std::pair<int, int>, long>& dims) {
  std::map<int, long> t;
  for (const auto& [k, d] : dims) t[k.first] += d;
  return t;
}

const Specialization kKhovanov = parse_specialization("khovanov");

}  // namespace

TEST_CASE("specialization presets and parsing") {
  auto presets = preset_specializations();
  REQUIRE(presets.size() == 4);
  CHECK(parse_specialization("khovanov").graded());
  auto d1 = parse_specialization("distinct1");
  CHECK(d1.a0 == 1);
  CHECK(d1.h0 == 0);
  auto d2 = parse_specialization("distinct2");
  CHECK(d2.a0 == 0);
  CHECK(d2.h0 == 1);
  auto dbl = parse_specialization("double");
  CHECK(dbl.a0 == rat(-1, 4));
  CHECK(dbl.h0 == 1);
  CHECK_FALSE(dbl.distinct_roots());
  CHECK(d1.distinct_roots());
  auto custom = parse_specialization("-1/4,1");
  CHECK(custom.discriminant() == 0);
  CHECK_THROWS_AS(parse_specialization("nonsense"), std::invalid_argument);
  CHECK_THROWS_AS(parse_specialization("1,2,3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_specialization("1/0,2"), std::invalid_argument);
}

TEST_CASE("units") {
  CHECK(is_unit(MultiPoly(rat(-2, 3))));
  CHECK_FALSE(is_unit(MultiPoly::h()));
  CHECK_FALSE(is_unit(MultiPoly()));
  CHECK(is_unit(Rational(5)));
  CHECK_FALSE(is_unit(Rational(0)));
}

TEST_CASE("gauss_reduce examples") {
  GradedComplex kink = gauss_reduce(assemble_complex(build_cube(positive_kink())));
  CHECK(kink.size() == 2);
  CHECK(kink.entry_count() == 0);
  CHECK(euler_characteristic(kink) == LaurentPoly::q_plus_q_inv());
  for (const auto& g : kink.gens) CHECK(g.hom == 0);

  GradedComplex flat = assemble_complex(build_cube(unlink2()));
  GradedComplex same = gauss_reduce(flat);
  CHECK(complex_to_json(same) == complex_to_json(flat));

  GradedComplex tre = gauss_reduce(assemble_complex(build_cube(trefoil_right())));
  CHECK(tre.size() <= 8);
  CHECK(euler_characteristic(tre) == link_bracket(trefoil_right()));
}

TEST_CASE("specialize examples") {
  for (const auto& s : preset_specializations()) {
    RationalComplex u = specialize(assemble_complex(build_cube(unknot())), s);
    CHECK(u.size() == 2);
    CHECK(homology_dims(u).total() == 2);
  }
  CHECK(specialize(assemble_complex(build_cube(unknot())), kKhovanov).graded);
  CHECK_FALSE(specialize(assemble_complex(build_cube(unknot())), parse_specialization("distinct1")).graded);
  auto s = parse_specialization("1,0");
  CHECK(s.distinct_roots());
  CHECK(s.discriminant() == 4);
}

TEST_CASE("homology_dims examples") {
  HomologyTable u = compute_homology(unknot(), kKhovanov);
  CHECK(u.bigraded);
  CHECK(u.dims == std::map<std::pair<int, int>, long>{{{0, -1}, 1}, {{0, 1}, 1}});
  CHECK(u.to_tsv() == "i\tj\tdim\n0\t-1\t1\n0\t1\t1\n");

  HomologyTable t = compute_homology(trefoil_right(), kKhovanov);
  CHECK(t.total() == 4);
  CHECK(t.dims == std::map<std::pair<int, int>, long>{{{-3, 9}, 1}, {{-2, 5}, 1}, {{0, 1}, 1}, {{0, 3}, 1}});
  CHECK(euler_characteristic(t) == link_bracket(trefoil_right()));
  auto oracle = oracle_dims(assemble_specialized(build_cube(trefoil_right()), 0, 0), true);
  CHECK(t.dims == oracle);

  for (int n : {1, 2, 3}) {
    std::vector<int> loops;
    for (int i = 1; i <= n; ++i) loops.push_back(i);
    HomologyTable un = compute_homology(LinkDiagram({}, loops), parse_specialization("1,0"));
    CHECK(un.total() == (1L << n));
    CHECK(un.totals == std::map<int, long>{{0, 1L << n}});
  }
}

TEST_CASE("euler characteristic examples") {
  CHECK(euler_characteristic(assemble_complex(build_cube(unknot()))) == LaurentPoly::q_plus_q_inv());
  CHECK(euler_characteristic(assemble_complex(build_cube(hopf_positive()))).to_string() == "q^6 + q^4 + q^2 + 1");
  for (const auto& [name, d] : corpus()) {
    LaurentPoly e = euler_characteristic(assemble_complex(build_cube(d)));
    LaurentPoly m = euler_characteristic(assemble_complex(build_cube(mirror(d))));
    CHECK_MESSAGE(m == e.mirrored(), name);
  }
}

TEST_CASE("table formats") {
  HomologyTable t = compute_homology(hopf_positive(), parse_specialization("distinct1"));
  CHECK_FALSE(t.bigraded);
  CHECK(t.to_tsv() == "i\tdim\n-2\t2\n0\t2\n");
  auto j = t.to_json();
  CHECK(j.find("\"total\":4") != std::string::npos);
  CHECK_FALSE(t.to_text().empty());
}

TEST_CASE("distinct root report examples") {
  auto d1 = parse_specialization("1,0");
  auto u = distinct_root_report(unknot(), d1);
  CHECK(u.ok);
  CHECK(u.total == 2);
  CHECK(u.computed == std::map<int, long>{{0, 2}});

  auto ul = distinct_root_report(unlink2(), d1);
  CHECK(ul.ok);
  CHECK(ul.computed == std::map<int, long>{{0, 4}});

  auto hp = distinct_root_report(hopf_positive(), d1);
  CHECK(hp.ok);
  CHECK(hp.computed == std::map<int, long>{{-2, 2}, {0, 2}});
  CHECK(hp.assignments.size() == 4);
  auto hn = distinct_root_report(hopf_negative(), d1);
  CHECK(hn.ok);
  CHECK(hn.computed == std::map<int, long>{{0, 2}, {2, 2}});

  // A wrong multiplier is reported with a diagnostic.
  auto wrong = distinct_root_report(hopf_positive(), d1, -4);
  CHECK_FALSE(wrong.ok);
  CHECK_FALSE(wrong.diagnostic.empty());

  CHECK(measure_degree_multiplier(hopf_positive(), d1) == Rational(kDegreeMultiplier));
  CHECK(measure_degree_multiplier(hopf_negative(), d1) == Rational(kDegreeMultiplier));
  CHECK_FALSE(measure_degree_multiplier(unknot(), d1).has_value());
}

TEST_CASE("distinct and double root structure on the corpus") {
  for (const auto& [name, d] : corpus()) {
    for (const char* s : {"distinct1", "distinct2"})
      CHECK_MESSAGE(compute_homology(d, parse_specialization(s)).total() == (1L << d.component_count()), name);
    CHECK_MESSAGE(compute_homology(d, parse_specialization("double")).totals == compute_homology(d, kKhovanov).totals,
                  name);
  }
}

TEST_CASE("reidemeister pairs have equal homology") {
  for (const auto& p : reidemeister_pairs())
    for (const auto& s : preset_specializations())
      CHECK_MESSAGE(compute_homology(p.left, s) == compute_homology(p.right, s), std::string(p.name + " at " + s.label()));
}

TEST_CASE("property: gauss_reduce preserves euler characteristic and specialized homology") {
  std::mt19937_64 rng(61);
  auto presets = preset_specializations();
  for (int i = 0; i < 220; ++i) {
    LinkDiagram d = gen::braid_diagram(rng, 5);
    GradedComplex c = assemble_complex(build_cube(d));
    GradedComplex r = gauss_reduce(c);
    CHECK(euler_characteristic(r) == euler_characteristic(c));
    CHECK(check_d_squared(r).empty());

    Specialization s = presets[gen::uniform(rng, 0, 3)];
    if (gen::uniform(rng, 0, 3) == 0) s = {"random", gen::small_rational(rng), gen::small_rational(rng)};
    bool by_q = s.graded();
    auto want = oracle_dims(specialize(c, s), by_q);
    HomologyTable got = homology_dims(specialize(r, s));
    if (by_q) CHECK(got.dims == want);
    CHECK(got.totals == totals_of(want));
  }
}
