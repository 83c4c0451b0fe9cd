#include "krsl2/skein.hpp"

namespace krsl2 {

LaurentPoly web_bracket(const Web& g) {
  return LaurentPoly::q_plus_q_inv().pow(static_cast<unsigned>(cycles(g).size()));
}

std::pair<int, int> smoothing_grading(int sign, Smoothing s) {
  if (sign > 0) return s == Smoothing::Singular ? std::pair{-1, 2} : std::pair{0, 1};
  return s == Smoothing::Singular ? std::pair{1, -2} : std::pair{0, -1};
}

LaurentPoly link_bracket(const LinkDiagram& d) {
  const std::size_t n = d.crossing_count();
  LaurentPoly total;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    ResolutionWord w(n);
    int hom = 0, shift = 0;
    for (std::size_t c = 0; c < n; ++c) {
      w[c] = (mask >> c) & 1u ? Smoothing::Singular : Smoothing::Oriented;
      auto [i, a] = smoothing_grading(d.crossings()[c].sign, w[c]);
      hom += i;
      shift += a;
    }
    LaurentPoly term = web_bracket(resolve(d, w)).shifted(shift);
    if (hom % 2) {
      total -= term;
    } else {
      total += term;
    }
  }
  return total;
}

bool jones_relation_check(const LinkDiagram& pos, const LinkDiagram& neg, const LinkDiagram& oriented) {
  LaurentPoly lhs = link_bracket(neg).shifted(2) - link_bracket(pos).shifted(-2);
  LaurentPoly rhs = (LaurentPoly::monomial(1) - LaurentPoly::monomial(-1)) * link_bracket(oriented);
  return lhs == rhs;
}

LinkDiagram unknot() { return LinkDiagram({}, {1}); }
LinkDiagram positive_kink() { return LinkDiagram({{1, 1, 2, 2}}, {}); }
LinkDiagram negative_kink() { return LinkDiagram({{2, 1, 1, 2}}, {}); }
LinkDiagram hopf_positive() { return braid_closure(2, {1, 1}); }
LinkDiagram hopf_negative() { return braid_closure(2, {-1, -1}); }
LinkDiagram trefoil_right() { return braid_closure(2, {1, 1, 1}); }
LinkDiagram trefoil_left() { return braid_closure(2, {-1, -1, -1}); }
LinkDiagram figure_eight() { return braid_closure(3, {1, -2, 1, -2}); }
LinkDiagram unlink2() { return LinkDiagram({}, {1, 2}); }

std::vector<NamedDiagram> corpus() {
  return {
      {"unknot", unknot()},
      {"kink+", positive_kink()},
      {"kink-", negative_kink()},
      {"hopf+", hopf_positive()},
      {"hopf-", hopf_negative()},
      {"trefoil+", trefoil_right()},
      {"trefoil-", trefoil_left()},
      {"figure8", figure_eight()},
      {"unlink2", unlink2()},
  };
}

std::vector<DiagramPair> reidemeister_pairs() {
  return {
      {"unknot~kink+", "R1", unknot(), positive_kink()},
      {"unknot~kink-", "R1", unknot(), negative_kink()},
      {"trefoil~stabilized", "R1", braid_closure(2, {1, 1, 1}), braid_closure(3, {1, 1, 1, 2})},
      {"trefoil-~stabilized-", "R1", braid_closure(2, {-1, -1, -1}), braid_closure(3, {-1, -1, -1, -2})},
      {"unlink2~bigon", "R2", unlink2(), braid_closure(2, {1, -1})},
      {"trefoil+O~bigon", "R2", braid_closure(3, {1, 1, 1}), braid_closure(3, {1, 1, 1, 2, -2})},
      {"hopf+~bigon", "R2", braid_closure(2, {1, 1}), braid_closure(2, {1, -1, 1, 1})},
      {"braid121~212", "R3", braid_closure(3, {1, 2, 1}), braid_closure(3, {2, 1, 2})},
      {"braid-121~-212", "R3", braid_closure(3, {-1, -2, -1}), braid_closure(3, {-2, -1, -2})},
      {"braid12-1~-212", "R3", braid_closure(3, {1, 2, -1}), braid_closure(3, {-2, 1, 2})},
      {"braid1212~2122", "R3", braid_closure(3, {1, 2, 1, 2}), braid_closure(3, {2, 1, 2, 2})},
  };
}

}  // namespace krsl2
