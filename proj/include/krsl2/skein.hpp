#pragma once

#include <string>
#include <utility>
#include <vector>

#include "krsl2/linkweb.hpp"
#include "krsl2/poly.hpp"

namespace krsl2 {

// (q + q^-1)^(number of cycles).
LaurentPoly web_bracket(const Web& g);

// Per-crossing contribution of a smoothing: hom degree and q-shift.
// Positive: singular (-1, 2), oriented (0, 1).  Negative: oriented (0, -1),
// singular (1, -2).
std::pair<int, int> smoothing_grading(int sign, Smoothing s);

LaurentPoly link_bracket(const LinkDiagram& d);

// q^2 <neg> - q^-2 <pos> == (q - q^-1) <oriented>
bool jones_relation_check(const LinkDiagram& pos, const LinkDiagram& neg, const LinkDiagram& oriented);

// Named diagrams used throughout the tests and the verification suite.
struct NamedDiagram {
  std::string name;
  LinkDiagram diagram;
};

struct DiagramPair {
  std::string name;
  std::string move;  // "R1", "R2" or "R3"
  LinkDiagram left;
  LinkDiagram right;
};

LinkDiagram unknot();
LinkDiagram positive_kink();
LinkDiagram negative_kink();
LinkDiagram hopf_positive();
LinkDiagram hopf_negative();
LinkDiagram trefoil_right();
LinkDiagram trefoil_left();
LinkDiagram figure_eight();
LinkDiagram unlink2();

std::vector<NamedDiagram> corpus();
std::vector<DiagramPair> reidemeister_pairs();

}  // namespace krsl2
