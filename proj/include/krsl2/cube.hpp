#pragma once

// Cube of resolutions and the chain complex C(D) it assembles into.
//
// Bit c of a vertex mask records the "later" smoothing of crossing c, the one
// sitting one homological degree higher: oriented for a positive crossing,
// singular for a negative one.  Edges raise a single bit and carry the sign
// (-1)^(number of raised bits at earlier crossings).

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "krsl2/frobenius.hpp"
#include "krsl2/linkweb.hpp"
#include "krsl2/poly.hpp"

namespace krsl2 {

using Mask = std::uint64_t;

struct CubeVertex {
  Mask mask = 0;
  ResolutionWord word;
  Web web;
  std::vector<Cycle> cycles;
  std::vector<int> arc_cycle;  // dense arc index -> cycle
  int hom_degree = 0;
  int q_shift = 0;

  int cycle_count() const { return static_cast<int>(cycles.size()); }
};

struct CubeEdge {
  Mask source = 0;
  Mask target = 0;
  int crossing = 0;
  int sign = 1;
};

struct Cube {
  LinkDiagram diagram;
  std::vector<int> arc_ids;  // dense index -> arc id
  std::vector<CubeVertex> vertices;  // indexed by mask
  std::vector<CubeEdge> edges;

  int arc_index(int arc) const;
};

Smoothing later_smoothing(int sign);
Cube build_cube(const LinkDiagram& d, int jobs = 1);

// Throws std::invalid_argument for vertices that are not adjacent.
CobordismMap edge_map(const Cube& cube, const CubeVertex& source, const CubeVertex& target);

// A sparse complex with coefficients in C.  Generators are ordered by
// (hom degree, vertex mask, word); out[s] lists d(s) by target index.
template <class C>
struct Complex {
  struct Gen {
    int hom = 0;
    int qdeg = 0;
    Mask vertex = 0;
    Word word = 0;
  };
  std::vector<Gen> gens;
  std::vector<std::map<int, C>> out;
  bool graded = true;  // whether q-degrees are meaningful

  std::size_t size() const { return gens.size(); }
  std::size_t entry_count() const {
    std::size_t n = 0;
    for (const auto& o : out) n += o.size();
    return n;
  }
};

using GradedComplex = Complex<MultiPoly>;
using RationalComplex = Complex<Rational>;

// Coefficient c1 + ch*h + ca*a of the structure maps, before it is turned
// into a ring element.
struct LocalCoef {
  int one = 0;
  int h = 0;
  int a = 0;
};

GradedComplex assemble_complex(const Cube& cube, int jobs = 1);
// Same complex with (a, h) evaluated at (a0, h0); q-degrees kept, `graded`
// set only at (0, 0).
RationalComplex assemble_specialized(const Cube& cube, const Rational& a0, const Rational& h0, int jobs = 1);

// Returns an empty string when d o d = 0, otherwise a description of the
// first nonzero entry.
template <class C>
std::string check_d_squared(const Complex<C>& c);
// Every entry of a graded complex must have degree qdeg(source) - qdeg(target).
std::string check_grading(const GradedComplex& c);

std::string complex_to_json(const GradedComplex& c);

}  // namespace krsl2
