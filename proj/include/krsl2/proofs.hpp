#pragma once

// Move-by-move replays of the local isomorphisms between Koszul
// factorizations, plus the checks on the maps Lambda_0 and Lambda_1.

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "krsl2/frobenius.hpp"
#include "krsl2/mfact.hpp"

namespace krsl2 {

namespace step {
// Row indices are 0-based.
struct RowOp {
  int i, j;
  MultiPoly c;
};
struct Twist {
  int i, j;
  MultiPoly k;
};
struct TwistB {
  int i, j;
  MultiPoly k;
};
struct Swap {
  int row;
};
struct Exclude {
  int row;
  VarId var;
};
struct Permute {
  std::vector<int> perm;
};
// Identifies marks; the only step allowed to change the potential.
struct Quotient {
  std::map<VarId, MultiPoly> bindings;
};
}  // namespace step

using ProofStep =
    std::variant<step::RowOp, step::Twist, step::TwistB, step::Swap, step::Exclude, step::Permute, step::Quotient>;

std::string describe(const ProofStep& s);

struct ProofScript {
  std::string name;
  KoszulMF start;
  std::vector<ProofStep> steps;
  KoszulMF target;
};

struct ReplayResult {
  bool ok = false;
  int failed_step = -1;  // -1 when every step ran; steps.size() for a final mismatch
  std::string diagnostic;
  KoszulMF final;
};

// Applies each step, checking after every move that the potential is
// unchanged and that the rows stay homogeneous of total degree 6, and before
// every exclusion that the variable is absent from the potential.
ReplayResult replay_proof(const ProofScript& script);

ProofScript first_isomorphism_script();
ProofScript third_isomorphism_script();
ProofScript fourth_isomorphism_script();
// The two factorizations C(Gamma^0) and C(Gamma^1) brought to a shared first
// row; their second rows differ by the factor x4 - x2 moving from a to b.
ProofScript gamma0_form_script();
ProofScript gamma1_form_script();
std::vector<ProofScript> builtin_scripts();

struct CheckOutcome {
  bool ok = false;
  std::string detail;
};

// The digon web splits off a factor q + q^-1 under both closures.
CheckOutcome second_isomorphism_check();

// U0 V0 = U1 V1 = V0 U0 = V1 U1 = (x4 - x2) id and both maps have degree 1.
CheckOutcome compose_check(const MFMorphism& l0, const MFMorphism& l1);
// Lambda_0 and Lambda_1 commute with the differentials of C(Gamma^0), C(Gamma^1).
CheckOutcome lambda_commutation_check(const MFMorphism& l0, const MFMorphism& l1);
// d0 d1 = d1 d0 = potential * id for the arcs, C(Gamma^0) and C(Gamma^1).
CheckOutcome two_periodic_check();
// The flip maps between the second rows of the two forms above.
CheckOutcome flip_maps_check();

// Induced maps on degree-0 homology after closing x4 = x1, x3 = x2, written in
// the bases of A (x) A and A.
struct InducedMaps {
  std::vector<AElem> lambda0_images;  // on 1(x)1, X(x)1, 1(x)X, X(x)X
  std::vector<AElem> lambda1_images;  // on 1, X
};
InducedMaps induced_maps(const MFMorphism& l0, const MFMorphism& l1);
// Lambda_0* = m and Lambda_1* = Delta.
CheckOutcome induced_map_check(const MFMorphism& l0, const MFMorphism& l1);

}  // namespace krsl2
