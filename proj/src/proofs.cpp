#include "krsl2/proofs.hpp"

#include <sstream>
#include <stdexcept>

namespace krsl2 {

namespace {

MultiPoly X(int i) { return MultiPoly::x(i); }
MultiPoly H() { return MultiPoly::h(); }
MultiPoly R(long n, long d = 1) { return MultiPoly(rat(n, d)); }

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

std::string describe(const ProofStep& s) {
  return std::visit(
      Overloaded{
          [](const step::RowOp& o) {
            return "[" + std::to_string(o.i + 1) + std::to_string(o.j + 1) + "]_{" + o.c.to_string() + "}";
          },
          [](const step::Twist& o) {
            return "twist(" + std::to_string(o.i + 1) + "," + std::to_string(o.j + 1) + ", k=" + o.k.to_string() + ")";
          },
          [](const step::TwistB& o) {
            return "twist_b(" + std::to_string(o.i + 1) + "," + std::to_string(o.j + 1) + ", k=" + o.k.to_string() +
                   ")";
          },
          [](const step::Swap& o) { return "swap row " + std::to_string(o.row + 1); },
          [](const step::Exclude& o) { return "exclude " + var_name(o.var) + " via row " + std::to_string(o.row + 1); },
          [](const step::Permute& o) {
            std::string s = "permute rows (";
            for (std::size_t k = 0; k < o.perm.size(); ++k) s += (k ? "," : "") + std::to_string(o.perm[k] + 1);
            return s + ")";
          },
          [](const step::Quotient& o) {
            std::string s = "quotient";
            for (const auto& [v, e] : o.bindings) s += " " + var_name(v) + "=" + e.to_string();
            return s;
          },
      },
      s);
}

ReplayResult replay_proof(const ProofScript& script) {
  ReplayResult res;
  KoszulMF cur = script.start;
  for (std::size_t n = 0; n < script.steps.size(); ++n) {
    const ProofStep& st = script.steps[n];
    MultiPoly before = cur.potential();
    auto fail = [&](const std::string& why) {
      res.ok = false;
      res.failed_step = static_cast<int>(n);
      res.diagnostic = "step " + std::to_string(n + 1) + " (" + describe(st) + "): " + why;
      res.final = cur;
      return res;
    };
    try {
      cur = std::visit(Overloaded{
                           [&](const step::RowOp& o) { return row_op(cur, o.i, o.j, o.c); },
                           [&](const step::Twist& o) { return twist(cur, o.i, o.j, o.k); },
                           [&](const step::TwistB& o) { return twist_b(cur, o.i, o.j, o.k); },
                           [&](const step::Swap& o) { return swap_row(cur, o.row); },
                           [&](const step::Exclude& o) {
                             if (before.contains(o.var))
                               throw std::invalid_argument(var_name(o.var) + " occurs in the potential");
                             return exclude_variable(cur, o.row, o.var);
                           },
                           [&](const step::Permute& o) { return permute_rows(cur, o.perm); },
                           [&](const step::Quotient& o) { return quotient(cur, o.bindings); },
                       },
                       st);
    } catch (const std::invalid_argument& e) {
      return fail(e.what());
    }
    if (!std::holds_alternative<step::Quotient>(st) && cur.potential() != before)
      return fail("potential changed to " + cur.potential().to_string());
    if (auto e = check_degrees(cur); !e.empty()) return fail(e);
  }
  res.final = cur;
  if (!(cur == script.target)) {
    res.failed_step = static_cast<int>(script.steps.size());
    res.diagnostic = "final factorization\n" + cur.to_string() + "\ndiffers from target\n" + script.target.to_string();
    return res;
  }
  res.ok = true;
  return res;
}

ProofScript first_isomorphism_script() {
  // Bubble on an arc: the singular pair with the edge x1 glued back.
  ProofScript s;
  s.name = "isom1";
  s.start = singular_factorization(2, 1, 5, 3);
  s.steps = {
      step::Quotient{{{x_var(5), X(1)}}},
      step::RowOp{0, 1, X(1)},
      step::Swap{1},
      step::Exclude{1, x_var(1)},
  };
  s.target = arc_factorization(3, 2);
  s.target.z2_shift = 1;
  return s;
}

ProofScript third_isomorphism_script() {
  ProofScript s;
  s.name = "isom3";
  s.start = tensor(singular_factorization(1, 5, 6, 4), singular_factorization(3, 6, 5, 2));
  s.steps = {
      step::Swap{1},
      step::Exclude{1, x_var(6)},
      step::Swap{2},
      step::Exclude{2, x_var(5)},
  };
  s.target = tensor(arc_factorization(2, 1), arc_factorization(4, 3));
  return s;
}

ProofScript fourth_isomorphism_script() {
  ProofScript s;
  s.name = "isom4";
  s.start = tensor(tensor(singular_factorization(1, 2, 8, 7), singular_factorization(8, 3, 6, 9)),
                   singular_factorization(7, 9, 5, 4));
  MultiPoly k = R(1, 2) * H() - X(1) - X(2) - X(4) - X(5) + X(3) - X(6);
  MultiPoly k2 = R(-3, 2) * H() + X(1) + X(2) + 2 * X(4) + 2 * X(5) - X(3) + X(6);
  s.steps = {
      step::Swap{1},
      step::Exclude{1, x_var(8)},
      step::Swap{2},
      step::Exclude{2, x_var(9)},
      step::Exclude{1, x_var(7)},
      step::RowOp{1, 0, R(-1)},
      step::Twist{0, 1, k},
      step::RowOp{1, 2, X(3) - X(6)},
      step::TwistB{1, 2, R(-1, 3)},
      step::RowOp{1, 2, -(X(3) - X(6) - X(4) - X(5))},
      step::RowOp{1, 0, R(1)},
      step::Twist{0, 1, k2},
      step::Permute{{1, 0, 2}},
  };
  s.target = tensor(arc_factorization(6, 3), singular_factorization(1, 2, 4, 5));
  return s;
}

namespace {

MultiPoly shared_first_a() { return pi_bar(X(4), X(1)) - pi_bar(X(2), X(1)) + pi_bar(X(3), X(1)); }
MultiPoly second_row_linear() { return 3 * H() - 2 * X(1) - 2 * X(2) - X(3) - X(4); }

}  // namespace

ProofScript gamma0_form_script() {
  ProofScript s;
  s.name = "gamma0_form";
  s.start = gamma0();
  MultiPoly k = X(1) + X(2) + X(3) - R(3, 2) * H();
  s.steps = {step::RowOp{1, 0, R(-1)}, step::Twist{0, 1, -k}};
  s.target.rows = {{shared_first_a(), X(1) + X(2) - X(3) - X(4), 0},
                   {(X(4) - X(2)) * second_row_linear(), X(2) - X(3), 0}};
  return s;
}

ProofScript gamma1_form_script() {
  ProofScript s;
  s.name = "gamma1_form";
  s.start = gamma1();
  s.steps = {step::RowOp{0, 1, X(2)}, step::Twist{0, 1, R(2)}};
  s.target.rows = {{shared_first_a(), X(1) + X(2) - X(3) - X(4), 0},
                   {second_row_linear(), (X(4) - X(2)) * (X(2) - X(3)), -1}};
  return s;
}

std::vector<ProofScript> builtin_scripts() {
  return {first_isomorphism_script(), third_isomorphism_script(), fourth_isomorphism_script(), gamma0_form_script(),
          gamma1_form_script()};
}

CheckOutcome second_isomorphism_check() {
  KoszulMF digon = tensor(singular_factorization(1, 2, 5, 6), singular_factorization(5, 6, 3, 4));
  KoszulMF target = singular_factorization(1, 2, 3, 4);
  std::vector<std::map<VarId, MultiPoly>> closures = {{{x_var(4), X(1)}, {x_var(3), X(2)}},
                                                      {{x_var(3), X(1)}, {x_var(4), X(2)}}};
  std::ostringstream os;
  bool ok = true;
  for (const auto& c : closures) {
    auto hd = koszul_homology(quotient(digon, c));
    auto ht = koszul_homology(quotient(target, c));
    auto rd = hd.graded_rank(), rt = ht.graded_rank();
    if (!rd || !rt) {
      ok = false;
      os << "graded rank not computable; ";
      continue;
    }
    LaurentPoly want = LaurentPoly::q_plus_q_inv() * *rt;
    if (*rd != want || hd.hom_degree != ht.hom_degree) {
      ok = false;
      os << "digon " << rd->to_string() << " (H^" << hd.hom_degree << ") vs (q + q^-1)(" << rt->to_string()
         << ") (H^" << ht.hom_degree << "); ";
    }
  }
  return {ok, os.str()};
}

CheckOutcome compose_check(const MFMorphism& l0, const MFMorphism& l1) {
  PolyMatrix want = PolyMatrix::scalar(2, X(4) - X(2));
  std::ostringstream os;
  struct Prod {
    const char* name;
    PolyMatrix value;
  };
  std::vector<Prod> prods = {{"U0V0", l0.m0 * l1.m0},
                             {"U1V1", l0.m1 * l1.m1},
                             {"V0U0", l1.m0 * l0.m0},
                             {"V1U1", l1.m1 * l0.m1}};
  bool ok = true;
  for (const auto& p : prods)
    if (p.value != want) {
      ok = false;
      os << p.name << " = " << p.value.to_string() << "; ";
    }
  if (l0.degree != 1 || l1.degree != 1) {
    ok = false;
    os << "declared degrees are not 1; ";
  }
  return {ok, os.str()};
}

CheckOutcome lambda_commutation_check(const MFMorphism& l0, const MFMorphism& l1) {
  auto c0 = check_morphism(gamma0(), gamma1(), l0);
  auto c1 = check_morphism(gamma1(), gamma0(), l1);
  std::string d;
  if (!c0.ok()) d += "Lambda0: " + c0.detail + "; ";
  if (!c1.ok()) d += "Lambda1: " + c1.detail + "; ";
  return {c0.ok() && c1.ok(), d};
}

CheckOutcome two_periodic_check() {
  std::vector<std::pair<std::string, KoszulMF>> mfs = {
      {"arc(1,2)", arc_factorization(1, 2)}, {"circle(1)", loop_factorization(1)},
      {"C(Gamma0)", gamma0()},               {"C(Gamma1)", gamma1()},
      {"digon", tensor(singular_factorization(1, 2, 5, 6), singular_factorization(5, 6, 3, 4))},
  };
  std::string d;
  for (const auto& [name, f] : mfs)
    if (auto e = check_two_periodic(f); !e.empty()) d += name + ": " + e + "; ";
  if (gamma0().potential() != gamma1().potential()) d += "potentials of C(Gamma0) and C(Gamma1) differ; ";
  return {d.empty(), d};
}

CheckOutcome flip_maps_check() {
  // Second rows of the two forms, each with the shift it carries there.
  KoszulMF r0{{{(X(4) - X(2)) * second_row_linear(), X(2) - X(3), 0}}, 0, 0};
  KoszulMF r1{{{second_row_linear(), (X(4) - X(2)) * (X(2) - X(3)), -1}}, 0, 0};
  MFMorphism psi{PolyMatrix::scalar(1, X(4) - X(2)), PolyMatrix::scalar(1, 1), 1};
  MFMorphism psi_back{PolyMatrix::scalar(1, 1), PolyMatrix::scalar(1, X(4) - X(2)), 1};
  auto a = check_morphism(r0, r1, psi);
  auto b = check_morphism(r1, r0, psi_back);
  std::string d;
  if (!a.ok()) d += "psi: " + a.detail + "; ";
  if (!b.ok()) d += "psi': " + b.detail + "; ";
  PolyMatrix want = PolyMatrix::scalar(1, X(4) - X(2));
  if (psi.m0 * psi_back.m0 != want || psi.m1 * psi_back.m1 != want) d += "psi psi' != (x4 - x2) id; ";
  return {d.empty(), d};
}

namespace {

const std::map<VarId, MultiPoly>& closing() {
  static const std::map<VarId, MultiPoly> c{{x_var(4), X(1)}, {x_var(3), X(2)}};
  return c;
}

// Element of Q[a,h][x1, y] reduced by x1^2 = h x1 + a and y^2 = h y + a, with
// y = x0, read in the basis x1^i y^j -> word with bit0 = i, bit1 = j.
AElem to_tensor_basis(const MultiPoly& p, int arity) {
  QuotientPresentation rel;
  MultiPoly y = MultiPoly::x(0);
  rel.ideal = {X(1) * X(1) - H() * X(1) - MultiPoly::a(), y * y - H() * y - MultiPoly::a()};
  rel.variables = {x_var(0), x_var(1)};
  MultiPoly r = rel.reduce(p);
  AElem out(arity);
  for (const auto& [m, c] : r.terms()) {
    Word w = 0;
    if (m.exponent(x_var(1))) w |= 1u;
    if (m.exponent(x_var(0))) w |= 2u;
    for (std::size_t v = 2; v < m.width(); ++v)
      if (m.exponent(v) && v != x_var(0) && v != x_var(1))
        throw std::logic_error("to_tensor_basis: stray variable " + var_name(v));
    if (w >= (Word(1) << arity)) throw std::logic_error("to_tensor_basis: term outside the basis");
    out.add(w, MultiPoly::term(m.without(x_var(0)).without(x_var(1)), c));
  }
  return out;
}

}  // namespace

InducedMaps induced_maps(const MFMorphism& l0, const MFMorphism& l1) {
  KoszulMF g0 = quotient(gamma0(), closing());
  KoszulMF g1 = quotient(gamma1(), closing());
  auto h0 = koszul_homology(g0);
  auto h1 = koszul_homology(g1);
  if (h0.hom_degree != 0 || h1.hom_degree != 0) throw std::logic_error("induced_maps: homology not in degree 0");
  // Both homologies sit on e_{12}, index 1 of M0; the e_0 entries of its
  // column must vanish for the image to be a cycle.
  PolyMatrix u = l0.m0.substituted(closing()), v = l1.m0.substituted(closing());
  if (!u.at(0, 1).is_zero() || !v.at(0, 1).is_zero())
    throw std::logic_error("induced_maps: image of the homology generator leaves e_12");
  MultiPoly u33 = u.at(1, 1), v33 = v.at(1, 1);
  MultiPoly y_of_x2 = H() - MultiPoly::x(0);  // x2 = h - y

  InducedMaps out;
  for (Word w = 0; w < 4; ++w) {
    MultiPoly p = 1;
    if (w & 1u) p *= X(1);
    if (w & 2u) p *= H() - X(2);
    MultiPoly img = h1.reduce(u33 * p);  // polynomial in x1 of degree <= 1
    out.lambda0_images.push_back(to_tensor_basis(img, 1));
  }
  for (Word w = 0; w < 2; ++w) {
    MultiPoly p = w ? X(1) : MultiPoly(1);
    MultiPoly img = h0.reduce(v33 * p);
    img = substitute(img, {{x_var(2), y_of_x2}});
    out.lambda1_images.push_back(to_tensor_basis(img, 2));
  }
  return out;
}

CheckOutcome induced_map_check(const MFMorphism& l0, const MFMorphism& l1) {
  InducedMaps im;
  try {
    im = induced_maps(l0, l1);
  } catch (const std::exception& e) {
    return {false, e.what()};
  }
  std::ostringstream os;
  bool ok = true;
  for (Word w = 0; w < 4; ++w) {
    AElem want = m(AElem::basis(2, w), 0);
    if (im.lambda0_images[w] != want) {
      ok = false;
      os << "Lambda0* on word " << w << " gives " << im.lambda0_images[w].to_string() << ", m gives "
         << want.to_string() << "; ";
    }
  }
  for (Word w = 0; w < 2; ++w) {
    AElem want = delta(AElem::basis(1, w), 0);
    if (im.lambda1_images[w] != want) {
      ok = false;
      os << "Lambda1* on word " << w << " gives " << im.lambda1_images[w].to_string() << ", Delta gives "
         << want.to_string() << "; ";
    }
  }
  return {ok, os.str()};
}

}  // namespace krsl2
