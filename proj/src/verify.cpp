#include "krsl2/verify.hpp"

#include <chrono>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "krsl2/cube.hpp"
#include "krsl2/homology.hpp"
#include "krsl2/proofs.hpp"
#include "krsl2/skein.hpp"
#include "krsl2/webalg.hpp"

namespace krsl2 {

MFMorphism corrupted_lambda0() {
  MFMorphism m = lambda0();
  m.m0.at(1, 0) += MultiPoly::x(1);
  return m;
}

namespace {

CheckResult from_outcome(const std::string& name, const CheckOutcome& o) { return {name, o.ok, o.detail, 0}; }

CheckResult replay_check(const ProofScript& s) {
  auto r = replay_proof(s);
  return {s.name, r.ok, r.diagnostic, 0};
}

ProofScript script_named(const std::string& name) {
  for (auto& s : builtin_scripts())
    if (s.name == name) return s;
  throw std::logic_error("no script " + name);
}

struct Entry {
  std::string name;
  bool mf;
  std::function<CheckResult(const VerifyOptions&)> run;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = [] {
    auto l0 = [](const VerifyOptions& o) { return o.corrupt_u0 ? corrupted_lambda0() : lambda0(); };
    std::vector<Entry> e;
    e.push_back({"compose_check", true,
                 [l0](const VerifyOptions& o) { return from_outcome("compose_check", compose_check(l0(o), lambda1())); }});
    e.push_back({"lambda_commutation", true, [l0](const VerifyOptions& o) {
                   return from_outcome("lambda_commutation", lambda_commutation_check(l0(o), lambda1()));
                 }});
    e.push_back({"two_periodic", true,
                 [](const VerifyOptions&) { return from_outcome("two_periodic", two_periodic_check()); }});
    e.push_back({"flip_maps", true, [](const VerifyOptions&) { return from_outcome("flip_maps", flip_maps_check()); }});
    for (const char* n : {"isom1", "isom3", "isom4", "gamma0_form", "gamma1_form"}) {
      std::string name = n;
      e.push_back({name, true, [name](const VerifyOptions&) { return replay_check(script_named(name)); }});
    }
    e.push_back({"isom2", true,
                 [](const VerifyOptions&) { return from_outcome("isom2", second_isomorphism_check()); }});
    e.push_back({"induced_maps", true, [l0](const VerifyOptions& o) {
                   return from_outcome("induced_maps", induced_map_check(l0(o), lambda1()));
                 }});
    e.push_back({"closed_webs", true, [](const VerifyOptions& o) { return check_closed_webs(o.jobs); }});
    e.push_back({"euler_vs_bracket", false, [](const VerifyOptions& o) { return check_euler(o.jobs); }});
    e.push_back({"reidemeister", false, [](const VerifyOptions& o) { return check_reidemeister(o.jobs); }});
    e.push_back({"distinct_roots", false, [](const VerifyOptions& o) { return check_distinct_roots(o.jobs); }});
    e.push_back({"double_root", false, [](const VerifyOptions& o) { return check_double_root(o.jobs); }});
    e.push_back({"degree_formula", false, [](const VerifyOptions& o) { return check_degree_formula(o.jobs); }});
    return e;
  }();
  return entries;
}

}  // namespace

std::vector<std::string> check_names(bool mf_only) {
  std::vector<std::string> out;
  for (const auto& e : registry())
    if (e.mf || !mf_only) out.push_back(e.name);
  return out;
}

std::vector<CheckResult> run_checks(const VerifyOptions& opts) {
  std::set<std::string> known;
  for (const auto& n : check_names(opts.mf_only)) known.insert(n);
  for (const auto& n : opts.only)
    if (!known.count(n)) throw std::invalid_argument("unknown check: " + n);
  std::set<std::string> only(opts.only.begin(), opts.only.end());
  std::vector<CheckResult> out;
  for (const auto& e : registry()) {
    if (opts.mf_only && !e.mf) continue;
    if (!only.empty() && !only.count(e.name)) continue;
    auto t0 = std::chrono::steady_clock::now();
    CheckResult r;
    try {
      r = e.run(opts);
    } catch (const std::exception& ex) {
      r = {e.name, false, std::string("exception: ") + ex.what(), 0};
    }
    r.name = e.name;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(r));
  }
  return out;
}

CheckResult check_closed_webs(int jobs) {
  std::ostringstream os;
  int webs = 0;
  for (const auto& [name, d] : corpus()) {
    Cube cube = build_cube(d, jobs);
    for (const auto& v : cube.vertices) {
      ++webs;
      std::string where = name + " vertex " + std::to_string(v.mask);
      QuotientPresentation hp;
      try {
        hp = closed_web_homology(v.web);
      } catch (const std::exception& e) {
        os << where << ": " << e.what() << "; ";
        continue;
      }
      auto rank = hp.graded_rank();
      if (!rank || *rank != web_bracket(v.web))
        os << where << ": graded rank " << (rank ? rank->to_string() : "n/a") << " vs bracket "
           << web_bracket(v.web).to_string() << "; ";
      if (hp.hom_degree != p_parity(v.web))
        os << where << ": homology in degree " << hp.hom_degree << ", parity " << p_parity(v.web) << "; ";
      WebAlgebra alg(v.web);
      for (const auto& rel : alg.relations())
        if (!hp.reduce(rel).is_zero()) {
          os << where << ": relation " << rel << " does not act by zero; ";
          break;
        }
    }
  }
  std::string d = os.str();
  return {"closed_webs", d.empty(), d.empty() ? std::to_string(webs) + " webs" : d, 0};
}

CheckResult check_euler(int jobs) {
  std::ostringstream os;
  for (const auto& [name, d] : corpus()) {
    Cube cube = build_cube(d, jobs);
    GradedComplex c = assemble_complex(cube, jobs);
    if (auto e = check_d_squared(c); !e.empty()) os << name << ": " << e << "; ";
    if (auto e = check_grading(c); !e.empty()) os << name << ": " << e << "; ";
    LaurentPoly chi = euler_characteristic(c), br = link_bracket(d);
    if (chi != br) os << name << ": euler " << chi << " vs bracket " << br << "; ";
    if (euler_characteristic(gauss_reduce(c)) != chi) os << name << ": reduction changed the euler characteristic; ";
  }
  std::string d = os.str();
  return {"euler_vs_bracket", d.empty(), d, 0};
}

CheckResult check_reidemeister(int jobs) {
  std::ostringstream os;
  for (const auto& p : reidemeister_pairs())
    for (const auto& s : preset_specializations()) {
      HomologyTable l = compute_homology(p.left, s, jobs), r = compute_homology(p.right, s, jobs);
      if (!(l == r)) os << p.name << " at " << s.label() << ": " << l.to_tsv() << " vs " << r.to_tsv() << "; ";
    }
  std::string d = os.str();
  return {"reidemeister", d.empty(), d, 0};
}

CheckResult check_distinct_roots(int jobs) {
  std::ostringstream os;
  for (const auto& [name, d] : corpus())
    for (const char* spec : {"distinct1", "distinct2"}) {
      HomologyTable t = compute_homology(d, parse_specialization(spec), jobs);
      long want = 1L << d.component_count();
      if (t.total() != want) os << name << " at " << spec << ": total " << t.total() << ", want " << want << "; ";
    }
  std::string d = os.str();
  return {"distinct_roots", d.empty(), d, 0};
}

CheckResult check_double_root(int jobs) {
  std::ostringstream os;
  for (const auto& [name, d] : corpus()) {
    auto dbl = compute_homology(d, parse_specialization("double"), jobs);
    auto kh = compute_homology(d, parse_specialization("khovanov"), jobs);
    if (dbl.totals != kh.totals) os << name << ": " << dbl.to_tsv() << " vs " << kh.to_tsv() << "; ";
  }
  std::string d = os.str();
  return {"double_root", d.empty(), d, 0};
}

CheckResult check_degree_formula(int jobs) {
  std::ostringstream os;
  for (const auto& [name, d] : std::vector<NamedDiagram>{{"hopf+", hopf_positive()}, {"hopf-", hopf_negative()}})
    for (const char* spec : {"distinct1", "distinct2"}) {
      auto s = parse_specialization(spec);
      auto measured = measure_degree_multiplier(d, s, jobs);
      if (!measured || *measured != kDegreeMultiplier)
        os << name << " at " << spec << ": measured multiplier "
           << (measured ? measured->get_str() : std::string("n/a")) << "; ";
      auto rep = distinct_root_report(d, s, kDegreeMultiplier, jobs);
      if (!rep.ok) os << name << " at " << spec << ": " << rep.diagnostic << "; ";
    }
  for (const auto& [name, d] : corpus()) {
    auto rep = distinct_root_report(d, parse_specialization("distinct1"), kDegreeMultiplier, jobs);
    if (!rep.ok) os << name << ": " << rep.diagnostic << "; ";
  }
  std::string d = os.str();
  return {"degree_formula", d.empty(), d, 0};
}

}  // namespace krsl2
