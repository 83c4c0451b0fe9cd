#include "krsl2/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "krsl2/cube.hpp"
#include "krsl2/homology.hpp"
#include "krsl2/linkweb.hpp"
#include "krsl2/skein.hpp"
#include "krsl2/verify.hpp"

namespace krsl2 {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

LinkDiagram read_input(const std::string& path, std::istream& in) {
  std::string text;
  if (path == "-") {
    std::ostringstream os;
    os << in.rdbuf();
    text = os.str();
  } else {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot open " + path);
    std::ostringstream os;
    os << f.rdbuf();
    text = os.str();
  }
  try {
    return parse_diagram(text);
  } catch (const ParseError& e) {
    throw UsageError(path + ":" + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(path + ": " + e.what());
  }
}

struct HomologyConfig {
  std::string input;
  std::string spec = "khovanov";
  bool all = false;
  bool bigraded = false;
  std::string format = "tsv";
  int jobs = 1;
  bool dump_complex = false;
};

int cmd_homology(const HomologyConfig& cfg, std::istream& in, std::ostream& out) {
  LinkDiagram d = read_input(cfg.input, in);
  if (cfg.dump_complex) {
    out << complex_to_json(assemble_complex(build_cube(d, cfg.jobs), cfg.jobs)) << "\n";
    return kExitOk;
  }
  std::vector<Specialization> specs;
  if (cfg.all) {
    specs = preset_specializations();
  } else {
    try {
      specs.push_back(parse_specialization(cfg.spec));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (cfg.bigraded)
    for (const auto& s : specs)
      if (!s.graded()) throw UsageError("--bigraded needs the grading-preserving point (0,0), not " + s.label());

  Cube cube = build_cube(d, cfg.jobs);
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& s : specs) {
    HomologyTable t = homology_dims(assemble_specialized(cube, s.a0, s.h0, cfg.jobs));
    if (cfg.format == "json") {
      nlohmann::json j = nlohmann::json::parse(t.to_json());
      j["spec"] = s.label();
      j["a"] = s.a0.get_str();
      j["h"] = s.h0.get_str();
      arr.push_back(j);
      continue;
    }
    if (specs.size() > 1) out << "# " << s.label() << " (a,h) = (" << s.a0.get_str() << "," << s.h0.get_str() << ")\n";
    out << (cfg.format == "text" ? t.to_text() : t.to_tsv());
  }
  if (cfg.format == "json") out << (cfg.all ? arr.dump() : arr[0].dump()) << "\n";
  return kExitOk;
}

int cmd_verify(VerifyOptions opts, const std::string& filter, std::ostream& out, std::ostream& err) {
  std::stringstream ss(filter);
  std::string name;
  while (std::getline(ss, name, ','))
    if (!name.empty()) opts.only.push_back(name);
  std::vector<CheckResult> results;
  try {
    results = run_checks(opts);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::string first_fail;
  for (const auto& r : results) {
    if (r.ok) {
      out << "PASS " << r.name << "\n";
    } else {
      out << "FAIL " << r.name << ": " << r.detail << "\n";
      if (first_fail.empty()) first_fail = r.name;
    }
  }
  if (!first_fail.empty()) {
    err << "first failing check: " << first_fail << "\n";
    return kExitFail;
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Universal sl(2) link homology and Koszul factorization checks", "krsl2"};
  app.require_subcommand(1);

  std::string bracket_input;
  int bracket_jobs = 1;
  auto* bracket = app.add_subcommand("bracket", "print the bracket polynomial of a diagram");
  bracket->add_option("input", bracket_input, "PD-code file, or - for stdin")->required();
  bracket->add_option("--jobs", bracket_jobs, "worker threads")->check(CLI::Range(1, 64));

  HomologyConfig hc;
  auto* homology = app.add_subcommand("homology", "homology dimensions at a specialization of (a,h)");
  homology->add_option("input", hc.input, "PD-code file, or - for stdin")->required();
  auto* spec_opt = homology->add_option("--spec", hc.spec, "khovanov, distinct1, distinct2, double, or a,h");
  homology->add_flag("--all", hc.all, "one table per preset")->excludes(spec_opt);
  homology->add_flag("--bigraded", hc.bigraded, "require the (i,j)-bigraded table");
  homology->add_option("--format", hc.format, "text, json or tsv")
      ->check(CLI::IsMember({"text", "json", "tsv"}));
  homology->add_option("--jobs", hc.jobs, "worker threads")->check(CLI::Range(1, 64));
  homology->add_flag("--dump-complex", hc.dump_complex, "print the complex over Q[a,h] as JSON");

  VerifyOptions vo;
  std::string verify_filter;
  auto* verify = app.add_subcommand("verify", "run the full verification suite");
  verify->add_option("--filter", verify_filter, "comma-separated check names");
  verify->add_option("--jobs", vo.jobs, "worker threads")->check(CLI::Range(1, 64));
  verify->add_flag("--inject-u0-fault", vo.corrupt_u0)->group("");

  VerifyOptions mo;
  mo.mf_only = true;
  std::string mf_filter;
  auto* mfv = app.add_subcommand("mf-verify", "run the factorization replays and identities");
  mfv->add_option("--filter", mf_filter, "comma-separated check names");
  mfv->add_flag("--inject-u0-fault", mo.corrupt_u0)->group("");

  auto* list = app.add_subcommand("list-checks", "print the names of all checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, x;
    app.exit(e, o, x);
    err << x.str() << o.str();
    return kExitUsage;
  }

  try {
    if (*bracket) {
      out << link_bracket(read_input(bracket_input, in)).to_string() << "\n";
      return kExitOk;
    }
    if (*homology) return cmd_homology(hc, in, out);
    if (*verify) return cmd_verify(vo, verify_filter, out, err);
    if (*mfv) return cmd_verify(mo, mf_filter, out, err);
    if (*list) {
      for (const auto& n : check_names()) out << n << "\n";
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}

}  // namespace krsl2
