#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "algebroid/line_extension.hpp"
#include "algebroid/poisson_jacobi.hpp"
#include "algebroid/structure_file.hpp"
#include "algebroid/suite.hpp"

using namespace algebroid;

namespace {

struct Options {
  std::string input;
  std::vector<std::string> checks;
  bool json = false;
  std::uint64_t seed = 0;
  int max_degree = 2;
  std::string output;
  std::string argument;  // defect name, dual kind, line variant or identity name
};

struct Loaded {
  StructureFile file;
  std::string digest;
};

Loaded load(const Options& o) {
  if (o.input.empty()) throw std::invalid_argument("--input is required");
  std::ifstream in(o.input);
  if (!in) throw std::runtime_error("cannot open " + o.input);
  std::ostringstream ss;
  ss << in.rdbuf();
  return {parse_structure(ss.str()), sha256_hex(ss.str())};
}

// Report-visible chart of a structure: base plus t when present.
Chart chart_of(const StructureFile& f) { return f.chart; }

using DefectFn = std::function<DefectReport(const StructureFile&)>;

DefectReport single(const std::string& name, DefectTensor t) {
  DefectReport r;
  r.add(name, std::move(t));
  return r;
}

const Matrix& need_h(const StructureFile& f) {
  if (!f.h) throw std::invalid_argument("the file gives no h");
  return *f.h;
}

const Multisection& need_pi(const StructureFile& f) {
  if (!f.pi) throw std::invalid_argument("the file gives no pi");
  return *f.pi;
}

// Named defects. Each entry lists the kinds it applies to.
struct DefectEntry {
  std::vector<StructureKind> kinds;
  std::function<bool(const StructureFile&)> applies_by_default;
  DefectFn run;
};

const std::map<std::string, DefectEntry>& defects() {
  using K = StructureKind;
  auto always = [](const StructureFile&) { return true; };
  auto with_pi = [](const StructureFile& f) { return f.pi.has_value(); };
  auto with_h = [](const StructureFile& f) { return f.h.has_value(); };
  auto with_g = [](const StructureFile& f) { return f.g.has_value(); };
  auto with_g_theta = [](const StructureFile& f) { return f.g.has_value() && f.theta.has_value(); };
  static const std::map<std::string, DefectEntry> d{
      {"lie-axioms", {{K::Lie, K::Jacobi}, always, [](const StructureFile& f) { return check_lie_axioms(lie_of(f)); }}},
      {"jacobi-axioms",
       {{K::Jacobi}, always, [](const StructureFile& f) { return check_jacobi_axioms(jacobi_of(f)); }}},
      {"lsa-axioms", {{K::Lsa, K::Jlsa}, always, [](const StructureFile& f) { return check_lsa_axioms(lsa_of(f)); }}},
      {"cocycle",
       {{K::Jlsa}, always,
        [](const StructureFile& f) { return cocycle_symmetry_report(lsa_of(f), *f.phi0); }}},
      {"poisson",
       {{K::Lie}, with_pi,
        [](const StructureFile& f) {
          return single("poisson", DefectTensor::from(poisson_defect(lie_of(f), need_pi(f))));
        }}},
      {"jacobi",
       {{K::Jacobi}, with_pi,
        [](const StructureFile& f) {
          return single("jacobi", DefectTensor::from(jacobi_defect(jacobi_of(f), need_pi(f))));
        }}},
      {"kv",
       {{K::Lsa}, with_h,
        [](const StructureFile& f) { return single("kv", DefectTensor::from(kv_bracket(lsa_of(f), need_h(f)))); }}},
      {"jkv",
       {{K::Jlsa}, with_h,
        [](const StructureFile& f) { return single("jkv", DefectTensor::from(jkv_bracket(jlsa_of(f), need_h(f)))); }}},
      {"delta-g",
       {{K::Lsa}, with_g, [](const StructureFile& f) { return delta_g_check(lsa_of(f), *f.g); }}},
      {"codazzi",
       {{K::Manifold}, with_g,
        [](const StructureFile& f) { return single("codazzi", codazzi_defect(patch_of(f), *f.g)); }}},
      {"kv-manifold",
       {{K::Manifold}, with_h,
        [](const StructureFile& f) { return single("kv", kv_manifold_defect(patch_of(f), need_h(f))); }}},
      {"semi-weyl",
       {{K::Manifold}, with_g_theta,
        [](const StructureFile& f) {
          if (!f.g || !f.theta) throw std::invalid_argument("semi-weyl needs g and theta");
          return single("semi_weyl", semi_weyl_defect(patch_of(f), *f.g, *f.theta));
        }}},
      {"jkv-manifold",
       {{K::JkvManifold}, always,
        [](const StructureFile& f) { return jkv_defects(patch_of(f), JKVPair{*f.h, *f.e}); }}},
      {"lch",
       {{K::JkvManifold}, always,
        [](const StructureFile& f) { return lch_report(patch_of(f), JKVPair{*f.h, *f.e}); }}},
  };
  return d;
}

bool applies(const DefectEntry& e, const StructureFile& f) {
  return std::find(e.kinds.begin(), e.kinds.end(), f.kind) != e.kinds.end();
}

CheckResult run_defect(const std::string& name, const StructureFile& f) {
  const auto it = defects().find(name);
  if (it == defects().end()) throw std::invalid_argument("unknown defect '" + name + "'");
  if (!applies(it->second, f)) throw std::invalid_argument(name + " does not apply to a " + kind_name(f.kind) + " file");
  CheckResult r;
  r.name = name;
  try {
    r.require_vanishing(it->second.run(f), chart_of(f));
  } catch (const StructureError& e) {
    // A patch whose connection is not flat and torsion-free.
    r.require_vanishing(e.report(), chart_of(f));
    r.expect(false, e.what());
  }
  return r;
}

StructureFile lie_file(const LieAlgebroid& l, StructureKind kind = StructureKind::Lie) {
  StructureFile f;
  f.kind = kind;
  f.chart = l.chart();
  f.rank = l.rank();
  f.anchor = l.bundle().anchor_matrix();
  f.table = l.table();
  return f;
}

StructureFile lsa_file(const LeftSymmetricAlgebroid& s, StructureKind kind = StructureKind::Lsa) {
  StructureFile f;
  f.kind = kind;
  f.chart = s.chart();
  f.rank = s.rank();
  f.anchor = s.bundle().anchor_matrix();
  f.table = s.table();
  return f;
}

void write_output(const Options& o, const StructureFile& f) {
  if (o.output.empty()) return;
  std::ofstream out(o.output);
  if (!out) throw std::runtime_error("cannot write " + o.output);
  out << emit(f);
}

ReportDocument cmd_check(const Options& o) {
  const Loaded in = load(o);
  ReportDocument doc;
  doc.input_digest = in.digest;
  for (const auto& [name, e] : defects()) {
    const bool wanted = o.checks.empty() ? applies(e, in.file) && e.applies_by_default(in.file)
                                         : std::find(o.checks.begin(), o.checks.end(), name) != o.checks.end();
    if (wanted) doc.checks.push_back(run_defect(name, in.file));
  }
  return doc;
}

ReportDocument cmd_defect(const Options& o) {
  const Loaded in = load(o);
  ReportDocument doc;
  doc.input_digest = in.digest;
  doc.checks.push_back(run_defect(o.argument, in.file));
  return doc;
}

ReportDocument cmd_dualize(const Options& o) {
  const Loaded in = load(o);
  const StructureFile& f = in.file;
  ReportDocument doc;
  doc.input_digest = in.digest;
  CheckResult r;
  r.name = "dual-" + o.argument;
  StructureFile out;
  if (o.argument == "lie") {
    const LieAlgebroid d = build_dual_lie(lie_of(f), need_pi(f));
    r.require_vanishing(check_lie_axioms(d), f.chart);
    out = lie_file(d);
  } else if (o.argument == "jacobi") {
    const JacobiAlgebroid d = build_dual_jacobi(jacobi_of(f), need_pi(f));
    r.require_vanishing(check_jacobi_axioms(d), f.chart);
    out = lie_file(d.lie(), StructureKind::Jacobi);
    out.phi0 = d.phi0();
  } else if (o.argument == "lsa") {
    const LeftSymmetricAlgebroid d = build_dual_lsa(lsa_of(f), need_h(f));
    r.require_vanishing(check_lsa_axioms(d), f.chart);
    out = lsa_file(d);
  } else if (o.argument == "jlsa") {
    const JacobiLSA j = jlsa_of(f);
    const Matrix h = f.kind == StructureKind::JkvManifold ? pack_H(JKVPair{*f.h, *f.e}) : need_h(f);
    r.require_vanishing(dual_jlsa_check(j, h), j.lsa().chart());
    const DualJLSA d = build_dual_jlsa(j, h);
    out = lsa_file(d.lsa, StructureKind::Jlsa);
    out.phi0 = d.phi0;
  } else {
    throw std::invalid_argument("dualize expects lie, jacobi, lsa or jlsa");
  }
  doc.checks.push_back(std::move(r));
  write_output(o, out);
  return doc;
}

LineVariant variant(const std::string& s) {
  if (s == "hat") return LineVariant::Hat;
  if (s == "bar") return LineVariant::Bar;
  throw std::invalid_argument("extend-line expects hat or bar");
}

ReportDocument cmd_extend(const Options& o) {
  const Loaded in = load(o);
  const StructureFile& f = in.file;
  const LineVariant v = variant(o.argument);
  ReportDocument doc;
  doc.input_digest = in.digest;
  CheckResult r;
  r.name = "extend-line-" + o.argument;
  StructureFile out;
  if (f.kind == StructureKind::Jacobi) {
    const LieAlgebroid e = extend_lie(jacobi_of(f), v);
    r.require_vanishing(check_lie_axioms(e), e.chart());
    out = lie_file(e);
  } else if (f.kind == StructureKind::Jlsa || f.is_manifold()) {
    const LeftSymmetricAlgebroid e = extend_lsa(jlsa_of(f), v);
    r.require_vanishing(check_lsa_axioms(e), e.chart());
    out = lsa_file(e);
  } else {
    throw std::invalid_argument("extend-line needs a jacobi, jlsa or manifold file");
  }
  doc.checks.push_back(std::move(r));
  write_output(o, out);
  return doc;
}

ReportDocument cmd_poissonize(const Options& o) {
  const Loaded in = load(o);
  const Poissonization p = poissonize(jacobi_of(in.file), need_pi(in.file));
  ReportDocument doc;
  doc.input_digest = in.digest;
  CheckResult r;
  r.name = "poissonize";
  r.require_vanishing(p.report, in.file.chart.with_line());
  doc.checks.push_back(std::move(r));
  return doc;
}

ReportDocument cmd_kvize(const Options& o) {
  const Loaded in = load(o);
  const StructureFile& f = in.file;
  const Matrix h = f.kind == StructureKind::JkvManifold ? pack_H(JKVPair{*f.h, *f.e}) : need_h(f);
  const KVization k = kv_ize(jlsa_of(f), h);
  ReportDocument doc;
  doc.input_digest = in.digest;
  CheckResult r;
  r.name = "kvize";
  r.require_vanishing(k.report, f.chart.with_line());
  doc.checks.push_back(std::move(r));
  return doc;
}

SuiteOptions suite_options(const Options& o) {
  SuiteOptions s;
  s.seed = o.seed;
  s.max_degree = o.max_degree;
  return s;
}

ReportDocument cmd_identity(const Options& o) {
  ReportDocument doc;
  doc.input_digest = sha256_hex("identity " + o.argument + " seed=" + std::to_string(o.seed) +
                                " max-degree=" + std::to_string(o.max_degree));
  doc.checks.push_back(verify_identity(o.argument, suite_options(o)));
  return doc;
}

ReportDocument cmd_report(const Options& o) { return run_suite(suite_options(o)); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for Lie, left-symmetric and Jacobi algebroid structures"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Emit the report as JSON");
  app.add_option("--seed", o.seed, "Seed for randomized identity families");
  app.add_option("--max-degree", o.max_degree, "Degree bound of random polynomials")->check(CLI::Range(0, 6));

  std::function<ReportDocument(const Options&)> action;
  auto add = [&](const std::string& name, const std::string& help, auto fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--input", o.input, "Structure file");
    sub->add_option("--check", o.checks, "Comma-separated defect names")->delimiter(',');
    sub->add_option("--output", o.output, "Write the constructed structure here");
    sub->add_flag("--json", o.json, "Emit the report as JSON");
    sub->add_option("--seed", o.seed, "Seed for randomized identity families");
    sub->add_option("--max-degree", o.max_degree, "Degree bound of random polynomials")->check(CLI::Range(0, 6));
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };
  add("check", "Run every defect that applies to the input", cmd_check);
  add("defect", "Run one named defect", cmd_defect)->add_option("name", o.argument)->required();
  add("dualize", "Build and validate a dual structure", cmd_dualize)
      ->add_option("kind", o.argument)
      ->required()
      ->check(CLI::IsMember({"lie", "jacobi", "lsa", "jlsa"}));
  add("extend-line", "Build the hat or bar line extension", cmd_extend)
      ->add_option("variant", o.argument)
      ->required()
      ->check(CLI::IsMember({"hat", "bar"}));
  add("poissonize", "Poissonization of a Jacobi bivector", cmd_poissonize);
  add("kvize", "Koszul-Vinbergization of a symmetric tensor", cmd_kvize);
  add("verify-identity", "Randomized instances of one identity", cmd_identity)
      ->add_option("name", o.argument)
      ->required()
      ->check(CLI::IsMember(identity_names()));
  add("report", "Frozen fixtures plus every randomized family", cmd_report);

  CLI11_PARSE(app, argc, argv);
  try {
    const auto start = std::chrono::steady_clock::now();
    const ReportDocument doc = action(o);
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    std::cout << (o.json ? render_json(doc) : render_text(doc));
    std::cerr << "elapsed: " << took.count() << " s\n";
    return doc.passed() ? 0 : 1;
  } catch (const ParseError& e) {
    std::cerr << o.input << ":" << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 2;
}
