// One PASS/FAIL line per acceptance criterion, each timed against its budget.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "algebroid/fixtures.hpp"
#include "algebroid/line_extension.hpp"
#include "algebroid/suite.hpp"

using namespace algebroid;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;

  void expect(bool cond, const std::string& note) {
    if (!cond) {
      ok = false;
      notes.push_back(note);
    }
  }
  void absorb(const CheckResult& r) {
    if (r.passed) return;
    ok = false;
    notes.push_back(r.name + " failed");
    for (std::size_t i = 0; i < r.lines.size() && i < 5; ++i) notes.push_back("  " + r.lines[i]);
  }
};

SuiteOptions seed0() {
  SuiteOptions o;
  o.seed = 0;
  return o;
}

Outcome identities(const std::vector<std::string>& names, int min_instances) {
  Outcome o;
  for (const auto& n : names) {
    const CheckResult r = verify_identity(n, seed0());
    o.absorb(r);
    o.expect(r.instances >= min_instances, n + ": only " + std::to_string(r.instances) + " instances");
  }
  return o;
}

Outcome sign_pinning() { return identities({"half-pi-pi"}, 40); }
Outcome cocycle() { return identities({"cocyc"}, 60); }
Outcome twisted() { return identities({"twisted-sharp"}, 40); }
Outcome scaling() { return identities({"poissonize-scaling", "kvize-scaling"}, 20); }
Outcome complexes() { return identities({"d-squared", "delta-squared"}, 10); }

Outcome duality_positive() {
  using namespace fixtures;
  Outcome o;
  const Matrix constant{std::vector<std::vector<Scalar>>{{2, 1}, {1, 3}}};
  o.expect(check_lsa_axioms(build_dual_lsa(flat_lsa(2), constant)).passed(), "constant h on flat TM R^2");
  const Scalar x = Scalar::variable(0);
  const Matrix poly = Matrix::diagonal({x * x * x - Scalar(2) * x + Scalar(1)});
  o.expect(check_lsa_axioms(build_dual_lsa(flat_lsa(1), poly)).passed(), "polynomial h on flat TM R");
  const JacobiLSA jl = AffinePatch::flat(chart(1)).bar_nabla_jlsa();
  const DefectReport dual = dual_jlsa_check(jl, pack_H(jkv_1d()));
  o.expect(dual.passed(), "dual JLSA of the packed 1-D JKV fixture");
  return o;
}

Outcome duality_negative() {
  using namespace fixtures;
  Outcome o;
  const LeftSymmetricAlgebroid flat2 = flat_lsa(2);
  o.expect(!kv_bracket(flat2, diag_1_x()).is_zero(), "[[h,h]] of diag(1, x) vanishes");
  const LeftSymmetricAlgebroid dual = build_dual_lsa(flat2, diag_1_x());
  o.expect(!section_associator_probe(dual).vanishes(), "dual associator of diag(1, x) vanishes");
  o.expect(!check_lsa_axioms(dual).passed(), "dual of diag(1, x) passes the LSA axioms");
  const JacobiLSA open = JacobiLSA::candidate(flat2, Cosection::linear({Scalar::variable(1), Scalar()}));
  const LineProbe jac = bar_jacobiator_probe(open.jacobi());
  const LineProbe assoc = bar_associator_probe(open);
  o.expect(!jac.raw.vanishes(), "Jacobiator of the non-closed extension vanishes");
  o.expect(jac.residual.vanishes(), "Jacobiator differs from the d phi0 form");
  o.expect(!assoc.raw.vanishes(), "associator of the non-closed extension vanishes");
  o.expect(assoc.residual.vanishes(), "associator differs from the antisymmetrized delta phi0 form");
  o.absorb(run_fixture("kv-duality"));
  o.absorb(run_fixture("line-extension"));
  return o;
}

Outcome jacobi_geometry() {
  using namespace fixtures;
  Outcome o;
  const LieAlgebroid tm = tangent(3);
  const JacobiPair p = contact();
  o.expect(jacobi_pair_check(tm, p).passed(), "contact pair fails jacobi_pair_check");
  const JacobiAlgebroid line = line_jacobi_algebroid(tm);
  o.expect(jacobi_defect(line, pack_jacobi(p)).is_zero(), "packed contact structure is not Jacobi");
  o.expect(poissonize(line, pack_jacobi(p)).report.passed(), "Poissonization is not Poisson");
  o.expect(!poisson_defect(tm, p.lambda).is_zero(), "Lambda alone is Poisson");
  o.absorb(run_fixture("contact"));
  return o;
}

Outcome jkv_chain() {
  Outcome o;
  o.absorb(run_fixture("jkv-manifold"));
  return o;
}

std::string run_cli(const std::string& cmd, int& status) {
  std::string out;
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) {
    status = -1;
    return out;
  }
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, n);
  status = pclose(f);
  return out;
}

std::function<Outcome()> determinism(const std::string& cli) {
  return [cli] {
    Outcome o;
    if (cli.empty()) {
      const std::string a = render_text(run_suite(seed0())), b = render_text(run_suite(seed0()));
      o.expect(a == b, "in-process report differs between runs");
      o.expect(a.find("verdict: pass") != std::string::npos, "in-process report does not pass");
      return o;
    }
    int s1 = 0, s2 = 0;
    const std::string cmd = "'" + cli + "' report --seed 0 2>/dev/null";
    const std::string a = run_cli(cmd, s1), b = run_cli(cmd, s2);
    o.expect(s1 == 0 && s2 == 0, "report exited nonzero");
    o.expect(!a.empty() && a == b, "report output differs between runs");
    return o;
  };
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  struct Criterion {
    int id;
    const char* what;
    double budget;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "sign-pinning half bracket identity", 5, sign_pinning},
      {2, "cocycle symmetry identity", 2, cocycle},
      {3, "twisted sharp identity and closed form", 10, twisted},
      {4, "Poissonization and KV-ization scaling", 10, scaling},
      {5, "duality, positive direction", 5, duality_positive},
      {6, "duality, negative direction", 5, duality_negative},
      {7, "contact Jacobi fixture", 5, jacobi_geometry},
      {8, "JKV manifold chain", 5, jkv_chain},
      {9, "d^2 = 0 and delta^2 = 0", 5, complexes},
      {10, "report determinism and budget", 60, determinism(cli)},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream budget;
    budget.precision(2);
    budget << std::fixed << secs << "s / " << c.budget << "s";
    o.expect(secs < c.budget, "over budget");
    all = all && o.ok;
    std::cout << "criterion " << c.id << ": " << (o.ok ? "PASS" : "FAIL") << "  " << c.what << " (" << budget.str()
              << ")\n";
    for (const auto& n : o.notes) std::cout << "    " << n << "\n";
  }
  return all ? 0 : 1;
}
