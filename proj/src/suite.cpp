#include "algebroid/suite.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "algebroid/fixtures.hpp"
#include "algebroid/line_extension.hpp"
#include "algebroid/random.hpp"

namespace algebroid {

namespace {

constexpr int kInstances = 20;
constexpr int kScalingInstances = 10;

using Family = std::function<CheckResult(RandomSource&)>;

std::string label(const std::string& fixture, int instance) {
  return fixture + " #" + std::to_string(instance) + ": ";
}

Cosection closed_form(RandomSource& rng, const LieAlgebroid& l) {
  return exterior_derivative_of(l, rng.polynomial(l.chart()));
}

Cochain random_cochain(RandomSource& rng, const Chart& c, int rank, int skew) {
  Cochain w(rank, skew);
  for (Mask m : masks_of_degree(rank, skew))
    for (int j = 0; j < rank; ++j) w.set(m, j, rng.polynomial(c));
  return w;
}

// Lie fixtures used for the sign-pinning families.
std::vector<fixtures::NamedLie> pinning_family() { return {{"TM R^2", fixtures::tangent(2)}, {"rank 3", fixtures::rank3()}}; }

CheckResult half_pi_pi(RandomSource& rng) {
  CheckResult r;
  for (const auto& [name, l] : pinning_family())
    for (int n = 0; n < kInstances; ++n, ++r.instances)
      r.require_vanishing(half_pi_pi_identity(l, rng.bivector(l.chart(), l.rank()), Exec::Serial), l.chart(),
                          label(name, n));
  return r;
}

CheckResult twisted_half_pi_pi(RandomSource& rng) {
  CheckResult r;
  for (const auto& [name, l] : pinning_family())
    for (int n = 0; n < kInstances; ++n, ++r.instances) {
      const JacobiAlgebroid j = JacobiAlgebroid::candidate(l, closed_form(rng, l));
      r.require_vanishing(twisted_half_pi_pi_identity(j, rng.bivector(l.chart(), l.rank()), Exec::Serial),
                          l.chart(), label(name, n));
    }
  return r;
}

CheckResult sharp_compat(RandomSource& rng) {
  CheckResult r;
  for (const auto& [name, s] : fixtures::lsa_family())
    for (int n = 0; n < kInstances; ++n, ++r.instances)
      r.require_vanishing(sharp_compat_identity(s, rng.symmetric(s.chart(), s.rank()), Exec::Serial), s.chart(),
                          label(name, n));
  return r;
}

CheckResult ls_obstruction(RandomSource& rng) {
  CheckResult r;
  for (const auto& [name, s] : fixtures::lsa_family())
    for (int n = 0; n < kInstances / 4; ++n, ++r.instances)
      r.require_vanishing(ls_obstruction_identity(s, rng.symmetric(s.chart(), s.rank()), Exec::Serial), s.chart(),
                          label(name, n));
  return r;
}

CheckResult cocyc(RandomSource& rng) {
  CheckResult r;
  for (const auto& [name, s] : fixtures::lsa_family())
    for (int n = 0; n < kInstances; ++n, ++r.instances)
      r.require_vanishing(cocycle_symmetry_report(s, rng.form(s.chart(), s.rank(), 1)), s.chart(), label(name, n),
                          {"identity_defect"});
  return r;
}

CheckResult twisted_sharp(RandomSource& rng) {
  CheckResult r;
  for (const auto& [name, s] : fixtures::lsa_family())
    for (int n = 0; n < kInstances; ++n, ++r.instances) {
      const JacobiLSA j = JacobiLSA::candidate(s, rng.form(s.chart(), s.rank(), 1));
      const Matrix h = rng.symmetric(s.chart(), s.rank());
      r.require_vanishing(twisted_sharp_identity(j, h, Exec::Serial), s.chart(), label(name, n));
      const Cosection a = rng.form(s.chart(), s.rank(), 1), b = rng.form(s.chart(), s.rank(), 1);
      DefectReport forms;
      forms.add("closed_vs_definition", DefectTensor::from(twisted_dual_product(j, h, a, b) -
                                                           twisted_dual_product_definition(j, h, a, b)));
      r.require_vanishing(forms, s.chart(), label(name, n));
    }
  return r;
}

CheckResult psi_intertwine(RandomSource& rng) {
  CheckResult r;
  for (const auto& [name, s] : fixtures::lsa_family())
    for (int n = 0; n < kInstances / 4; ++n, ++r.instances) {
      const JacobiLSA j = JacobiLSA::candidate(s, rng.form(s.chart(), s.rank(), 1));
      r.require_vanishing(psi_check(j), s.chart().with_line(), label(name, n));
    }
  return r;
}

CheckResult poissonize_scaling(RandomSource& rng) {
  CheckResult r;
  for (const auto& [name, l] : pinning_family())
    for (int n = 0; n < kScalingInstances; ++n, ++r.instances) {
      const JacobiAlgebroid j = JacobiAlgebroid::candidate(l, closed_form(rng, l));
      r.require_vanishing(poissonize(j, rng.bivector(l.chart(), l.rank())).report, l.chart().with_line(),
                          label(name, n), {"scaling"});
    }
  return r;
}

CheckResult kvize_scaling(RandomSource& rng) {
  CheckResult r;
  for (const auto& [name, s] : fixtures::lsa_family()) {
    if (s.chart().base_dimension() == 0) continue;  // closed forms over a point are zero
    for (int n = 0; n < kScalingInstances; ++n, ++r.instances) {
      const JacobiLSA j = JacobiLSA::candidate(s, closed_form(rng, commutator_algebroid(s)));
      r.require_vanishing(kv_ize(j, rng.symmetric(s.chart(), s.rank())).report, s.chart().with_line(),
                          label(name, n), {"scaling"});
    }
  }
  return r;
}

// Hessian metric g_ij = d_i d_j f - Gamma_ij^k d_k f of the patch connection.
Matrix hessian(const AffinePatch& p, const Scalar& f) {
  const Connection& c = p.connection();
  const int n = p.dimension();
  const AnchoredBundle& b = c.algebroid().bundle();
  auto derive = [&](int i, const Scalar& s) { return anchor_apply(b, Section::frame(n, i), s); };
  Matrix g(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Scalar v = derive(i, derive(j, f));
      for (int k = 0; k < n; ++k)
        if (!c.christoffel(i, j)[k].is_zero()) v -= c.christoffel(i, j)[k] * derive(k, f);
      g(i, j) = v;
    }
  return g;
}

// Potential with nondegenerate Hessian. Given affine coordinates a it is
// c a0 a1 + phi(a_s), whose Hessian has constant determinant -c^2 and so a
// polynomial inverse.
Scalar potential(RandomSource& rng, const fixtures::NamedPatch& np) {
  if (np.affine.size() != 2) {
    RandomSource cubic(static_cast<std::uint64_t>(rng.integer(0, 1 << 30)), 3);
    return cubic.polynomial(np.patch.chart());
  }
  Scalar coefficient;
  while (coefficient.is_zero()) coefficient = rng.constant();
  const Scalar& a = np.affine[static_cast<std::size_t>(rng.integer(0, 1))];
  Scalar phi, power(1);
  for (int k = 0; k <= 3; ++k, power *= a) phi += Scalar(rng.integer(-3, 3)) * power;
  return coefficient * np.affine[0] * np.affine[1] + phi;
}

CheckResult dtheta_closed_form(RandomSource& rng) {
  CheckResult r;
  for (const auto& np : fixtures::patch_family()) {
    const AffinePatch& p = np.patch;
    const Chart& c = p.chart();
    const int n = p.dimension();
    for (int k = 0; k < kInstances / 2; ++k, ++r.instances) {
      // Arbitrary (h, E): the unconditional expansion of d theta.
      const JKVPair any{rng.nondegenerate_symmetric(c, n), rng.section(c, n)};
      r.require_vanishing(lch_report(p, any), c, label(np.name, k), {"dtheta_identity", "translation"});
      // Semi-Weyl data g' = u Hess f, theta = -du / u, E = g'^{-1} theta: the closed form.
      Matrix g;
      do g = hessian(p, potential(rng, np));
      while (g.determinant().is_zero());
      Scalar u;
      while (u.is_zero()) u = Scalar(4) + rng.polynomial(c);
      const Cosection theta = (Scalar(-1) * u.reciprocal()) * exterior_derivative_of(p.connection().algebroid(), u);
      Matrix gu(n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) gu(i, j) = u * g(i, j);
      const Matrix h = gu.inverse();
      Section e(n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) e[i] += h(i, j) * theta[j];
      r.require_vanishing(dtheta_report(p, gu, e), c, label(np.name, k) + "semi-Weyl ");
    }
  }
  return r;
}

CheckResult pack_h_equivalence(RandomSource& rng) {
  CheckResult r;
  for (const auto& [name, p, affine] : fixtures::patch_family())
    for (int k = 0; k < kInstances / 2; ++k, ++r.instances) {
      const JKVPair pair{rng.symmetric(p.chart(), p.dimension()), rng.section(p.chart(), p.dimension())};
      const EquivalenceReport e = jkv_equivalence_report(p, pair);
      r.require_vanishing(e.details, p.chart(), label(name, k), {"slot_relations"});
      r.expect(e.consistent(), label(name, k) + "packed and unpacked verdicts differ");
    }
  return r;
}

CheckResult d_squared(RandomSource& rng) {
  CheckResult r;
  for (const auto& [name, l] : fixtures::lie_family())
    for (int k = 0; k < kInstances / 2; ++k, ++r.instances)
      for (int deg = 0; deg < std::min(l.rank(), 2); ++deg) {
        const Cosection w = rng.form(l.chart(), l.rank(), deg);
        DefectReport rep;
        rep.add("dd", DefectTensor::from(differential(l, differential(l, w))));
        r.require_vanishing(rep, l.chart(), label(name, k));
      }
  return r;
}

CheckResult delta_squared(RandomSource& rng) {
  CheckResult r;
  for (const auto& [name, s] : fixtures::lsa_family())
    for (int k = 0; k < kInstances / 2; ++k, ++r.instances)
      for (int skew = 0; skew < 2; ++skew) {
        const Cochain w = random_cochain(rng, s.chart(), s.rank(), skew);
        DefectReport rep;
        rep.add("delta_delta", DefectTensor::from(coboundary(s, coboundary(s, w, Exec::Serial), Exec::Serial)));
        r.require_vanishing(rep, s.chart(), label(name, k));
      }
  return r;
}

struct Entry {
  const char* name;
  CheckResult (*run)(RandomSource&);
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> r{
      {"half-pi-pi", half_pi_pi},
      {"twisted-half-pi-pi", twisted_half_pi_pi},
      {"sharp-compat", sharp_compat},
      {"ls-obstruction", ls_obstruction},
      {"cocyc", cocyc},
      {"twisted-sharp", twisted_sharp},
      {"psi-intertwine", psi_intertwine},
      {"poissonize-scaling", poissonize_scaling},
      {"kvize-scaling", kvize_scaling},
      {"dtheta-closed-form", dtheta_closed_form},
      {"pack-H-equivalence", pack_h_equivalence},
      {"d-squared", d_squared},
      {"delta-squared", delta_squared},
  };
  return r;
}

CheckResult run_entry(std::size_t index, const SuiteOptions& opt) {
  const Entry& e = registry()[index];
  RandomSource rng(opt.seed * 1000003u + index, opt.max_degree);
  CheckResult r = e.run(rng);
  r.name = std::string("identity/") + e.name;
  return r;
}

}  // namespace

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names{"half-pi-pi",     "twisted-half-pi-pi", "sharp-compat",
                                              "ls-obstruction", "cocyc",              "twisted-sharp",
                                              "psi-intertwine", "poissonize-scaling", "kvize-scaling",
                                              "dtheta-closed-form", "pack-H-equivalence"};
  return names;
}

const std::vector<std::string>& complex_names() {
  static const std::vector<std::string> names{"d-squared", "delta-squared"};
  return names;
}

CheckResult verify_identity(const std::string& name, const SuiteOptions& opt) {
  for (std::size_t i = 0; i < registry().size(); ++i)
    if (name == registry()[i].name) return run_entry(i, opt);
  throw std::invalid_argument("unknown identity: " + name);
}

// ---- frozen fixtures -----------------------------------------------------

namespace {

using Job = std::function<CheckResult()>;

CheckResult named(std::string name, CheckResult r) {
  r.name = "fixture/" + std::move(name);
  return r;
}

// Expected-failure bookkeeping: the check passes when the report fails.
void expect_failure(CheckResult& r, const DefectReport& rep, const std::vector<std::string>& families,
                    const std::string& what) {
  for (const auto& f : families) r.expect(!rep.vanishes(f), what + ": expected nonzero " + f);
}

std::vector<Job> fixture_jobs() {
  using namespace fixtures;
  std::vector<Job> jobs;

  jobs.push_back([] {
    CheckResult r;
    for (const auto& [name, l] : lie_family()) r.require_vanishing(check_lie_axioms(l), l.chart(), name + ": ");
    r.require_vanishing(check_lie_axioms(tangent(3)), chart(3), "TM R^3: ");
    return named("lie-axioms", r);
  });

  jobs.push_back([] {
    CheckResult r;
    for (const auto& [name, s] : lsa_family()) r.require_vanishing(check_lsa_axioms(s), s.chart(), name + ": ");
    expect_failure(r, check_lsa_axioms(point_table_bad()), {"associator_symmetry"}, "e1.e2 = e1 table");
    const Connection flat1(tangent(1), {Section(1)});
    r.expect(commutator_algebroid(lsa_bar_nabla(flat1)) == direct_sum_line(tangent(1)),
             "sub-adjacent of bar nabla differs from TM (+) R");
    r.expect(sub_adjacent(flat_lsa(2)) == tangent(2), "sub-adjacent of flat TM R^2 differs from TM R^2");
    return named("lsa-axioms", r);
  });

  jobs.push_back([] {
    CheckResult r;
    const LieAlgebroid tm = tangent(3);
    const JacobiPair p = contact();
    const Chart c = chart(3);
    r.require_vanishing(jacobi_pair_check(tm, p), c, "jacobi pair: ");
    const JacobiAlgebroid line = line_jacobi_algebroid(tm);
    const Poissonization pz = poissonize(line, pack_jacobi(p));
    r.require_vanishing(pz.report, c.with_line(), "poissonization: ");
    r.expect(!poisson_defect(tm, p.lambda).is_zero(), "Lambda alone is unexpectedly Poisson");
    r.expect(extend_lie(line, LineVariant::Bar) == LieAlgebroid::tangent(c.with_line()),
             "bar extension of TM (+) R differs from T(M x R)");
    // e^{-t}(Lambda + d_t ^ E) on T(M x R) with d_t the last frame.
    Multisection big(4, 2);
    for (const auto& [m, v] : p.lambda.terms()) big.add(m, Scalar::exp_line(-1) * v);
    big.add(bit(2) | bit(3), Scalar(-1) * Scalar::exp_line(-1));
    r.expect(pz.pi_tilde == big, "Poissonization differs from e^{-t}(Lambda + d_t ^ E)");
    return named("contact", r);
  });

  jobs.push_back([] {
    CheckResult r;
    const LeftSymmetricAlgebroid flat2 = flat_lsa(2);
    const Matrix constant{std::vector<std::vector<Scalar>>{{2, 1}, {1, 3}}};
    r.require_vanishing(check_lsa_axioms(build_dual_lsa(flat2, constant)), chart(2), "constant h: ");
    const Scalar x = Scalar::variable(0);
    const Matrix poly1 = Matrix::diagonal({x * x * x - Scalar(2) * x + Scalar(1)});
    r.require_vanishing(check_lsa_axioms(build_dual_lsa(flat_lsa(1), poly1)), chart(1), "flat R, polynomial h: ");
    r.require_vanishing(check_lsa_axioms(build_dual_lsa(tm_nabla_1d(), poly1)), chart(1), "TM_nabla R: ");
    r.expect(kv_bracket(flat2, diag_x_y()).is_zero(), "diag(x, y) is not KV");
    r.require_vanishing(check_lsa_axioms(build_dual_lsa(flat2, diag_x_y())), chart(2), "diag(x, y): ");
    r.expect(!kv_bracket(flat2, diag_1_x()).is_zero(), "diag(1, x) unexpectedly KV");
    const LeftSymmetricAlgebroid bad = build_dual_lsa(flat2, diag_1_x());
    expect_failure(r, check_lsa_axioms(bad), {"anchor_morphism"}, "diag(1, x) dual");
    r.expect(!section_associator_probe(bad).vanishes(), "diag(1, x) dual: associator on x_a e_k vanishes");
    r.expect(section_associator_probe(build_dual_lsa(flat2, diag_x_y())).vanishes(),
             "diag(x, y) dual: associator on x_a e_k is nonzero");
    return named("kv-duality", r);
  });

  jobs.push_back([] {
    CheckResult r;
    const LeftSymmetricAlgebroid flat2 = flat_lsa(2);
    const EquivalenceReport bad = nondeg_equivalence_report(flat2, diag_1_x());
    r.expect(!bad.left_vanishes && !bad.right_vanishes, "diag(1, x): expected both predicates nonzero");
    const Matrix constant{std::vector<std::vector<Scalar>>{{2, 1}, {1, 3}}};
    const EquivalenceReport good = nondeg_equivalence_report(flat2, constant);
    r.expect(good.left_vanishes && good.right_vanishes, "constant h: expected both predicates zero");
    const Scalar x = Scalar::variable(0);
    const EquivalenceReport rank1 = nondeg_equivalence_report(flat_lsa(1), Matrix::diagonal({Scalar(1) + x * x}));
    r.expect(rank1.consistent(), "rank 1 probe: predicates disagree");
    const EquivalenceReport dual = dual_connection_report(AffinePatch::flat(chart(2)), diag_1_x());
    r.expect(!dual.left_vanishes && !dual.right_vanishes, "dual connection of diag(1, x): expected both nonzero");
    r.expect(!codazzi_defect(AffinePatch::flat(chart(2)), diag_1_x()).vanishes(), "diag(1, x) is Codazzi");
    return named("nondegenerate-equivalence", r);
  });

  jobs.push_back([] {
    CheckResult r;
    const LeftSymmetricAlgebroid flat2 = flat_lsa(2);
    const Chart c = chart(2);
    // phi0 = y dx is not closed.
    const Cosection phi = Cosection::linear({Scalar::variable(1), Scalar()});
    const JacobiLSA open = JacobiLSA::candidate(flat2, phi);
    expect_failure(r, check_lie_axioms(extend_lie(open.jacobi(), LineVariant::Bar)), {"anchor_morphism"}, "bar Lie");
    expect_failure(r, check_lsa_axioms(extend_lsa(open, LineVariant::Bar)), {"anchor_morphism"}, "bar LSA");
    expect_failure(r, check_lsa_axioms(extend_lsa(open, LineVariant::Hat)), {"anchor_morphism"}, "hat LSA");
    const LineProbe jac = bar_jacobiator_probe(open.jacobi());
    const LineProbe assoc = bar_associator_probe(open);
    r.expect(!jac.raw.vanishes() && jac.residual.vanishes(), "bar Jacobiator probe is not d phi0 e_k");
    r.expect(!assoc.raw.vanishes() && assoc.residual.vanishes(),
             "bar associator probe is not the antisymmetrized delta phi0");
    // A closed phi0 extends in both variants.
    const Cosection closed = exterior_derivative_of(tangent(2), Scalar::variable(0) * Scalar::variable(1));
    const JacobiLSA good = JacobiLSA::validated(flat2, closed);
    for (LineVariant v : {LineVariant::Hat, LineVariant::Bar}) {
      const std::string tag = v == LineVariant::Hat ? "hat: " : "bar: ";
      r.require_vanishing(check_lsa_axioms(extend_lsa(good, v)), c.with_line(), tag);
      r.require_vanishing(check_lie_axioms(extend_lie(good.jacobi(), v)), c.with_line(), tag);
      r.expect(commutator_algebroid(extend_lsa(good, v)) == extend_lie(good.jacobi(), v),
               tag + "sub-adjacent of the extension differs from the extended bracket");
    }
    r.require_vanishing(psi_check(good), c.with_line(), "psi: ");
    return named("line-extension", r);
  });

  jobs.push_back([] {
    CheckResult r;
    const AffinePatch line = AffinePatch::flat(chart(1));
    const Chart c = chart(1);
    const JKVPair pair = jkv_1d();
    r.require_vanishing(jkv_defects(line, pair), c);
    r.require_vanishing(jkv_equivalence_report(line, pair).details, c, "pack H: ");
    const JacobiLSA jl = line.bar_nabla_jlsa();
    const Matrix h = pack_H(pair);
    r.require_vanishing(kv_ize(jl, h).report, c.with_line(), "KV-ization: ");
    r.require_vanishing(lch_report(line, pair), c, "lch: ");
    r.require_vanishing(dual_jlsa_check(jl, h), c, "dual JLSA: ");
    auto only = [&](const AffinePatch& p, const JKVPair& bad_pair, const std::string& bad, const std::string& tag) {
      const EquivalenceReport e = jkv_equivalence_report(p, bad_pair);
      for (const char* f : {"i", "ii", "iii"})
        r.expect(e.details.vanishes(f) == (bad != f), tag + ": condition (" + f + ") verdict unexpected");
      r.expect(!e.left_vanishes, tag + ": packed bracket unexpectedly zero");
      r.require_vanishing(e.details, p.chart(), tag + ": ", {"slot_relations"});
    };
    only(line, jkv_violate_ii(), "ii", "h = x^2");
    only(line, jkv_violate_iii(), "iii", "h = -x^2, E = x d_x");
    only(AffinePatch::flat(chart(2)), jkv_violate_i(), "i", "h = diag(1, x)");
    return named("jkv-manifold", r);
  });

  return jobs;
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"lie-axioms", "lsa-axioms",     "contact",     "kv-duality",
                                              "nondegenerate-equivalence", "line-extension", "jkv-manifold"};
  return names;
}

CheckResult run_fixture(const std::string& name) {
  const auto& names = fixture_names();
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw std::invalid_argument("unknown fixture: " + name);
  return fixture_jobs()[static_cast<std::size_t>(it - names.begin())]();
}

std::vector<CheckResult> run_fixtures(Exec exec) {
  const std::vector<Job> jobs = fixture_jobs();
  return tabulate(jobs.size(), [&](std::size_t i) { return jobs[i](); }, exec);
}

ReportDocument run_suite(const SuiteOptions& opt) {
  ReportDocument doc;
  doc.input_digest =
      sha256_hex("suite seed=" + std::to_string(opt.seed) + " max-degree=" + std::to_string(opt.max_degree));
  doc.checks = run_fixtures(opt.exec);
  auto ids = tabulate(registry().size(), [&](std::size_t i) { return run_entry(i, opt); }, opt.exec);
  for (auto& c : ids) doc.checks.push_back(std::move(c));
  return doc;
}

}  // namespace algebroid
