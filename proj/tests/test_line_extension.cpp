#include "algebroid/line_extension.hpp"
#include "algebroid/random.hpp"
#include "helpers.hpp"

using namespace testing;

namespace {

Section lift_t(const Section& s, const Scalar& f) { return f * s; }

}  // namespace

TEST_CASE("zero phi0") {
  const LieAlgebroid l = fixtures::rank3();
  const JacobiAlgebroid j = JacobiAlgebroid::candidate(l, Cosection(3, 1));
  const LieAlgebroid bar = extend_lie(j, LineVariant::Bar);
  const LieAlgebroid hat = extend_lie(j, LineVariant::Hat);
  CHECK(bar.chart() == l.chart().with_line());
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      CHECK(bar.bracket(i, k) == l.bracket(i, k));
      CHECK(hat.bracket(i, k) == Scalar::exp_line(-1) * l.bracket(i, k));
    }
  const LeftSymmetricAlgebroid s = fixtures::tm_nabla_2d();
  const LeftSymmetricAlgebroid sb = extend_lsa(JacobiLSA::candidate(s, Cosection(2, 1)), LineVariant::Bar);
  CHECK(sb.table() == s.table());
}

TEST_CASE("bar extension of TM (+) R is T(M x R)") {
  for (int n = 1; n <= 3; ++n) {
    const JacobiAlgebroid line = line_jacobi_algebroid(fixtures::tangent(n));
    CHECK(extend_lie(line, LineVariant::Bar) == LieAlgebroid::tangent(fixtures::chart(n).with_line()));
  }
}

TEST_CASE("extension validity follows closedness of phi0") {
  const LieAlgebroid tm2 = fixtures::tangent(2);
  const JacobiAlgebroid closed = JacobiAlgebroid::candidate(tm2, exterior_derivative_of(tm2, X() * Y() * Y()));
  const JacobiAlgebroid open = JacobiAlgebroid::candidate(tm2, Cosection::linear({Y(), 0}));
  for (LineVariant v : {LineVariant::Hat, LineVariant::Bar}) {
    CHECK(check_lie_axioms(extend_lie(closed, v)).passed());
    CHECK_FALSE(check_lie_axioms(extend_lie(open, v)).passed());
  }
  const JacobiLSA bar = fixtures::patch_1d().bar_nabla_jlsa();
  CHECK(check_lsa_axioms(extend_lsa(bar, LineVariant::Bar)).passed());
  CHECK(check_lsa_axioms(extend_lsa(bar, LineVariant::Hat)).passed());
  CHECK(sub_adjacent(extend_lsa(bar, LineVariant::Bar)) == extend_lie(bar.jacobi(), LineVariant::Bar));
}

TEST_CASE("formula evaluators match the tables") {
  RandomSource rng(4);
  const LeftSymmetricAlgebroid s = fixtures::tm_nabla_2d();
  const JacobiLSA j = JacobiLSA::candidate(s, rng.form(s.chart(), 2, 1));
  const Chart c = s.chart().with_line();
  for (LineVariant v : {LineVariant::Hat, LineVariant::Bar}) {
    const LeftSymmetricAlgebroid e = extend_lsa(j, v);
    const LieAlgebroid l = extend_lie(j.jacobi(), v);
    for (int n = 0; n < 4; ++n) {
      const Section a = lift_t(rng.section(s.chart(), 2), T() + Scalar::exp_line(rng.integer(-1, 1)));
      const Section b = lift_t(rng.section(s.chart(), 2), T() * T());
      CHECK(extended_product(j, v, a, b) == ls_product(e, a, b));
      CHECK(extended_bracket(j.jacobi(), v, a, b) == lie_bracket(l, a, b));
    }
  }
  (void)c;
}

TEST_CASE("Psi intertwines the two extensions") {
  RandomSource rng(6);
  for (const auto& [name, s] : fixtures::lsa_family()) {
    CAPTURE(name);
    CHECK(psi_check(JacobiLSA::candidate(s, rng.form(s.chart(), s.rank(), 1))).passed());
    CHECK(psi_check(JacobiLSA::candidate(s, Cosection(s.rank(), 1))).passed());
  }
  CHECK(psi_check(JacobiLSA::candidate(fixtures::point_table_bad(), Cosection::linear({1, 2}))).passed());
}

TEST_CASE("probes on t e_k reproduce the proof terms") {
  const LeftSymmetricAlgebroid flat2 = fixtures::flat_lsa(2);
  const JacobiLSA open = JacobiLSA::candidate(flat2, Cosection::linear({Y(), 0}));
  const LineProbe jac = bar_jacobiator_probe(open.jacobi());
  const LineProbe assoc = bar_associator_probe(open);
  CHECK_FALSE(jac.raw.vanishes());
  CHECK(jac.residual.vanishes());
  CHECK_FALSE(assoc.raw.vanishes());
  CHECK(assoc.residual.vanishes());
  const DefectReport lsa_rep = check_lsa_axioms(extend_lsa(open, LineVariant::Bar));
  CHECK_FALSE(lsa_rep.passed());
  RandomSource rng(7);
  for (int n = 0; n < 4; ++n) {
    const JacobiLSA j = JacobiLSA::candidate(fixtures::tm_nabla_2d(), rng.form(flat2.chart(), 2, 1));
    CHECK(bar_associator_probe(j).residual.vanishes());
    CHECK(bar_jacobiator_probe(j.jacobi()).residual.vanishes());
  }
}

TEST_CASE("Poissonization") {
  RandomSource rng(8);
  const LieAlgebroid l = fixtures::rank3();
  const JacobiAlgebroid j = JacobiAlgebroid::candidate(l, exterior_derivative_of(l, X() * Y()));
  for (int n = 0; n < 3; ++n) {
    const Multisection pi = rng.bivector(l.chart(), 3);
    const Poissonization p = poissonize(j, pi);
    CHECK(p.report.vanishes("scaling"));
    CHECK(p.report.vanishes("poisson") == jacobi_defect(j, pi).is_zero());
    CHECK(p.pi_tilde == Scalar::exp_line(-1) * pi);
  }
  const Poissonization zero = poissonize(j, Multisection(3, 2));
  CHECK(zero.pi_tilde.is_zero());
  CHECK(zero.report.passed());
  const Poissonization contact =
      poissonize(line_jacobi_algebroid(fixtures::tangent(3)), pack_jacobi(fixtures::contact()));
  CHECK(contact.report.passed());
}

TEST_CASE("Koszul-Vinbergization") {
  RandomSource rng(9);
  const JacobiLSA bar = fixtures::patch_1d().bar_nabla_jlsa();
  for (int n = 0; n < 3; ++n) {
    const Matrix h = rng.symmetric(bar.lsa().chart(), 2);
    const KVization k = kv_ize(bar, h);
    CHECK(k.report.vanishes("scaling"));
    CHECK(k.report.vanishes("kv") == jkv_bracket(bar, h).is_zero());
  }
  const JacobiLSA flat_bar = AffinePatch::flat(fixtures::chart(1)).bar_nabla_jlsa();
  const KVization good = kv_ize(flat_bar, pack_H(fixtures::jkv_1d()));
  CHECK(good.report.passed());
  CHECK(good.h_tilde(0, 0) == Scalar::exp_line(-1) * -X());
  CHECK(kv_ize(flat_bar, Matrix(2)).report.passed());
}
