#include "algebroid/random.hpp"
#include "helpers.hpp"

using namespace testing;

namespace {

Section sec(std::vector<Scalar> c) { return Section(std::move(c)); }

LieAlgebroid over_point(int r, std::vector<Section> table) {
  return LieAlgebroid::candidate(AnchoredBundle(fixtures::point(), std::vector<std::vector<Scalar>>(r)),
                                 std::move(table));
}

}  // namespace

TEST_CASE("anchor action") {
  const LieAlgebroid tm = fixtures::tangent(1);
  CHECK(anchor_apply(tm.bundle(), sec({1}), X() * X()) == Scalar(2) * X());
  CHECK(anchor_apply(tm.bundle(), Section(1), X() * X()).is_zero());
  const LieAlgebroid sum = direct_sum_line(tm);
  CHECK(anchor_apply(sum.bundle(), sec({0, 1}), X() * X() + X()).is_zero());
}

TEST_CASE("bracket") {
  const LieAlgebroid tm = fixtures::tangent(1);
  CHECK(lie_bracket(tm, sec({X()}), sec({1})) == sec({-1}));
  const Section v = sec({X() * X()});
  CHECK(lie_bracket(tm, v, v).is_zero());
  const LieAlgebroid sum = direct_sum_line(tm);
  const Scalar g = X() * X() * X();
  CHECK(lie_bracket(sum, sec({1, 0}), sec({0, g})) == sec({0, g.derivative(0)}));
  CHECK(lie_bracket(sum, sec({1, 0}), sec({0, X()})) == sec({0, 1}));
  CHECK(lie_bracket(sum, sec({1, 0}), sec({0, 1})).is_zero());
  CHECK(lie_bracket(sum, sec({0, X()}), sec({0, X() * X()})).is_zero());
}

TEST_CASE("Lie axioms on frames") {
  CHECK(check_lie_axioms(fixtures::tangent(2)).passed());
  std::vector<Section> t = zero_table(2);
  t[0 * 2 + 1][0] = 1;
  t[1 * 2 + 0][0] = -1;
  CHECK(check_lie_axioms(over_point(2, t)).passed());
  CHECK(check_lie_axioms(fixtures::so3()).passed());
  CHECK(check_lie_axioms(fixtures::rank3()).passed());
  // [e1,e2] = e3, [e2,e3] = e3, [e1,e3] = e1 violates Jacobi
  std::vector<Section> bad = zero_table(3);
  auto set = [&](int i, int j, int k) {
    bad[i * 3 + j][k] += 1;
    bad[j * 3 + i][k] -= 1;
  };
  set(0, 1, 2);
  set(1, 2, 2);
  set(0, 2, 0);
  const DefectReport rep = check_lie_axioms(over_point(3, bad));
  CHECK_FALSE(rep.vanishes("jacobi"));
  CHECK(rep.vanishes("anchor_morphism"));
  // anchor that is not a morphism: rho(e1) = d_x, rho(e2) = x d_x with zero bracket
  const LieAlgebroid twist =
      LieAlgebroid::candidate(AnchoredBundle(fixtures::chart(1), {{1}, {X()}}), zero_table(2));
  CHECK_FALSE(check_lie_axioms(twist).vanishes("anchor_morphism"));
  CHECK_THROWS_AS(LieAlgebroid::validated(twist.bundle(), zero_table(2)), StructureError);
}

TEST_CASE("frame checks cover f e_i sections") {
  RandomSource rng(17);
  const LieAlgebroid l = fixtures::rank3();
  const Chart c = l.chart();
  for (int n = 0; n < 5; ++n) {
    const Section a = rng.section(c, 3), b = rng.section(c, 3), e = rng.section(c, 3);
    const Section jac = lie_bracket(l, a, lie_bracket(l, b, e)) + lie_bracket(l, b, lie_bracket(l, e, a)) +
                        lie_bracket(l, e, lie_bracket(l, a, b));
    CHECK(jac.is_zero());
  }
}

TEST_CASE("Schouten bracket") {
  const LieAlgebroid tm2 = fixtures::tangent(2);
  const Multisection dxy = Multisection::basis(2, bit(0) | bit(1));
  CHECK(schouten_bracket(tm2, dxy, dxy).is_zero());
  CHECK(schouten_bracket(tm2, Multisection::basis(2, bit(0) | bit(1), X()), dxy).is_zero());
  RandomSource rng(2);
  for (int n = 0; n < 10; ++n) {
    const Section u = rng.section(fixtures::chart(2), 2), v = rng.section(fixtures::chart(2), 2);
    CHECK(as_section(schouten_bracket(tm2, as_multisection(u), as_multisection(v))) == lie_bracket(tm2, u, v));
  }
}

TEST_CASE("Schouten graded antisymmetry and Leibniz") {
  const LieAlgebroid l = fixtures::rank3();
  const Chart c = l.chart();
  RandomSource rng(23);
  auto multi = [&](int deg) {
    Multisection m(3, deg);
    for (Mask k : masks_of_degree(3, deg)) m.add(k, rng.polynomial(c));
    return m;
  };
  for (int n = 0; n < 6; ++n)
    for (int a = 1; a <= 2; ++a)
      for (int b = 1; b <= 2; ++b) {
        const Multisection p = multi(a), q = multi(b), s = multi(1);
        const Multisection pq = schouten_bracket(l, p, q), qp = schouten_bracket(l, q, p);
        const bool even = ((a - 1) * (b - 1)) % 2 == 0;
        CHECK(pq == (even ? -qp : qp));
        // [P, Q ^ S] = [P, Q] ^ S + (-1)^{(a-1) b} Q ^ [P, S]
        if (a + b <= 3) {
          const Multisection lhs = schouten_bracket(l, p, wedge(q, s));
          const Multisection second = wedge(q, schouten_bracket(l, p, s));
          const Multisection rhs = wedge(pq, s) + (((a - 1) * b) % 2 ? -second : second);
          CHECK(lhs == rhs);
        }
      }
}

TEST_CASE("differential") {
  const LieAlgebroid tm1 = fixtures::tangent(1), tm2 = fixtures::tangent(2), tm3 = fixtures::tangent(3);
  const Scalar f = X() * X() * X() + X();
  CHECK(exterior_derivative_of(tm1, f) == Cosection::linear({f.derivative(0)}));
  CHECK(differential(tm2, Cosection::linear({1, 0})).is_zero());
  CHECK(differential(tm2, Cosection::linear({Y(), 0})) == Cosection::basis(2, bit(0) | bit(1), -1));
  const Cosection w = Cosection::basis(3, bit(0) | bit(1), Z());
  CHECK(differential(tm3, w) == Cosection::basis(3, bit(0) | bit(1) | bit(2)));
}

TEST_CASE("Lie derivative") {
  const LieAlgebroid tm1 = fixtures::tangent(1);
  CHECK(lie_derivative(tm1, Section::frame(1, 0), Cosection::linear({X()})) == Cosection::linear({1}));
  const Section v = Section(std::vector<Scalar>{X() * X()});
  CHECK(lie_derivative(tm1, v, as_multisection(v)).is_zero());
  CHECK(lie_derivative(fixtures::tangent(3), Section::frame(3, 2), fixtures::contact().lambda).is_zero());
}

TEST_CASE("Cartan identities on random inputs") {
  for (const auto& [name, l] : fixtures::lie_family()) {
    RandomSource rng(31);
    const Chart c = l.chart();
    for (int n = 0; n < 5; ++n) {
      const Section a = rng.section(c, l.rank()), b = rng.section(c, l.rank());
      const Cosection w = rng.form(c, l.rank(), 2);
      // i_{[X,Y]} = L_X i_Y - i_Y L_X
      CHECK(interior(lie_bracket(l, a, b), w) ==
            lie_derivative(l, a, interior(b, w)) - interior(b, lie_derivative(l, a, w)));
      CHECK(differential(l, differential(l, rng.form(c, l.rank(), 1))).is_zero());
    }
  }
}

TEST_CASE("presymplectic and symplectic") {
  const LieAlgebroid tm2 = fixtures::tangent(2), tm3 = fixtures::tangent(3);
  CHECK(symplectic_check(tm2, Cosection::basis(2, bit(0) | bit(1))).passed());
  const Cosection xw = Cosection::basis(2, bit(0) | bit(1), X());
  CHECK(presymplectic_check(tm2, xw).passed());
  CHECK(symplectic_check(tm2, xw).passed());
  CHECK(form_matrix(xw).determinant() == X() * X());
  CHECK_FALSE(presymplectic_check(tm3, Cosection::basis(3, bit(0) | bit(1), Z())).passed());
}

TEST_CASE("direct sum with the line") {
  const LieAlgebroid sum = direct_sum_line(fixtures::tangent(1));
  CHECK(sum.rank() == 2);
  CHECK(sum.bracket(0, 1).is_zero());
  CHECK(check_lie_axioms(sum).passed());
  CHECK(check_lie_axioms(direct_sum_line(fixtures::rank3())).passed());
}

TEST_CASE("connections") {
  const LieAlgebroid tm2 = fixtures::tangent(2);
  const Connection flat(tm2, zero_table(2));
  CHECK(torsion(flat).vanishes());
  CHECK(curvature(flat).vanishes());
  CHECK(dual_connection(flat, Matrix(std::vector<std::vector<Scalar>>{{2, 1}, {1, 1}})).table() == zero_table(2));
  // nabla_x d_x = d_x with g = x: nabla* d_x = (1/x - 1) d_x
  std::vector<Section> g1 = zero_table(1);
  g1[0][0] = 1;
  const Connection c1(fixtures::tangent(1), g1);
  const Connection d = dual_connection(c1, Matrix::diagonal({X()}));
  CHECK(d.christoffel(0, 0)[0] == X().reciprocal() - Scalar(1));
  CHECK_THROWS_AS(dual_connection(flat, Matrix::diagonal({X(), 0})), SingularError);
  // Leibniz in the second slot, tensorial in the first
  const Section v = Section(std::vector<Scalar>{X(), Y()});
  CHECK(connection_apply(flat, Section::frame(2, 0), v) == Section::frame(2, 0));
  CHECK(connection_apply(flat, v, Section::frame(2, 0)).is_zero());
  // torsion-free curved connection whose curvature is nonzero: Gamma^x_xy = Gamma^x_yx = y
  std::vector<Section> curved = zero_table(2);
  curved[0 * 2 + 1][0] = Y();
  curved[1 * 2 + 0][0] = Y();
  const Connection cc(tm2, curved);
  CHECK(is_torsion_free(cc));
  CHECK_FALSE(is_flat(cc));
}
