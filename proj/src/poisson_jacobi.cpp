#include "algebroid/poisson_jacobi.hpp"

#include <array>

namespace algebroid {

namespace {

const Scalar& half() {
  static const Scalar h(mpq_class(1, 2));
  return h;
}

Cosection dual_frame(int r, int a) { return Cosection::basis(r, bit(a)); }

Scalar bivector_value(const Multisection& pi, const Cosection& xi, const Cosection& eta) {
  const std::array<Cosection, 2> args{xi, eta};
  return evaluate(pi, args);
}

std::vector<std::array<int, 2>> ordered_pairs(int r) {
  std::vector<std::array<int, 2>> out;
  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b < r; ++b) out.push_back({a, b});
  return out;
}

void check_bivector(int r, const Multisection& pi) {
  if (pi.rank() != r || pi.degree() != 2) throw std::invalid_argument("expected a bivector of the algebroid rank");
}

// Shared body of both half identities; bracket gives the dual bracket on
// frames and big is the full (twisted) bracket of pi with itself.
template <class DualBracket>
DefectReport half_identity(const LieAlgebroid& l, const Multisection& pi, const Multisection& big,
                           DualBracket bracket, Exec exec) {
  const int r = l.rank();
  const auto pairs = ordered_pairs(r);
  auto vals = tabulate(
      pairs.size(),
      [&](std::size_t p) {
        const auto [a, b] = pairs[p];
        const Cosection ea = dual_frame(r, a), eb = dual_frame(r, b);
        Section lhs = half() * as_section(interior(eb, interior(ea, big)));
        Section rhs = lie_bracket(l, pi_sharp(pi, ea), pi_sharp(pi, eb)) - pi_sharp(pi, bracket(ea, eb));
        return lhs - rhs;
      },
      exec);
  DefectTensor t;
  for (std::size_t p = 0; p < pairs.size(); ++p)
    for (int k = 0; k < r; ++k) t.add({pairs[p][0], pairs[p][1], k}, vals[p][k]);
  DefectReport rep;
  rep.add("identity", std::move(t));
  return rep;
}

// Dual algebroid from a bracket on dual frames and anchor rho o pi#.
template <class DualBracket>
LieAlgebroid dual_algebroid(const LieAlgebroid& l, const Multisection& pi, DualBracket bracket) {
  const int r = l.rank();
  std::vector<std::vector<Scalar>> anchor;
  for (int a = 0; a < r; ++a) anchor.push_back(l.bundle().vector_field(pi_sharp(pi, dual_frame(r, a))));
  std::vector<Section> table(static_cast<std::size_t>(r * r), Section(r));
  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b < r; ++b) {
      Section s(bracket(dual_frame(r, a), dual_frame(r, b)).components());
      table[b * r + a] = -s;
      table[a * r + b] = std::move(s);
    }
  return LieAlgebroid::candidate(AnchoredBundle(l.chart(), std::move(anchor)), std::move(table));
}

}  // namespace

Section pi_sharp(const Multisection& pi, const Cosection& xi) { return as_section(interior(xi, pi)); }

Multisection poisson_defect(const LieAlgebroid& l, const Multisection& pi) {
  check_bivector(l.rank(), pi);
  return schouten_bracket(l, pi, pi);
}

Cosection dual_bracket_pi(const LieAlgebroid& l, const Multisection& pi, const Cosection& xi, const Cosection& eta) {
  check_bivector(l.rank(), pi);
  return lie_derivative(l, pi_sharp(pi, xi), eta) - lie_derivative(l, pi_sharp(pi, eta), xi) -
         exterior_derivative_of(l, bivector_value(pi, xi, eta));
}

DefectReport half_pi_pi_identity(const LieAlgebroid& l, const Multisection& pi, Exec exec) {
  const Multisection big = poisson_defect(l, pi);
  return half_identity(
      l, pi, big, [&](const Cosection& a, const Cosection& b) { return dual_bracket_pi(l, pi, a, b); }, exec);
}

LieAlgebroid build_dual_lie(const LieAlgebroid& l, const Multisection& pi) {
  check_bivector(l.rank(), pi);
  return dual_algebroid(l, pi, [&](const Cosection& a, const Cosection& b) { return dual_bracket_pi(l, pi, a, b); });
}

Cosection symplectic_from_poisson(const LieAlgebroid& l, const Multisection& pi) {
  check_bivector(l.rank(), pi);
  const Matrix inv = bivector_matrix(pi).inverse();
  Cosection w(l.rank(), 2);
  for (int i = 0; i < l.rank(); ++i)
    for (int j = i + 1; j < l.rank(); ++j) w.add(bit(i) | bit(j), -inv(i, j));
  return w;
}

// ---- Jacobi algebroids ---------------------------------------------------

JacobiAlgebroid JacobiAlgebroid::candidate(LieAlgebroid l, Cosection phi0) {
  if (phi0.rank() != l.rank() || phi0.degree() != 1) throw std::invalid_argument("phi0 must be a 1-cosection");
  for (const auto& [m, c] : phi0.terms()) check_scalar(l.bundle(), c);
  JacobiAlgebroid j;
  j.l_ = std::move(l);
  j.phi0_ = std::move(phi0);
  return j;
}

JacobiAlgebroid JacobiAlgebroid::validated(LieAlgebroid l, Cosection phi0) {
  JacobiAlgebroid j = candidate(std::move(l), std::move(phi0));
  DefectReport rep = check_jacobi_axioms(j);
  if (!rep.passed()) throw StructureError("Jacobi algebroid axioms fail", std::move(rep));
  return j;
}

DefectReport check_jacobi_axioms(const JacobiAlgebroid& j, Exec exec) {
  DefectReport rep = check_lie_axioms(j.lie(), exec);
  rep.add("phi0_closed", DefectTensor::from(differential(j.lie(), j.phi0())));
  return rep;
}

Multisection twisted_schouten(const JacobiAlgebroid& j, const Multisection& d1, const Multisection& d2) {
  Multisection out = schouten_bracket(j.lie(), d1, d2);
  const int a1 = d1.degree(), a2 = d2.degree();
  if (a1 + a2 == 0) return out;
  if (a1 != 1 && a2 > 0) {
    Multisection t = wedge(d1, interior(j.phi0(), d2));
    out += Scalar(a1 - 1) * t;
  }
  if (a2 != 1 && a1 > 0) {
    // -(-1)^{a1+1} = (-1)^{a1}
    Multisection t = wedge(interior(j.phi0(), d1), d2);
    out += Scalar(a1 % 2 ? -(a2 - 1) : (a2 - 1)) * t;
  }
  return out;
}

Cosection twisted_differential(const JacobiAlgebroid& j, const Cosection& w) {
  return differential(j.lie(), w) + wedge(j.phi0(), w);
}

Cosection twisted_lie_derivative(const JacobiAlgebroid& j, const Section& x, const Cosection& w) {
  Cosection out = interior(x, twisted_differential(j, w));
  if (w.degree() > 0) out += twisted_differential(j, interior(x, w));
  return out;
}

Multisection jacobi_defect(const JacobiAlgebroid& j, const Multisection& pi) {
  check_bivector(j.rank(), pi);
  return twisted_schouten(j, pi, pi);
}

Cosection dual_bracket_pi_phi0(const JacobiAlgebroid& j, const Multisection& pi, const Cosection& xi,
                               const Cosection& eta) {
  check_bivector(j.rank(), pi);
  return twisted_lie_derivative(j, pi_sharp(pi, xi), eta) - twisted_lie_derivative(j, pi_sharp(pi, eta), xi) -
         twisted_differential(j, Cosection::function(j.rank(), bivector_value(pi, xi, eta)));
}

JacobiAlgebroid build_dual_jacobi(const JacobiAlgebroid& j, const Multisection& pi) {
  check_bivector(j.rank(), pi);
  LieAlgebroid dual = dual_algebroid(
      j.lie(), pi, [&](const Cosection& a, const Cosection& b) { return dual_bracket_pi_phi0(j, pi, a, b); });
  const Section x0 = -pi_sharp(pi, j.phi0());
  return JacobiAlgebroid::candidate(std::move(dual), Cosection::linear(x0.components()));
}

DefectReport twisted_half_pi_pi_identity(const JacobiAlgebroid& j, const Multisection& pi, Exec exec) {
  const Multisection big = jacobi_defect(j, pi);
  return half_identity(
      j.lie(), pi, big, [&](const Cosection& a, const Cosection& b) { return dual_bracket_pi_phi0(j, pi, a, b); },
      exec);
}

// ---- Jacobi pairs --------------------------------------------------------

Multisection pack_jacobi(const JacobiPair& p) {
  const int r = p.lambda.rank();
  if (p.lambda.degree() != 2 || p.e.rank() != r) throw std::invalid_argument("pack_jacobi: shape mismatch");
  Multisection out(r + 1, 2);
  for (const auto& [m, c] : p.lambda.terms()) out.add(m, c);
  for (int i = 0; i < r; ++i) out.add(bit(i) | bit(r), -p.e[i]);
  return out;
}

JacobiAlgebroid line_jacobi_algebroid(const LieAlgebroid& l) {
  LieAlgebroid ext = direct_sum_line(l);
  const int r = ext.rank();
  return JacobiAlgebroid::candidate(std::move(ext), Cosection::basis(r, bit(r - 1)));
}

DefectReport jacobi_pair_check(const LieAlgebroid& l, const JacobiPair& p) {
  check_bivector(l.rank(), p.lambda);
  const Multisection e = as_multisection(p.e);
  DefectReport rep;
  // With the bracket sign fixed by the half-bracket identity, the packed
  // condition is [Lambda,Lambda] = -2 E ^ Lambda.
  rep.add("lambda_lambda",
          DefectTensor::from(schouten_bracket(l, p.lambda, p.lambda) + Scalar(2) * wedge(e, p.lambda)));
  rep.add("e_lambda", DefectTensor::from(schouten_bracket(l, e, p.lambda)));
  rep.add("packed", DefectTensor::from(jacobi_defect(line_jacobi_algebroid(l), pack_jacobi(p))));
  return rep;
}

}  // namespace algebroid
