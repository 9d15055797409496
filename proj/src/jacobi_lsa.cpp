#include "algebroid/jacobi_lsa.hpp"

#include <array>
#include <bit>

namespace algebroid {

namespace {

Cosection dual_frame(int r, int a) { return Cosection::basis(r, bit(a)); }

void check_phi0(int r, const Cosection& phi0) {
  if (phi0.rank() != r || phi0.degree() != 1) throw std::invalid_argument("phi0 must be a 1-cosection");
}

}  // namespace

JacobiLSA JacobiLSA::candidate(LeftSymmetricAlgebroid s, Cosection phi0) {
  check_phi0(s.rank(), phi0);
  for (const auto& [m, c] : phi0.terms()) check_scalar(s.bundle(), c);
  JacobiLSA j;
  j.s_ = std::move(s);
  j.phi0_ = std::move(phi0);
  return j;
}

JacobiLSA JacobiLSA::validated(LeftSymmetricAlgebroid s, Cosection phi0) {
  JacobiLSA j = candidate(std::move(s), std::move(phi0));
  DefectReport rep = check_lsa_axioms(j.lsa());
  rep.add("sym_defect", cocycle_symmetry_report(j.lsa(), j.phi0()).at("sym_defect"));
  if (!rep.passed()) throw StructureError("Jacobi-left-symmetric algebroid axioms fail", std::move(rep));
  return j;
}

JacobiAlgebroid JacobiLSA::jacobi() const { return JacobiAlgebroid::candidate(commutator_algebroid(s_), phi0_); }

DefectReport cocycle_symmetry_report(const LeftSymmetricAlgebroid& s, const Cosection& phi0) {
  check_phi0(s.rank(), phi0);
  const Cosection sym = antisymmetrized_coboundary(s, phi0);
  const Cosection d = differential(commutator_algebroid(s), phi0);
  DefectReport rep;
  rep.add("sym_defect", DefectTensor::from(sym));
  rep.add("dA_phi0", DefectTensor::from(d));
  rep.add("identity_defect", DefectTensor::from(sym - d));
  return rep;
}

Scalar jkv_value(const JacobiLSA& j, const Matrix& h, const Cosection& a, const Cosection& b, const Cosection& c) {
  const Section hphi = h_sharp(h, j.phi0());
  return kv_value(j.lsa(), h, a, b, c) + pairing(a, hphi) * h_value(h, b, c) - pairing(b, hphi) * h_value(h, a, c);
}

KVTensor jkv_bracket(const JacobiLSA& j, const Matrix& h, Exec exec) {
  const int r = j.rank();
  check_symmetric(h, r);
  KVTensor out = kv_bracket(j.lsa(), h, exec);
  const Section hphi = h_sharp(h, j.phi0());
  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b < r; ++b)
      for (int c = 0; c < r; ++c) {
        const Scalar extra = hphi[a] * h(b, c) - hphi[b] * h(a, c);
        if (!extra.is_zero()) out.set(bit(a) | bit(b), c, out.value(bit(a) | bit(b), c) + extra);
      }
  return out;
}

Cosection twisted_dual_product(const JacobiLSA& j, const Matrix& h, const Cosection& a, const Cosection& b) {
  return dual_product(j.lsa(), h, a, b) + pairing(j.phi0(), h_sharp(h, a)) * b - h_value(h, a, b) * j.phi0();
}

Cosection twisted_dual_product_definition(const JacobiLSA& j, const Matrix& h, const Cosection& a,
                                          const Cosection& b) {
  const JacobiAlgebroid ja = j.jacobi();
  return twisted_lie_derivative(ja, h_sharp(h, a), b) - right_dual(j.lsa(), h_sharp(h, b), a) -
         twisted_differential(ja, Cosection::function(j.rank(), h_value(h, a, b)));
}

DefectReport twisted_sharp_identity(const JacobiLSA& j, const Matrix& h, Exec exec) {
  const int r = j.rank();
  check_symmetric(h, r);
  const KVTensor kv = jkv_bracket(j, h, exec);
  std::vector<std::array<int, 2>> idx;
  for (int a = 0; a < r; ++a)
    for (int c = 0; c < r; ++c) idx.push_back({a, c});
  auto vals = tabulate(
      idx.size(),
      [&](std::size_t t) {
        const auto [a, c] = idx[t];
        const Cosection ea = dual_frame(r, a), ec = dual_frame(r, c);
        Section rhs = h_sharp(h, twisted_dual_product(j, h, ea, ec)) -
                      ls_product(j.lsa(), h_sharp(h, ea), h_sharp(h, ec));
        Section lhs(r);
        for (int k = 0; k < r; ++k) lhs[k] = kv.at({a, k}, c);
        return lhs - rhs;
      },
      exec);
  DefectTensor t;
  for (std::size_t p = 0; p < idx.size(); ++p)
    for (int k = 0; k < r; ++k) t.add({idx[p][0], idx[p][1], k}, vals[p][k]);
  DefectReport rep;
  rep.add("identity", std::move(t));
  return rep;
}

DualJLSA build_dual_jlsa(const JacobiLSA& j, const Matrix& h) {
  const int r = j.rank();
  check_symmetric(h, r);
  const LeftSymmetricAlgebroid& s = j.lsa();
  std::vector<std::vector<Scalar>> anchor;
  for (int a = 0; a < r; ++a) anchor.push_back(s.bundle().vector_field(h_sharp(h, dual_frame(r, a))));
  std::vector<Section> table(static_cast<std::size_t>(r * r));
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      table[a * r + b] = Section(twisted_dual_product(j, h, dual_frame(r, a), dual_frame(r, b)).components());
  DualJLSA out;
  out.lsa = LeftSymmetricAlgebroid::candidate(AnchoredBundle(s.chart(), std::move(anchor)), std::move(table));
  out.phi0 = Cosection::linear((-h_sharp(h, j.phi0())).components());
  return out;
}

DefectReport dual_jlsa_check(const JacobiLSA& j, const Matrix& h, Exec exec) {
  const int r = j.rank();
  const DualJLSA dual = build_dual_jlsa(j, h);
  DefectReport rep = check_lsa_axioms(dual.lsa, exec);
  rep.add("sym_defect", DefectTensor::from(antisymmetrized_coboundary(dual.lsa, dual.phi0)));

  const Cochain direct = coboundary(dual.lsa, one_cochain(dual.phi0), exec);
  const Cochain base = coboundary(j.lsa(), one_cochain(j.phi0()), exec);
  DefectTensor formula;
  for (int a = 0; a < r; ++a) {
    const Section ha = h_sharp(h, dual_frame(r, a));
    for (int b = 0; b < r; ++b) {
      const Section hb = h_sharp(h, dual_frame(r, b));
      Scalar base_val;
      for (int p = 0; p < r; ++p)
        for (int q = 0; q < r; ++q)
          if (!ha[p].is_zero() && !hb[q].is_zero()) base_val += ha[p] * hb[q] * base.value(bit(p), q);
      // [[h,h]]^phi0(e^a, phi0, e^b) with phi0 in the middle slot.
      const Scalar kv = jkv_value(j, h, dual_frame(r, a), j.phi0(), dual_frame(r, b));
      formula.add({a, b}, direct.value(bit(a), b) + base_val - kv);
    }
  }
  rep.add("cocycle_formula", std::move(formula));
  return rep;
}

}  // namespace algebroid
