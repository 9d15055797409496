#pragma once

#include "algebroid/lsa.hpp"
#include "algebroid/poisson_jacobi.hpp"

namespace algebroid {

class JacobiLSA {
 public:
  JacobiLSA() = default;
  static JacobiLSA candidate(LeftSymmetricAlgebroid s, Cosection phi0);
  // LSA axioms plus symmetric delta phi0; throws StructureError.
  static JacobiLSA validated(LeftSymmetricAlgebroid s, Cosection phi0);

  const LeftSymmetricAlgebroid& lsa() const { return s_; }
  const Cosection& phi0() const { return phi0_; }
  int rank() const { return s_.rank(); }
  // (sub-adjacent, phi0) as a Jacobi algebroid candidate.
  JacobiAlgebroid jacobi() const;

 private:
  LeftSymmetricAlgebroid s_;
  Cosection phi0_;
};

// "sym_defect": delta phi0(e_i,e_j) - delta phi0(e_j,e_i) for i < j;
// "dA_phi0": sub-adjacent d phi0; "identity_defect": their difference.
DefectReport cocycle_symmetry_report(const LeftSymmetricAlgebroid& s, const Cosection& phi0);

Scalar jkv_value(const JacobiLSA& j, const Matrix& h, const Cosection& a, const Cosection& b, const Cosection& c);
// [[h,h]]^phi0 = [[h,h]] + h(phi0,a) h(b,c) - h(phi0,b) h(a,c).
KVTensor jkv_bracket(const JacobiLSA& j, const Matrix& h, Exec exec = Exec::Parallel);

// a .h,phi0 b = a .h b + <phi0, h#a> b - h(a,b) phi0.
Cosection twisted_dual_product(const JacobiLSA& j, const Matrix& h, const Cosection& a, const Cosection& b);
// The same product from L^{phi0}_{h#a} b - R_{h#b} a - d_{phi0} h(a,b).
Cosection twisted_dual_product_definition(const JacobiLSA& j, const Matrix& h, const Cosection& a,
                                          const Cosection& b);
// Entries (a, c, k): [[h,h]]^phi0(e^a, e^k, e^c) - <e^k, h#(e^a . e^c) - h#e^a . h#e^c>.
DefectReport twisted_sharp_identity(const JacobiLSA& j, const Matrix& h, Exec exec = Exec::Parallel);

struct DualJLSA {
  LeftSymmetricAlgebroid lsa;  // on A*, anchor rho o h#
  Cosection phi0;              // -h# phi0, a section of A seen as a form on A*
};

DualJLSA build_dual_jlsa(const JacobiLSA& j, const Matrix& h);
// Validation of the dual: its LSA axioms, "sym_defect" of delta(-h# phi0)
// computed directly, and "cocycle_formula": delta(-h# phi0)(e^a, e^b) minus
// -delta phi0(h#e^a, h#e^b) + [[h,h]]^phi0(e^a, phi0, e^b) on all pairs.
DefectReport dual_jlsa_check(const JacobiLSA& j, const Matrix& h, Exec exec = Exec::Parallel);

}  // namespace algebroid
