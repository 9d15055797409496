#pragma once

#include "algebroid/algebroid.hpp"

namespace algebroid {

// pi#xi = i_xi pi, i.e. (pi#xi)^j = sum_i xi_i pi^{ij}.
Section pi_sharp(const Multisection& pi, const Cosection& xi);
Multisection poisson_defect(const LieAlgebroid& l, const Multisection& pi);
// [xi, eta]_pi = L_{pi#xi} eta - L_{pi#eta} xi - d(pi(xi, eta)).
Cosection dual_bracket_pi(const LieAlgebroid& l, const Multisection& pi, const Cosection& xi, const Cosection& eta);
// Entries (a, b, k), a < b: component k of
// 1/2 [pi,pi](e^a, e^b, .) - ([pi#e^a, pi#e^b] - pi#[e^a, e^b]_pi).
DefectReport half_pi_pi_identity(const LieAlgebroid& l, const Multisection& pi, Exec exec = Exec::Parallel);
// Dual bundle A* with bracket [,]_pi and anchor rho o pi#. Not validated.
LieAlgebroid build_dual_lie(const LieAlgebroid& l, const Multisection& pi);
// omega with omega-flat = -(pi#)^{-1}; throws SingularError.
Cosection symplectic_from_poisson(const LieAlgebroid& l, const Multisection& pi);

class JacobiAlgebroid {
 public:
  JacobiAlgebroid() = default;
  static JacobiAlgebroid candidate(LieAlgebroid l, Cosection phi0);
  // Lie axioms plus d phi0 = 0; throws StructureError.
  static JacobiAlgebroid validated(LieAlgebroid l, Cosection phi0);

  const LieAlgebroid& lie() const { return l_; }
  const Cosection& phi0() const { return phi0_; }
  int rank() const { return l_.rank(); }

 private:
  LieAlgebroid l_;
  Cosection phi0_;
};

DefectReport check_jacobi_axioms(const JacobiAlgebroid& j, Exec exec = Exec::Parallel);

// [D1,D2] + (a1-1) D1 ^ i_phi0 D2 - (-1)^{a1+1} (a2-1) i_phi0 D1 ^ D2.
Multisection twisted_schouten(const JacobiAlgebroid& j, const Multisection& d1, const Multisection& d2);
Cosection twisted_differential(const JacobiAlgebroid& j, const Cosection& w);
Cosection twisted_lie_derivative(const JacobiAlgebroid& j, const Section& x, const Cosection& w);
Multisection jacobi_defect(const JacobiAlgebroid& j, const Multisection& pi);
Cosection dual_bracket_pi_phi0(const JacobiAlgebroid& j, const Multisection& pi, const Cosection& xi,
                               const Cosection& eta);
// Dual Lie algebroid for [,]_{pi,phi0} with phi0' = X0 = -pi#phi0. Not validated.
JacobiAlgebroid build_dual_jacobi(const JacobiAlgebroid& j, const Multisection& pi);
DefectReport twisted_half_pi_pi_identity(const JacobiAlgebroid& j, const Multisection& pi,
                                         Exec exec = Exec::Parallel);

// Jacobi structure (Lambda, E) on a Lie algebroid.
struct JacobiPair {
  Multisection lambda;
  Section e;
};

// Lambda + e ^ E on A (+) R, e being the last frame index.
Multisection pack_jacobi(const JacobiPair& p);
// The A (+) R Jacobi algebroid with phi0 = (0, ..., 0, 1).
JacobiAlgebroid line_jacobi_algebroid(const LieAlgebroid& l);
// "lambda_lambda": [Lambda,Lambda] + 2 E ^ Lambda; "e_lambda": [E, Lambda];
// "packed": twisted [pi,pi] of the packed bivector.
DefectReport jacobi_pair_check(const LieAlgebroid& l, const JacobiPair& p);

}  // namespace algebroid
