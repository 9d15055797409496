#pragma once

#include "algebroid/jacobi_lsa.hpp"

namespace algebroid {

// A x R over the chart extended by t. Sections of the extension are sections
// whose coefficients mention t; d/dt acts coefficientwise.
enum class LineVariant { Hat, Bar };

Section t_derivative(const Section& x);

// Anchor rows of the hat or bar extension.
AnchoredBundle extend_bundle(const AnchoredBundle& b, const Cosection& phi0, LineVariant v);
LieAlgebroid extend_lie(const JacobiAlgebroid& j, LineVariant v);
LeftSymmetricAlgebroid extend_lsa(const JacobiLSA& j, LineVariant v);

// The displayed bracket and product formulas evaluated directly on sections,
// independently of the frame tables above.
Section extended_bracket(const JacobiAlgebroid& j, LineVariant v, const Section& x, const Section& y);
Section extended_product(const JacobiLSA& j, LineVariant v, const Section& x, const Section& y);

// With Psi(X) = e^t X: "anchor" rho_hat(Psi e_i) - rho_bar(e_i) and
// "product" Psi(e_i .bar e_j) - Psi(e_i) .hat Psi(e_j), plus the same for
// the sub-adjacent brackets under "bracket".
DefectReport psi_check(const JacobiLSA& j);

// Probes on the non-constant sections t e_k, where the line extension sees
// d phi0 and the antisymmetrized delta phi0:
// "jacobiator": Jac_bar(e_i, e_j, t e_k) - d phi0(e_i, e_j) e_k, i < j;
// "associator": X.(Y.Z) - Y.(X.Z) - (X.Y).Z + (Y.X).Z on (e_i, e_j, t e_k)
//   in the bar LSA minus (delta phi0(e_i,e_j) - delta phi0(e_j,e_i)) e_k.
// Both vanish for arbitrary phi0; the raw probe values are returned too.
struct LineProbe {
  DefectTensor raw;       // probe values, (i, j, k, m)
  DefectTensor residual;  // raw minus the predicted form
};
LineProbe bar_jacobiator_probe(const JacobiAlgebroid& j);
LineProbe bar_associator_probe(const JacobiLSA& j);

struct Poissonization {
  Multisection pi_tilde;  // e^{-t} pi on the bar extension
  DefectReport report;    // "scaling" and "poisson"
};
Poissonization poissonize(const JacobiAlgebroid& j, const Multisection& pi);

struct KVization {
  Matrix h_tilde;       // e^{-t} h on the bar extension
  DefectReport report;  // "scaling" and "kv"
};
KVization kv_ize(const JacobiLSA& j, const Matrix& h);

}  // namespace algebroid
