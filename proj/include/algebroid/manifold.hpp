#pragma once

#include "algebroid/jacobi_lsa.hpp"

namespace algebroid {

// A chart with a flat torsion-free connection on its standard tangent
// algebroid.
class AffinePatch {
 public:
  AffinePatch() = default;
  // christoffel[i * n + j] = nabla_{d_i} d_j; throws StructureError.
  AffinePatch(const Chart& chart, std::vector<Section> christoffel);
  static AffinePatch flat(const Chart& chart);

  const Connection& connection() const { return c_; }
  const Chart& chart() const { return c_.algebroid().chart(); }
  int dimension() const { return c_.rank(); }
  // TM with the product nabla.
  LeftSymmetricAlgebroid lsa() const { return lsa_from_connection(c_); }
  // ((TM (+) R, bar nabla, pr1), (0, 1)).
  JacobiLSA bar_nabla_jlsa() const;

 private:
  Connection c_;
};

struct JKVPair {
  Matrix h;   // symmetric, contravariant
  Section e;  // vector field E
};

// (nabla_{d_i} h)^{bc} for the contravariant symmetric tensor h.
Matrix contravariant_derivative(const Connection& c, const Matrix& h, int i);

// Entries (i, j, k), i < j: (nabla_i g)(j,k) - (nabla_j g)(i,k).
DefectTensor codazzi_defect(const AffinePatch& p, const Matrix& g);
// Entries (a, b, c), a < b: (nabla_{h#e^a} h)(e^b,e^c) - (nabla_{h#e^b} h)(e^a,e^c).
DefectTensor kv_manifold_defect(const AffinePatch& p, const Matrix& h);
// "i": entries (a, b, c), a < b; "ii": entries (b, c); "iii": entries (k).
DefectReport jkv_defects(const AffinePatch& p, const JKVPair& pair);

// H = h + d/dt (x) E + E (x) d/dt, the line direction being the last index.
Matrix pack_H(const JKVPair& pair);
// details: "HH" = [[H,H]]^{(0,1)} on the bar nabla JLSA, the three JKV
// defects, and "slot_relations", which must vanish for every pair:
//   HH(a,b,c) = -(i)(a,b,c), HH(t,b,c) = -(ii)(b,c),
//   HH(a,b,t) = (ii)(a,b) - (ii)(b,a), HH(t,b,t) = -(iii)(b).
// left: HH vanishes; right: (i)-(iii) vanish.
EquivalenceReport jkv_equivalence_report(const AffinePatch& p, const JKVPair& pair);

// Entries (i, j, k), i < j: S(i,j,k) - S(j,i,k), S = nabla g + theta (x) g.
DefectTensor semi_weyl_defect(const AffinePatch& p, const Matrix& g, const Cosection& theta);
// g = h^{-1}, theta = g-flat E. "semi_weyl", "torsion", "curvature",
// "dtheta", "dtheta_identity" (d theta minus its unconditional expansion),
// "dtheta_closed_form" (d theta minus g(Y, nabla_X E) - g(X, nabla_Y E),
// which vanishes under semi-Weyl) and "translation" (JKV (i) against the
// semi-Weyl defect on h#-images). Throws SingularError.
DefectReport lch_report(const AffinePatch& p, const JKVPair& pair);
// The lch_report families without "translation", taking g and E directly.
DefectReport dtheta_report(const AffinePatch& p, const Matrix& g, const Section& e);
Cosection theta_of(const Matrix& g, const Section& e);

// left: dual connection torsion-free; right: Codazzi. Throws SingularError.
EquivalenceReport dual_connection_report(const AffinePatch& p, const Matrix& g);

}  // namespace algebroid
