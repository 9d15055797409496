#pragma once

#include "algebroid/algebroid.hpp"

namespace algebroid {

// Product table b with e_i . e_j = b_ij^k e_k on an anchored bundle.
class LeftSymmetricAlgebroid {
 public:
  LeftSymmetricAlgebroid() = default;
  static LeftSymmetricAlgebroid candidate(AnchoredBundle bundle, std::vector<Section> table);
  // Throws StructureError when check_lsa_axioms fails.
  static LeftSymmetricAlgebroid validated(AnchoredBundle bundle, std::vector<Section> table);

  const AnchoredBundle& bundle() const { return bundle_; }
  const Chart& chart() const { return bundle_.chart(); }
  int rank() const { return bundle_.rank(); }
  const Section& product(int i, int j) const { return table_[static_cast<std::size_t>(i * rank() + j)]; }
  const std::vector<Section>& table() const { return table_; }

  friend bool operator==(const LeftSymmetricAlgebroid&, const LeftSymmetricAlgebroid&) = default;

 private:
  AnchoredBundle bundle_;
  std::vector<Section> table_;
};

Section ls_product(const LeftSymmetricAlgebroid& s, const Section& x, const Section& y);
// "associator_symmetry": (e_i,e_j,e_k) - (e_j,e_i,e_k) for i < j, per component;
// "anchor_morphism": of the commutator bracket.
DefectReport check_lsa_axioms(const LeftSymmetricAlgebroid& s, Exec exec = Exec::Parallel);
// Associator symmetry on (e_i, e_j, x_a e_k), i < j, entries (i, j, k, a, m).
// Equals x_a times the frame value plus ([rho e_i, rho e_j] - rho[e_i, e_j])(x_a) e_k,
// so it sees a broken anchor morphism that the frame triples cannot.
DefectTensor section_associator_probe(const LeftSymmetricAlgebroid& s, Exec exec = Exec::Parallel);
// Commutator algebroid [X,Y] = X.Y - Y.X without validation.
LieAlgebroid commutator_algebroid(const LeftSymmetricAlgebroid& s);
// The sub-adjacent Lie algebroid of a valid LSA; throws StructureError.
LieAlgebroid sub_adjacent(const LeftSymmetricAlgebroid& s);

// <L_X a, Y> = rho(X)<a,Y> - <a, X.Y>.
Cosection left_dual(const LeftSymmetricAlgebroid& s, const Section& x, const Cosection& a);
// <R_X a, Y> = -<a, Y.X>.
Cosection right_dual(const LeftSymmetricAlgebroid& s, const Section& x, const Cosection& a);

// h is a symmetric matrix h^{ij}; h#a has components sum_i a_i h^{ij}.
void check_symmetric(const Matrix& h, int rank);
Section h_sharp(const Matrix& h, const Cosection& a);
Scalar h_value(const Matrix& h, const Cosection& a, const Cosection& b);

// [[h,h]](a,b,c) for arbitrary 1-cosections.
Scalar kv_value(const LeftSymmetricAlgebroid& s, const Matrix& h, const Cosection& a, const Cosection& b,
                const Cosection& c);
// [[h,h]] on dual frames, skew in the first two slots.
KVTensor kv_bracket(const LeftSymmetricAlgebroid& s, const Matrix& h, Exec exec = Exec::Parallel);

Cochain one_cochain(const Cosection& phi);
Cochain metric_cochain(const Matrix& g);
Cochain coboundary(const LeftSymmetricAlgebroid& s, const Cochain& w, Exec exec = Exec::Parallel);
// delta phi(X, Y) - delta phi(Y, X) for a 1-cochain, as a 2-form.
Cosection antisymmetrized_coboundary(const LeftSymmetricAlgebroid& s, const Cosection& phi);
DefectReport delta_g_check(const LeftSymmetricAlgebroid& s, const Matrix& g);
// [[h,h]] = 0 versus delta g = 0 with g = h^{-1}; throws SingularError.
EquivalenceReport nondeg_equivalence_report(const LeftSymmetricAlgebroid& s, const Matrix& h);

// a .h b = L^A_{h#a} b - R_{h#b} a - d_A(h(a,b)), sub-adjacent L^A and d_A.
Cosection dual_product(const LeftSymmetricAlgebroid& s, const Matrix& h, const Cosection& a, const Cosection& b);
// Entries (a, c, k): [[h,h]](e^a, e^k, e^c) - <e^k, h#(e^a . e^c) - h#e^a . h#e^c>.
DefectReport sharp_compat_identity(const LeftSymmetricAlgebroid& s, const Matrix& h, Exec exec = Exec::Parallel);
// Entries (a, b, c, i), a < b: left-symmetry defect of .h against its
// [[h,h]] expression, evaluated on e_i.
DefectReport ls_obstruction_identity(const LeftSymmetricAlgebroid& s, const Matrix& h, Exec exec = Exec::Parallel);
// (A*, .h, rho o h#); not validated.
LeftSymmetricAlgebroid build_dual_lsa(const LeftSymmetricAlgebroid& s, const Matrix& h);

// e_i . e_j = nabla_{e_i} e_j; throws StructureError unless flat and torsion-free.
LeftSymmetricAlgebroid lsa_from_connection(const Connection& c);
// (A (+) R, bar nabla, rho o pr1); same validation as lsa_from_connection.
LeftSymmetricAlgebroid lsa_bar_nabla(const Connection& c);

}  // namespace algebroid
