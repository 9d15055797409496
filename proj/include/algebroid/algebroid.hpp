#pragma once

#include <stdexcept>
#include <vector>

#include "algebroid/chart.hpp"
#include "algebroid/exterior.hpp"
#include "algebroid/matrix.hpp"
#include "algebroid/parallel.hpp"
#include "algebroid/tensor.hpp"

namespace algebroid {

// Thrown by validated constructors when the structure axioms fail.
class StructureError : public std::domain_error {
 public:
  StructureError(const std::string& what, DefectReport report)
      : std::domain_error(what), report_(std::move(report)) {}
  const DefectReport& report() const { return report_; }

 private:
  DefectReport report_;
};

// Trivialized vector bundle A = chart x R^r with an anchor A -> TM.
class AnchoredBundle {
 public:
  AnchoredBundle() = default;
  // anchor[i][a]: component of rho(e_i) along coordinate a.
  AnchoredBundle(Chart chart, std::vector<std::vector<Scalar>> anchor);
  static AnchoredBundle tangent(const Chart& chart);

  const Chart& chart() const { return chart_; }
  int rank() const { return static_cast<int>(anchor_.size()); }
  const std::vector<Scalar>& anchor(int i) const { return anchor_[static_cast<std::size_t>(i)]; }
  const std::vector<std::vector<Scalar>>& anchor_matrix() const { return anchor_; }

  // rho(e_i) f, without argument validation.
  Scalar derive(int i, const Scalar& f) const;
  Scalar derive(const Section& x, const Scalar& f) const;
  // Components of rho(x) along the coordinates.
  std::vector<Scalar> vector_field(const Section& x) const;

  friend bool operator==(const AnchoredBundle&, const AnchoredBundle&) = default;

 private:
  Chart chart_;
  std::vector<std::vector<Scalar>> anchor_;
};

// Bracket table c with [e_i, e_j] = c_ij^k e_k on an anchored bundle.
class LieAlgebroid {
 public:
  LieAlgebroid() = default;
  // table[i * r + j] = [e_i, e_j]; must be antisymmetric. No axiom check.
  static LieAlgebroid candidate(AnchoredBundle bundle, std::vector<Section> table);
  // Throws StructureError when check_lie_axioms fails.
  static LieAlgebroid validated(AnchoredBundle bundle, std::vector<Section> table);
  static LieAlgebroid tangent(const Chart& chart);

  const AnchoredBundle& bundle() const { return bundle_; }
  const Chart& chart() const { return bundle_.chart(); }
  int rank() const { return bundle_.rank(); }
  const Section& bracket(int i, int j) const { return table_[static_cast<std::size_t>(i * rank() + j)]; }
  const std::vector<Section>& table() const { return table_; }

  friend bool operator==(const LieAlgebroid&, const LieAlgebroid&) = default;

 private:
  AnchoredBundle bundle_;
  std::vector<Section> table_;
};

// Checks shapes and variables of a section against a bundle.
void check_section(const AnchoredBundle& b, const Section& x);
void check_scalar(const AnchoredBundle& b, const Scalar& f);

Scalar anchor_apply(const AnchoredBundle& b, const Section& x, const Scalar& f);
// Bilinear product x^i y^j T_ij + rho(x) y shared by brackets, products and
// connections.
Section table_product(const AnchoredBundle& b, const std::vector<Section>& table, const Section& x,
                      const Section& y);
Section lie_bracket(const LieAlgebroid& l, const Section& x, const Section& y);

// "jacobi": Jacobiator on frame triples i<j<k.
// "anchor_morphism": rho[e_i,e_j] - [rho e_i, rho e_j] for i<j, per coordinate.
DefectReport check_lie_axioms(const LieAlgebroid& l, Exec exec = Exec::Parallel);

Multisection schouten_bracket(const LieAlgebroid& l, const Multisection& p, const Multisection& q);
Cosection differential(const LieAlgebroid& l, const Cosection& w);
Cosection lie_derivative(const LieAlgebroid& l, const Section& x, const Cosection& w);
Multisection lie_derivative(const LieAlgebroid& l, const Section& x, const Multisection& d);
Cosection exterior_derivative_of(const LieAlgebroid& l, const Scalar& f);

DefectReport presymplectic_check(const LieAlgebroid& l, const Cosection& w);
// Adds "nondegeneracy": the determinant of the form matrix must not vanish.
DefectReport symplectic_check(const LieAlgebroid& l, const Cosection& w);
Matrix form_matrix(const Cosection& w);
Matrix bivector_matrix(const Multisection& p);

// A (+) R with [e_i, e] = 0 and rho(e) = 0; e is the last frame index.
LieAlgebroid direct_sum_line(const LieAlgebroid& l);

// Connection with nabla_{e_i} e_j = Gamma_ij^k e_k.
class Connection {
 public:
  Connection() = default;
  Connection(LieAlgebroid l, std::vector<Section> table);
  const LieAlgebroid& algebroid() const { return l_; }
  int rank() const { return l_.rank(); }
  const Section& christoffel(int i, int j) const { return table_[static_cast<std::size_t>(i * rank() + j)]; }
  const std::vector<Section>& table() const { return table_; }

 private:
  LieAlgebroid l_;
  std::vector<Section> table_;
};

Section connection_apply(const Connection& c, const Section& x, const Section& y);
// Entries (i, j, k) with i < j: component k of T(e_i, e_j).
DefectTensor torsion(const Connection& c, Exec exec = Exec::Parallel);
// Entries (i, j, k, l) with i < j: component l of R(e_i, e_j) e_k.
DefectTensor curvature(const Connection& c, Exec exec = Exec::Parallel);
bool is_flat(const Connection& c);
bool is_torsion_free(const Connection& c);
// Gamma*_ik^m = sum_j g^{mj} (rho_i g_jk - sum_l Gamma_ij^l g_lk).
Connection dual_connection(const Connection& c, const Matrix& g);
// (nabla_{e_i} g)(e_j, e_k).
Scalar covariant_metric_derivative(const Connection& c, const Matrix& g, int i, int j, int k);

}  // namespace algebroid
