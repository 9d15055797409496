#pragma once

#include <stdexcept>
#include <vector>

#include "algebroid/scalar.hpp"

namespace algebroid {

class SingularError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Dense square matrix of scalars.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int n) : n_(n), a_(static_cast<std::size_t>(n * n)) {}
  explicit Matrix(const std::vector<std::vector<Scalar>>& rows);
  static Matrix identity(int n);
  static Matrix diagonal(const std::vector<Scalar>& d);

  int size() const { return n_; }
  Scalar& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  const Scalar& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  bool is_symmetric() const;
  bool is_skew() const;
  Matrix transposed() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

  Scalar determinant() const;
  // Fraction-field Gaussian elimination; throws SingularError.
  Matrix inverse() const;

 private:
  int n_ = 0;
  std::vector<Scalar> a_;
};

}  // namespace algebroid
