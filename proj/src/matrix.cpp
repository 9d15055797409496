#include "algebroid/matrix.hpp"

#include <utility>

namespace algebroid {

Matrix::Matrix(const std::vector<std::vector<Scalar>>& rows) : Matrix(static_cast<int>(rows.size())) {
  for (int i = 0; i < n_; ++i) {
    if (static_cast<int>(rows[i].size()) != n_) throw std::invalid_argument("matrix is not square");
    for (int j = 0; j < n_; ++j) (*this)(i, j) = rows[i][j];
  }
}

Matrix Matrix::identity(int n) {
  Matrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::diagonal(const std::vector<Scalar>& d) {
  Matrix m(static_cast<int>(d.size()));
  for (int i = 0; i < m.n_; ++i) m(i, i) = d[i];
  return m;
}

bool Matrix::is_symmetric() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool Matrix::is_skew() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i; j < n_; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) return false;
  return true;
}

Matrix Matrix::transposed() const {
  Matrix t(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
  Matrix c(a.n_);
  for (int i = 0; i < a.n_; ++i)
    for (int k = 0; k < a.n_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (int j = 0; j < a.n_; ++j)
        if (!b(k, j).is_zero()) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

namespace {

// Row reduction of [m | aug] in place. Returns the determinant of m.
Scalar eliminate(Matrix m, Matrix* aug) {
  const int n = m.size();
  Scalar det(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      // Any invertible entry works; prefer constants to keep fractions small.
      if (pivot < 0 || (m(r, col).is_constant() && !m(pivot, col).is_constant())) pivot = r;
    }
    if (pivot < 0) return Scalar();
    if (m(pivot, col).numerator().bands().size() != 1)
      throw std::domain_error("pivot is a sum of several exponential bands");
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(m(pivot, j), m(col, j));
        if (aug) std::swap((*aug)(pivot, j), (*aug)(col, j));
      }
      det = -det;
    }
    const Scalar p = m(col, col);
    det *= p;
    const Scalar inv = p.reciprocal();
    for (int j = 0; j < n; ++j) {
      m(col, j) *= inv;
      if (aug) (*aug)(col, j) *= inv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || m(r, col).is_zero()) continue;
      const Scalar f = m(r, col);
      for (int j = 0; j < n; ++j) {
        if (!m(col, j).is_zero()) m(r, j) -= f * m(col, j);
        if (aug && !(*aug)(col, j).is_zero()) (*aug)(r, j) -= f * (*aug)(col, j);
      }
    }
  }
  return det;
}

}  // namespace

Scalar Matrix::determinant() const { return eliminate(*this, nullptr); }

Matrix Matrix::inverse() const {
  Matrix inv = identity(n_);
  if (eliminate(*this, &inv).is_zero()) throw SingularError("matrix is singular");
  return inv;
}

}  // namespace algebroid
