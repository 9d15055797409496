#pragma once

#include <cstdint>
#include <random>

#include "algebroid/algebroid.hpp"

namespace algebroid {

// Deterministic generator of small random polynomial data. Integers are
// drawn by reduction modulo the range so that streams do not depend on the
// standard library's distribution implementations.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed, int max_degree = 2) : gen_(seed), max_degree_(max_degree) {}

  int max_degree() const { return max_degree_; }
  // Uniform in [lo, hi].
  int integer(int lo, int hi);
  // Polynomial in the base coordinates of the chart with coefficients in
  // [-3, 3] and total degree at most max_degree; constants on a point.
  Scalar polynomial(const Chart& chart);
  Scalar nonzero_polynomial(const Chart& chart);
  Scalar constant();
  Section section(const Chart& chart, int rank);
  Cosection form(const Chart& chart, int rank, int degree);
  Multisection bivector(const Chart& chart, int rank);
  Matrix symmetric(const Chart& chart, int rank);
  // Symmetric with nonzero determinant.
  Matrix nondegenerate_symmetric(const Chart& chart, int rank);

 private:
  std::mt19937_64 gen_;
  int max_degree_;
};

}  // namespace algebroid
