#include "algebroid/random.hpp"

namespace algebroid {

int RandomSource::integer(int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(gen_() % span);
}

Scalar RandomSource::constant() { return Scalar(integer(-3, 3)); }

Scalar RandomSource::polynomial(const Chart& chart) {
  const int n = chart.base_dimension();
  std::vector<Poly::Term> terms;
  const int count = integer(1, 3);
  for (int t = 0; t < count; ++t) {
    const int c = integer(-3, 3);
    if (c == 0) continue;
    const int deg = n == 0 ? 0 : integer(0, max_degree_);
    Monomial m;
    for (int d = 0; d < deg; ++d) m = m * Monomial::variable(chart.slot(integer(0, n - 1)));
    terms.emplace_back(m, mpq_class(c));
  }
  return Scalar(Poly::from_terms(std::move(terms)));
}

Scalar RandomSource::nonzero_polynomial(const Chart& chart) {
  for (;;) {
    Scalar s = polynomial(chart);
    if (!s.is_zero()) return s;
  }
}

Section RandomSource::section(const Chart& chart, int rank) {
  Section s(rank);
  for (int k = 0; k < rank; ++k) s[k] = polynomial(chart);
  return s;
}

Cosection RandomSource::form(const Chart& chart, int rank, int degree) {
  Cosection w(rank, degree);
  for (Mask m : masks_of_degree(rank, degree)) w.add(m, polynomial(chart));
  return w;
}

Multisection RandomSource::bivector(const Chart& chart, int rank) {
  Multisection p(rank, 2);
  for (Mask m : masks_of_degree(rank, 2)) p.add(m, polynomial(chart));
  return p;
}

Matrix RandomSource::symmetric(const Chart& chart, int rank) {
  Matrix h(rank);
  for (int a = 0; a < rank; ++a)
    for (int b = a; b < rank; ++b) {
      h(a, b) = polynomial(chart);
      h(b, a) = h(a, b);
    }
  return h;
}

Matrix RandomSource::nondegenerate_symmetric(const Chart& chart, int rank) {
  for (;;) {
    Matrix h = symmetric(chart, rank);
    if (!h.determinant().is_zero()) return h;
  }
}

}  // namespace algebroid
