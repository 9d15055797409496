#include "algebroid/algebroid.hpp"

#include <array>
#include <map>

namespace algebroid {

namespace {

void check_scalar_slots(const Chart& chart, const Scalar& f) {
  if (f.support() & ~chart.allowed_slots()) throw std::invalid_argument("variable mismatch: scalar uses an unknown coordinate");
}

void check_table(int r, const std::vector<Section>& table, const char* what) {
  if (static_cast<int>(table.size()) != r * r) throw std::invalid_argument(std::string(what) + ": table must have rank^2 entries");
  for (const auto& s : table)
    if (s.rank() != r) throw std::invalid_argument(std::string(what) + ": table entry has wrong rank");
}

}  // namespace

// ---- AnchoredBundle ------------------------------------------------------

AnchoredBundle::AnchoredBundle(Chart chart, std::vector<std::vector<Scalar>> anchor)
    : chart_(std::move(chart)), anchor_(std::move(anchor)) {
  if (rank() > kMaxRank) throw std::invalid_argument("rank exceeds 16");
  for (const auto& row : anchor_) {
    if (static_cast<int>(row.size()) != chart_.dimension())
      throw std::invalid_argument("anchor row length must equal the base dimension");
    for (const auto& f : row) {
      check_scalar_slots(chart_, f);
      if (!chart_.has_line() && !f.is_exp_free())
        throw std::invalid_argument("anchor of a manifold-level bundle must be exp-free");
    }
  }
}

AnchoredBundle AnchoredBundle::tangent(const Chart& chart) {
  const int n = chart.dimension();
  std::vector<std::vector<Scalar>> a(static_cast<std::size_t>(n), std::vector<Scalar>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) a[i][i] = Scalar(1);
  return AnchoredBundle(chart, std::move(a));
}

Scalar AnchoredBundle::derive(int i, const Scalar& f) const {
  Scalar out;
  const auto& row = anchor(i);
  for (int a = 0; a < chart_.dimension(); ++a) {
    if (row[a].is_zero()) continue;
    Scalar d = f.derivative(chart_.slot(a));
    if (!d.is_zero()) out += row[a] * d;
  }
  return out;
}

Scalar AnchoredBundle::derive(const Section& x, const Scalar& f) const {
  Scalar out;
  for (int i = 0; i < rank(); ++i)
    if (!x[i].is_zero()) out += x[i] * derive(i, f);
  return out;
}

std::vector<Scalar> AnchoredBundle::vector_field(const Section& x) const {
  std::vector<Scalar> v(static_cast<std::size_t>(chart_.dimension()));
  for (int i = 0; i < rank(); ++i) {
    if (x[i].is_zero()) continue;
    for (int a = 0; a < chart_.dimension(); ++a)
      if (!anchor(i)[a].is_zero()) v[a] += x[i] * anchor(i)[a];
  }
  return v;
}

void check_scalar(const AnchoredBundle& b, const Scalar& f) { check_scalar_slots(b.chart(), f); }

void check_section(const AnchoredBundle& b, const Section& x) {
  if (x.rank() != b.rank()) throw std::invalid_argument("section rank does not match the bundle");
  for (int i = 0; i < x.rank(); ++i) check_scalar(b, x[i]);
}

Scalar anchor_apply(const AnchoredBundle& b, const Section& x, const Scalar& f) {
  check_section(b, x);
  check_scalar(b, f);
  return b.derive(x, f);
}

// ---- LieAlgebroid --------------------------------------------------------

LieAlgebroid LieAlgebroid::candidate(AnchoredBundle bundle, std::vector<Section> table) {
  const int r = bundle.rank();
  check_table(r, table, "lie algebroid");
  for (const auto& s : table) check_section(bundle, s);
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j)
      if (table[i * r + j] != -table[j * r + i]) throw std::invalid_argument("bracket table is not antisymmetric");
  LieAlgebroid l;
  l.bundle_ = std::move(bundle);
  l.table_ = std::move(table);
  return l;
}

LieAlgebroid LieAlgebroid::validated(AnchoredBundle bundle, std::vector<Section> table) {
  LieAlgebroid l = candidate(std::move(bundle), std::move(table));
  DefectReport rep = check_lie_axioms(l);
  if (!rep.passed()) throw StructureError("Lie algebroid axioms fail", std::move(rep));
  return l;
}

LieAlgebroid LieAlgebroid::tangent(const Chart& chart) {
  const int n = chart.dimension();
  return candidate(AnchoredBundle::tangent(chart), std::vector<Section>(static_cast<std::size_t>(n * n), Section(n)));
}

Section table_product(const AnchoredBundle& b, const std::vector<Section>& table, const Section& x,
                      const Section& y) {
  const int r = b.rank();
  Section out(r);
  for (int i = 0; i < r; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < r; ++j) {
      if (y[j].is_zero()) continue;
      const Section& t = table[static_cast<std::size_t>(i * r + j)];
      if (t.is_zero()) continue;
      out += (x[i] * y[j]) * t;
    }
  }
  for (int k = 0; k < r; ++k)
    if (!y[k].is_zero()) out[k] += b.derive(x, y[k]);
  return out;
}

Section lie_bracket(const LieAlgebroid& l, const Section& x, const Section& y) {
  Section out = table_product(l.bundle(), l.table(), x, y);
  for (int k = 0; k < l.rank(); ++k)
    if (!x[k].is_zero()) out[k] -= l.bundle().derive(y, x[k]);
  return out;
}

DefectReport check_lie_axioms(const LieAlgebroid& l, Exec exec) {
  const int r = l.rank();
  const int n = l.chart().dimension();
  auto e = [r](int i) { return Section::frame(r, i); };

  std::vector<std::array<int, 3>> triples;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      for (int k = j + 1; k < r; ++k) triples.push_back({i, j, k});
  auto jac = tabulate(
      triples.size(),
      [&](std::size_t t) {
        const auto [i, j, k] = triples[t];
        return lie_bracket(l, l.bracket(i, j), e(k)) + lie_bracket(l, l.bracket(j, k), e(i)) +
               lie_bracket(l, l.bracket(k, i), e(j));
      },
      exec);

  std::vector<std::array<int, 2>> pairs;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) pairs.push_back({i, j});
  auto anch = tabulate(
      pairs.size(),
      [&](std::size_t p) {
        const auto [i, j] = pairs[p];
        std::vector<Scalar> v = l.bundle().vector_field(l.bracket(i, j));
        for (int a = 0; a < n; ++a)
          v[a] -= l.bundle().derive(i, l.bundle().anchor(j)[a]) - l.bundle().derive(j, l.bundle().anchor(i)[a]);
        return v;
      },
      exec);

  DefectTensor jt, at;
  for (std::size_t t = 0; t < triples.size(); ++t)
    for (int m = 0; m < r; ++m) jt.add({triples[t][0], triples[t][1], triples[t][2], m}, jac[t][m]);
  for (std::size_t p = 0; p < pairs.size(); ++p)
    for (int a = 0; a < n; ++a) at.add({pairs[p][0], pairs[p][1], a}, anch[p][a]);
  DefectReport rep;
  rep.add("jacobi", std::move(jt));
  rep.add("anchor_morphism", std::move(at));
  return rep;
}

// ---- Schouten bracket ----------------------------------------------------
//
// Sign convention: [X, f] = rho(X) f, [P, Q] = -(-1)^{(p-1)(q-1)} [Q, P] and
// [P, Q ^ R] = [P, Q] ^ R + (-1)^{(p-1) q} Q ^ [P, R]. Expanding in the frame,
//   [p e_I, q e_J] = p [e_I, q] ^ e_J + p q [e_I, e_J]
//                    - (-1)^{(b-1)(a+1)} q [e_J, p] ^ e_I.

namespace {

class Schouten {
 public:
  explicit Schouten(const LieAlgebroid& l) : l_(l), r_(l.rank()) {}

  // [e_I, f] = sum_m (-1)^{a-m} (rho(e_{i_m}) f) e_{I - i_m}, m 1-based.
  Multisection with_function(Mask I, const Scalar& f) const {
    const int a = mask_degree(I);
    Multisection out(r_, a - 1);
    int m = 1;
    for (int i : mask_indices(I)) {
      Scalar d = l_.bundle().derive(i, f);
      if (!d.is_zero()) out.add(I & ~bit(i), (a - m) % 2 ? -d : d);
      ++m;
    }
    return out;
  }

  // [e_I, e_J] for nonempty I and J.
  const Multisection& frames(Mask I, Mask J) {
    auto it = memo_.find({I, J});
    if (it != memo_.end()) return it->second;
    const int a = mask_degree(I);
    const int b = mask_degree(J);
    Multisection out(r_, a + b - 1);
    if (b == 1) {
      const int j = std::countr_zero(J);
      if (a == 1) {
        out = as_multisection(l_.bracket(std::countr_zero(I), j));
      } else {
        // [e_j, e_I] is a derivation over the wedge factors; flip the sign.
        const std::vector<int> idx = mask_indices(I);
        for (std::size_t m = 0; m < idx.size(); ++m) {
          Mask before = 0, after = 0;
          for (std::size_t k = 0; k < m; ++k) before |= bit(idx[k]);
          for (std::size_t k = m + 1; k < idx.size(); ++k) after |= bit(idx[k]);
          Multisection term = wedge(wedge(Multisection::basis(r_, before), as_multisection(l_.bracket(j, idx[m]))),
                                    Multisection::basis(r_, after));
          out -= term;
        }
      }
    } else {
      const int j1 = std::countr_zero(J);
      const Mask rest = J & ~bit(j1);
      out = wedge(frames(I, bit(j1)), Multisection::basis(r_, rest));
      Multisection tail = wedge(Multisection::basis(r_, bit(j1)), frames(I, rest));
      if ((a - 1) % 2) {
        out -= tail;
      } else {
        out += tail;
      }
    }
    return memo_.emplace(std::make_pair(I, J), std::move(out)).first->second;
  }

  Multisection bracket(const Multisection& P, const Multisection& Q) {
    const int deg = P.degree() + Q.degree() - 1;
    Multisection out(r_, deg < 0 ? 0 : deg);
    if (deg < 0) return out;
    for (const auto& [I, p] : P.terms())
      for (const auto& [J, q] : Q.terms()) {
        const int a = mask_degree(I);
        const int b = mask_degree(J);
        if (a >= 1) {
          Multisection t = with_function(I, q);
          if (!t.is_zero()) out += p * wedge(t, Multisection::basis(r_, J));
        }
        if (a >= 1 && b >= 1) {
          const Multisection& f = frames(I, J);
          if (!f.is_zero()) out += (p * q) * f;
        }
        if (b >= 1) {
          Multisection t = with_function(J, p);
          if (!t.is_zero()) {
            Multisection w = q * wedge(t, Multisection::basis(r_, I));
            if ((b - 1) * (a + 1) % 2) {
              out += w;
            } else {
              out -= w;
            }
          }
        }
      }
    return out;
  }

 private:
  const LieAlgebroid& l_;
  int r_;
  std::map<std::pair<Mask, Mask>, Multisection> memo_;
};

}  // namespace

Multisection schouten_bracket(const LieAlgebroid& l, const Multisection& p, const Multisection& q) {
  if (p.rank() != l.rank() || q.rank() != l.rank()) throw std::invalid_argument("schouten: rank mismatch");
  return Schouten(l).bracket(p, q);
}

// ---- Forms ---------------------------------------------------------------

Cosection differential(const LieAlgebroid& l, const Cosection& w) {
  const int r = l.rank();
  if (w.rank() != r) throw std::invalid_argument("differential: rank mismatch");
  const int k = w.degree();
  Cosection out(r, k + 1);
  if (k + 1 > r) return out;
  const std::vector<Mask> masks = masks_of_degree(r, k + 1);
  auto vals = tabulate(
      masks.size(),
      [&](std::size_t t) {
        const Mask I = masks[t];
        const std::vector<int> idx = mask_indices(I);
        Scalar v;
        for (std::size_t m = 0; m < idx.size(); ++m) {
          Scalar d = l.bundle().derive(idx[m], w.coefficient(I & ~bit(idx[m])));
          if (m % 2) {
            v -= d;
          } else {
            v += d;
          }
        }
        for (std::size_t m = 0; m < idx.size(); ++m)
          for (std::size_t n = m + 1; n < idx.size(); ++n) {
            const Section& c = l.bracket(idx[m], idx[n]);
            const Mask rest = I & ~bit(idx[m]) & ~bit(idx[n]);
            Scalar s;
            for (int q = 0; q < r; ++q)
              if (!c[q].is_zero()) s += c[q] * front_insert(w, q, rest);
            if ((m + n) % 2) {
              v -= s;
            } else {
              v += s;
            }
          }
        return v;
      },
      Exec::Serial);
  for (std::size_t t = 0; t < masks.size(); ++t) out.add(masks[t], vals[t]);
  return out;
}

Cosection exterior_derivative_of(const LieAlgebroid& l, const Scalar& f) {
  return differential(l, Cosection::function(l.rank(), f));
}

Cosection lie_derivative(const LieAlgebroid& l, const Section& x, const Cosection& w) {
  Cosection out = interior(x, differential(l, w));
  if (w.degree() > 0) out += differential(l, interior(x, w));
  return out;
}

Multisection lie_derivative(const LieAlgebroid& l, const Section& x, const Multisection& d) {
  return schouten_bracket(l, as_multisection(x), d);
}

Matrix form_matrix(const Cosection& w) {
  if (w.degree() != 2) throw std::invalid_argument("expected a 2-form");
  Matrix m(w.rank());
  for (const auto& [mask, c] : w.terms()) {
    const auto idx = mask_indices(mask);
    m(idx[0], idx[1]) = c;
    m(idx[1], idx[0]) = -c;
  }
  return m;
}

Matrix bivector_matrix(const Multisection& p) {
  if (p.degree() != 2) throw std::invalid_argument("expected a bivector");
  Matrix m(p.rank());
  for (const auto& [mask, c] : p.terms()) {
    const auto idx = mask_indices(mask);
    m(idx[0], idx[1]) = c;
    m(idx[1], idx[0]) = -c;
  }
  return m;
}

DefectReport presymplectic_check(const LieAlgebroid& l, const Cosection& w) {
  if (w.degree() != 2) throw std::invalid_argument("presymplectic_check: expected a 2-form");
  DefectReport rep;
  rep.add("closedness", DefectTensor::from(differential(l, w)));
  return rep;
}

DefectReport symplectic_check(const LieAlgebroid& l, const Cosection& w) {
  DefectReport rep = presymplectic_check(l, w);
  rep.require_nonzero("nondegeneracy", form_matrix(w).determinant());
  return rep;
}

LieAlgebroid direct_sum_line(const LieAlgebroid& l) {
  const int r = l.rank();
  auto anchor = l.bundle().anchor_matrix();
  anchor.emplace_back(static_cast<std::size_t>(l.chart().dimension()));
  std::vector<Section> table(static_cast<std::size_t>((r + 1) * (r + 1)), Section(r + 1));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) table[i * (r + 1) + j][k] = l.bracket(i, j)[k];
  return LieAlgebroid::candidate(AnchoredBundle(l.chart(), std::move(anchor)), std::move(table));
}

// ---- Connections ---------------------------------------------------------

Connection::Connection(LieAlgebroid l, std::vector<Section> table) : l_(std::move(l)), table_(std::move(table)) {
  check_table(l_.rank(), table_, "connection");
  for (const auto& s : table_) check_section(l_.bundle(), s);
}

Section connection_apply(const Connection& c, const Section& x, const Section& y) {
  return table_product(c.algebroid().bundle(), c.table(), x, y);
}

DefectTensor torsion(const Connection& c, Exec exec) {
  const int r = c.rank();
  std::vector<std::array<int, 2>> pairs;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) pairs.push_back({i, j});
  auto vals = tabulate(
      pairs.size(),
      [&](std::size_t p) {
        const auto [i, j] = pairs[p];
        return c.christoffel(i, j) - c.christoffel(j, i) - c.algebroid().bracket(i, j);
      },
      exec);
  DefectTensor t;
  for (std::size_t p = 0; p < pairs.size(); ++p)
    for (int k = 0; k < r; ++k) t.add({pairs[p][0], pairs[p][1], k}, vals[p][k]);
  return t;
}

DefectTensor curvature(const Connection& c, Exec exec) {
  const int r = c.rank();
  std::vector<std::array<int, 3>> idx;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      for (int k = 0; k < r; ++k) idx.push_back({i, j, k});
  auto e = [r](int i) { return Section::frame(r, i); };
  auto vals = tabulate(
      idx.size(),
      [&](std::size_t t) {
        const auto [i, j, k] = idx[t];
        return connection_apply(c, e(i), c.christoffel(j, k)) - connection_apply(c, e(j), c.christoffel(i, k)) -
               connection_apply(c, c.algebroid().bracket(i, j), e(k));
      },
      exec);
  DefectTensor t;
  for (std::size_t p = 0; p < idx.size(); ++p)
    for (int l = 0; l < r; ++l) t.add({idx[p][0], idx[p][1], idx[p][2], l}, vals[p][l]);
  return t;
}

bool is_flat(const Connection& c) { return curvature(c).vanishes(); }
bool is_torsion_free(const Connection& c) { return torsion(c).vanishes(); }

Connection dual_connection(const Connection& c, const Matrix& g) {
  const int r = c.rank();
  if (g.size() != r || !g.is_symmetric()) throw std::invalid_argument("dual_connection: g must be symmetric of size rank");
  const Matrix ginv = g.inverse();
  std::vector<Section> table(static_cast<std::size_t>(r * r), Section(r));
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) {
      std::vector<Scalar> inner(static_cast<std::size_t>(r));  // indexed by j
      for (int j = 0; j < r; ++j) {
        Scalar v = c.algebroid().bundle().derive(i, g(j, k));
        for (int l = 0; l < r; ++l)
          if (!c.christoffel(i, j)[l].is_zero()) v -= c.christoffel(i, j)[l] * g(l, k);
        inner[j] = v;
      }
      for (int m = 0; m < r; ++m) {
        Scalar s;
        for (int j = 0; j < r; ++j)
          if (!inner[j].is_zero() && !ginv(m, j).is_zero()) s += ginv(m, j) * inner[j];
        table[i * r + k][m] = s;
      }
    }
  return Connection(c.algebroid(), std::move(table));
}

Scalar covariant_metric_derivative(const Connection& c, const Matrix& g, int i, int j, int k) {
  Scalar v = c.algebroid().bundle().derive(i, g(j, k));
  for (int l = 0; l < c.rank(); ++l) {
    if (!c.christoffel(i, j)[l].is_zero()) v -= c.christoffel(i, j)[l] * g(l, k);
    if (!c.christoffel(i, k)[l].is_zero()) v -= c.christoffel(i, k)[l] * g(j, l);
  }
  return v;
}

}  // namespace algebroid
