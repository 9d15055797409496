#include "algebroid/lsa.hpp"

#include <array>

namespace algebroid {

namespace {

void check_cosection(int r, const Cosection& a) {
  if (a.rank() != r || a.degree() != 1) throw std::invalid_argument("expected a 1-cosection of the algebroid rank");
}

Cosection dual_frame(int r, int a) { return Cosection::basis(r, bit(a)); }

}  // namespace

LeftSymmetricAlgebroid LeftSymmetricAlgebroid::candidate(AnchoredBundle bundle, std::vector<Section> table) {
  const int r = bundle.rank();
  if (static_cast<int>(table.size()) != r * r) throw std::invalid_argument("product table must have rank^2 entries");
  for (const auto& t : table) check_section(bundle, t);
  LeftSymmetricAlgebroid s;
  s.bundle_ = std::move(bundle);
  s.table_ = std::move(table);
  return s;
}

LeftSymmetricAlgebroid LeftSymmetricAlgebroid::validated(AnchoredBundle bundle, std::vector<Section> table) {
  LeftSymmetricAlgebroid s = candidate(std::move(bundle), std::move(table));
  DefectReport rep = check_lsa_axioms(s);
  if (!rep.passed()) throw StructureError("left-symmetric algebroid axioms fail", std::move(rep));
  return s;
}

Section ls_product(const LeftSymmetricAlgebroid& s, const Section& x, const Section& y) {
  return table_product(s.bundle(), s.table(), x, y);
}

LieAlgebroid commutator_algebroid(const LeftSymmetricAlgebroid& s) {
  const int r = s.rank();
  std::vector<Section> table(static_cast<std::size_t>(r * r), Section(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) table[i * r + j] = s.product(i, j) - s.product(j, i);
  return LieAlgebroid::candidate(s.bundle(), std::move(table));
}

DefectReport check_lsa_axioms(const LeftSymmetricAlgebroid& s, Exec exec) {
  const int r = s.rank();
  std::vector<std::array<int, 3>> idx;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      for (int k = 0; k < r; ++k) idx.push_back({i, j, k});
  auto e = [r](int i) { return Section::frame(r, i); };
  auto assoc = [&](int i, int j, int k) {
    return ls_product(s, s.product(i, j), e(k)) - ls_product(s, e(i), s.product(j, k));
  };
  auto vals = tabulate(
      idx.size(),
      [&](std::size_t t) {
        const auto [i, j, k] = idx[t];
        return assoc(i, j, k) - assoc(j, i, k);
      },
      exec);
  DefectTensor at;
  for (std::size_t t = 0; t < idx.size(); ++t)
    for (int m = 0; m < r; ++m) at.add({idx[t][0], idx[t][1], idx[t][2], m}, vals[t][m]);
  DefectReport rep;
  rep.add("associator_symmetry", std::move(at));
  rep.add("anchor_morphism", check_lie_axioms(commutator_algebroid(s), exec).at("anchor_morphism"));
  return rep;
}

DefectTensor section_associator_probe(const LeftSymmetricAlgebroid& s, Exec exec) {
  const int r = s.rank();
  const int n = s.chart().dimension();
  std::vector<std::array<int, 4>> idx;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      for (int k = 0; k < r; ++k)
        for (int a = 0; a < n; ++a) idx.push_back({i, j, k, a});
  auto e = [r](int i) { return Section::frame(r, i); };
  auto assoc = [&](const Section& x, const Section& y, const Section& z) {
    return ls_product(s, ls_product(s, x, y), z) - ls_product(s, x, ls_product(s, y, z));
  };
  auto vals = tabulate(
      idx.size(),
      [&](std::size_t t) {
        const auto [i, j, k, a] = idx[t];
        const Section z = Scalar::variable(s.chart().slot(a)) * e(k);
        return assoc(e(i), e(j), z) - assoc(e(j), e(i), z);
      },
      exec);
  DefectTensor out;
  for (std::size_t t = 0; t < idx.size(); ++t)
    for (int m = 0; m < r; ++m) out.add({idx[t][0], idx[t][1], idx[t][2], idx[t][3], m}, vals[t][m]);
  return out;
}

LieAlgebroid sub_adjacent(const LeftSymmetricAlgebroid& s) {
  DefectReport rep = check_lsa_axioms(s);
  if (!rep.passed()) throw StructureError("not a left-symmetric algebroid", std::move(rep));
  return commutator_algebroid(s);
}

Cosection left_dual(const LeftSymmetricAlgebroid& s, const Section& x, const Cosection& a) {
  const int r = s.rank();
  check_cosection(r, a);
  std::vector<Scalar> out(static_cast<std::size_t>(r));
  for (int j = 0; j < r; ++j) {
    out[j] = s.bundle().derive(x, a[j]);
    out[j] -= pairing(a, ls_product(s, x, Section::frame(r, j)));
  }
  return Cosection::linear(out);
}

Cosection right_dual(const LeftSymmetricAlgebroid& s, const Section& x, const Cosection& a) {
  const int r = s.rank();
  check_cosection(r, a);
  std::vector<Scalar> out(static_cast<std::size_t>(r));
  for (int j = 0; j < r; ++j) out[j] = -pairing(a, ls_product(s, Section::frame(r, j), x));
  return Cosection::linear(out);
}

void check_symmetric(const Matrix& h, int rank) {
  if (h.size() != rank) throw std::invalid_argument("symmetric tensor size does not match the rank");
  if (!h.is_symmetric()) throw std::invalid_argument("tensor is not symmetric");
}

Section h_sharp(const Matrix& h, const Cosection& a) {
  const int r = h.size();
  Section out(r);
  for (const auto& [m, c] : a.terms()) {
    const int i = std::countr_zero(m);
    for (int j = 0; j < r; ++j)
      if (!h(i, j).is_zero()) out[j] += c * h(i, j);
  }
  return out;
}

Scalar h_value(const Matrix& h, const Cosection& a, const Cosection& b) { return pairing(b, h_sharp(h, a)); }

Scalar kv_value(const LeftSymmetricAlgebroid& s, const Matrix& h, const Cosection& a, const Cosection& b,
                const Cosection& c) {
  const Section ha = h_sharp(h, a), hb = h_sharp(h, b), hc = h_sharp(h, c);
  const Section ab = ls_product(s, ha, hb), ba = ls_product(s, hb, ha);
  Scalar v = s.bundle().derive(ha, pairing(c, hb));
  v -= s.bundle().derive(hb, pairing(c, ha));
  v += pairing(a, ls_product(s, hb, hc));
  v -= pairing(b, ls_product(s, ha, hc));
  v -= pairing(c, ab - ba);
  return v;
}

KVTensor kv_bracket(const LeftSymmetricAlgebroid& s, const Matrix& h, Exec exec) {
  const int r = s.rank();
  check_symmetric(h, r);
  std::vector<std::array<int, 3>> idx;
  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b < r; ++b)
      for (int c = 0; c < r; ++c) idx.push_back({a, b, c});
  auto vals = tabulate(
      idx.size(),
      [&](std::size_t t) {
        const auto [a, b, c] = idx[t];
        return kv_value(s, h, dual_frame(r, a), dual_frame(r, b), dual_frame(r, c));
      },
      exec);
  KVTensor out(r, 2);
  for (std::size_t t = 0; t < idx.size(); ++t) out.set(bit(idx[t][0]) | bit(idx[t][1]), idx[t][2], vals[t]);
  return out;
}

// ---- cochains ------------------------------------------------------------

Cochain one_cochain(const Cosection& phi) {
  Cochain c(phi.rank(), 0);
  for (const auto& [m, v] : phi.terms()) c.set(0, std::countr_zero(m), v);
  return c;
}

Cochain metric_cochain(const Matrix& g) {
  Cochain c(g.size(), 1);
  for (int i = 0; i < g.size(); ++i)
    for (int j = 0; j < g.size(); ++j) c.set(bit(i), j, g(i, j));
  return c;
}

Cochain coboundary(const LeftSymmetricAlgebroid& s, const Cochain& w, Exec exec) {
  const int r = s.rank();
  if (w.rank() != r) throw std::invalid_argument("coboundary: rank mismatch");
  const int p = w.skew_degree() + 1;  // skew slots of the result
  Cochain out(r, p);
  if (p > r) return out;
  // w evaluated with e_l in front of the sorted set R, last slot j.
  auto front = [&](int l, Mask R, int j) {
    if (R & bit(l)) return Scalar();
    const Scalar v = w.value(R | bit(l), j);
    return std::popcount(R & (bit(l) - 1)) % 2 ? -v : v;
  };
  std::vector<std::pair<Mask, int>> keys;
  for (Mask I : masks_of_degree(r, p))
    for (int j = 0; j < r; ++j) keys.emplace_back(I, j);
  auto vals = tabulate(
      keys.size(),
      [&](std::size_t t) {
        const auto [I, j] = keys[t];
        const std::vector<int> idx = mask_indices(I);
        Scalar v;
        for (std::size_t m = 0; m < idx.size(); ++m) {
          const Mask rest = I & ~bit(idx[m]);
          Scalar term = s.bundle().derive(idx[m], w.value(rest, j));
          const Section& prod = s.product(idx[m], j);
          for (int l = 0; l < r; ++l)
            if (!prod[l].is_zero()) term -= prod[l] * w.value(rest, l);
          if (m % 2) {
            v -= term;
          } else {
            v += term;
          }
        }
        for (std::size_t m = 0; m < idx.size(); ++m)
          for (std::size_t n = m + 1; n < idx.size(); ++n) {
            const Section br = s.product(idx[m], idx[n]) - s.product(idx[n], idx[m]);
            const Mask rest = I & ~bit(idx[m]) & ~bit(idx[n]);
            Scalar term;
            for (int l = 0; l < r; ++l)
              if (!br[l].is_zero()) term += br[l] * front(l, rest, j);
            if ((m + n) % 2) {
              v -= term;
            } else {
              v += term;
            }
          }
        return v;
      },
      exec);
  for (std::size_t t = 0; t < keys.size(); ++t) out.set(keys[t].first, keys[t].second, vals[t]);
  return out;
}

Cosection antisymmetrized_coboundary(const LeftSymmetricAlgebroid& s, const Cosection& phi) {
  const Cochain d = coboundary(s, one_cochain(phi), Exec::Serial);
  const int r = s.rank();
  Cosection out(r, 2);
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) out.add(bit(i) | bit(j), d.value(bit(i), j) - d.value(bit(j), i));
  return out;
}

DefectReport delta_g_check(const LeftSymmetricAlgebroid& s, const Matrix& g) {
  check_symmetric(g, s.rank());
  DefectReport rep;
  rep.add("delta_g", DefectTensor::from(coboundary(s, metric_cochain(g))));
  return rep;
}

EquivalenceReport nondeg_equivalence_report(const LeftSymmetricAlgebroid& s, const Matrix& h) {
  check_symmetric(h, s.rank());
  const Matrix g = h.inverse();
  EquivalenceReport out;
  out.details.add("kv_bracket", DefectTensor::from(kv_bracket(s, h)));
  out.details.add("delta_g", delta_g_check(s, g).at("delta_g"));
  out.left_vanishes = out.details.vanishes("kv_bracket");
  out.right_vanishes = out.details.vanishes("delta_g");
  return out;
}

// ---- dual product --------------------------------------------------------

Cosection dual_product(const LeftSymmetricAlgebroid& s, const Matrix& h, const Cosection& a, const Cosection& b) {
  const LieAlgebroid l = commutator_algebroid(s);
  return lie_derivative(l, h_sharp(h, a), b) - right_dual(s, h_sharp(h, b), a) -
         exterior_derivative_of(l, h_value(h, a, b));
}

DefectReport sharp_compat_identity(const LeftSymmetricAlgebroid& s, const Matrix& h, Exec exec) {
  const int r = s.rank();
  check_symmetric(h, r);
  const KVTensor kv = kv_bracket(s, h, exec);
  std::vector<std::array<int, 2>> idx;
  for (int a = 0; a < r; ++a)
    for (int c = 0; c < r; ++c) idx.push_back({a, c});
  auto vals = tabulate(
      idx.size(),
      [&](std::size_t t) {
        const auto [a, c] = idx[t];
        const Cosection ea = dual_frame(r, a), ec = dual_frame(r, c);
        Section rhs = h_sharp(h, dual_product(s, h, ea, ec)) - ls_product(s, h_sharp(h, ea), h_sharp(h, ec));
        Section lhs(r);
        for (int k = 0; k < r; ++k) lhs[k] = kv.at({a, k}, c);
        return lhs - rhs;
      },
      exec);
  DefectTensor t;
  for (std::size_t p = 0; p < idx.size(); ++p)
    for (int k = 0; k < r; ++k) t.add({idx[p][0], idx[p][1], k}, vals[p][k]);
  DefectReport rep;
  rep.add("identity", std::move(t));
  return rep;
}

DefectReport ls_obstruction_identity(const LeftSymmetricAlgebroid& s, const Matrix& h, Exec exec) {
  const int r = s.rank();
  check_symmetric(h, r);
  const KVTensor kv = kv_bracket(s, h, exec);
  const LieAlgebroid l = commutator_algebroid(s);
  // [[h,h]](x, ., y) as a section.
  auto middle = [&](int x, int y) {
    Section v(r);
    for (int k = 0; k < r; ++k) v[k] = kv.at({x, k}, y);
    return v;
  };
  std::vector<std::array<int, 3>> idx;
  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b < r; ++b)
      for (int c = 0; c < r; ++c) idx.push_back({a, b, c});
  auto vals = tabulate(
      idx.size(),
      [&](std::size_t t) {
        const auto [a, b, c] = idx[t];
        const Cosection ea = dual_frame(r, a), eb = dual_frame(r, b), ec = dual_frame(r, c);
        auto prod = [&](const Cosection& x, const Cosection& y) { return dual_product(s, h, x, y); };
        const Cosection lhs = prod(prod(ea, eb), ec) - prod(ea, prod(eb, ec)) -
                              (prod(prod(eb, ea), ec) - prod(eb, prod(ea, ec)));
        const Cosection lie_part = lie_derivative(l, middle(a, b) - middle(b, a), ec);
        Section out(r);
        for (int i = 0; i < r; ++i) {
          const Section x = Section::frame(r, i);
          const Cosection la = left_dual(s, x, ea), lb = left_dual(s, x, eb);
          Scalar rhs = lie_part[i];
          for (int k = 0; k < r; ++k) {
            if (!la[k].is_zero()) rhs += la[k] * kv.at({b, k}, c);
            if (!lb[k].is_zero()) rhs -= lb[k] * kv.at({a, k}, c);
          }
          out[i] = lhs[i] - rhs;
        }
        return out;
      },
      exec);
  DefectTensor t;
  for (std::size_t p = 0; p < idx.size(); ++p)
    for (int i = 0; i < r; ++i) t.add({idx[p][0], idx[p][1], idx[p][2], i}, vals[p][i]);
  DefectReport rep;
  rep.add("identity", std::move(t));
  return rep;
}

LeftSymmetricAlgebroid build_dual_lsa(const LeftSymmetricAlgebroid& s, const Matrix& h) {
  const int r = s.rank();
  check_symmetric(h, r);
  std::vector<std::vector<Scalar>> anchor;
  for (int a = 0; a < r; ++a) anchor.push_back(s.bundle().vector_field(h_sharp(h, dual_frame(r, a))));
  std::vector<Section> table(static_cast<std::size_t>(r * r));
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      table[a * r + b] = Section(dual_product(s, h, dual_frame(r, a), dual_frame(r, b)).components());
  return LeftSymmetricAlgebroid::candidate(AnchoredBundle(s.chart(), std::move(anchor)), std::move(table));
}

namespace {

void require_flat_torsion_free(const Connection& c) {
  DefectReport rep;
  rep.add("torsion", torsion(c));
  rep.add("curvature", curvature(c));
  if (!rep.passed()) throw StructureError("connection is not flat and torsion-free", std::move(rep));
}

}  // namespace

LeftSymmetricAlgebroid lsa_from_connection(const Connection& c) {
  require_flat_torsion_free(c);
  return LeftSymmetricAlgebroid::candidate(c.algebroid().bundle(), c.table());
}

LeftSymmetricAlgebroid lsa_bar_nabla(const Connection& c) {
  require_flat_torsion_free(c);
  const int r = c.rank();
  const LieAlgebroid ext = direct_sum_line(c.algebroid());
  std::vector<Section> table(static_cast<std::size_t>((r + 1) * (r + 1)), Section(r + 1));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) table[i * (r + 1) + j][k] = c.christoffel(i, j)[k];
  return LeftSymmetricAlgebroid::candidate(ext.bundle(), std::move(table));
}

}  // namespace algebroid
