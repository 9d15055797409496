#include "algebroid/manifold.hpp"

namespace algebroid {

namespace {

void check_pair(int n, const JKVPair& pair) {
  check_symmetric(pair.h, n);
  if (pair.e.rank() != n) throw std::invalid_argument("E must be a vector field of the patch dimension");
}

Scalar dot(const Section& x, const Section& y) {
  Scalar v;
  for (int k = 0; k < x.rank(); ++k)
    if (!x[k].is_zero() && !y[k].is_zero()) v += x[k] * y[k];
  return v;
}

// g(x, y) for a covariant matrix g.
Scalar metric(const Matrix& g, const Section& x, const Section& y) {
  Scalar v;
  for (int i = 0; i < g.size(); ++i)
    for (int j = 0; j < g.size(); ++j)
      if (!x[i].is_zero() && !y[j].is_zero() && !g(i, j).is_zero()) v += x[i] * y[j] * g(i, j);
  return v;
}

Section row(const Matrix& m, int a) {
  Section s(m.size());
  for (int k = 0; k < m.size(); ++k) s[k] = m(a, k);
  return s;
}

// (nabla_x g)(y, z) for covariant g.
Scalar metric_derivative(const Connection& c, const Matrix& g, const Section& x, const Section& y,
                         const Section& z) {
  return c.algebroid().bundle().derive(x, metric(g, y, z)) - metric(g, connection_apply(c, x, y), z) -
         metric(g, y, connection_apply(c, x, z));
}

struct Derivatives {
  std::vector<Matrix> dh;  // dh[i] = nabla_i h
  // (nabla_{h# e^a} h)^{bc}
  Scalar along_sharp(const Matrix& h, int a, int b, int c) const {
    Scalar v;
    for (int i = 0; i < h.size(); ++i)
      if (!h(a, i).is_zero() && !dh[i](b, c).is_zero()) v += h(a, i) * dh[i](b, c);
    return v;
  }
  Scalar along(const Section& x, int b, int c) const {
    Scalar v;
    for (int i = 0; i < x.rank(); ++i)
      if (!x[i].is_zero() && !dh[i](b, c).is_zero()) v += x[i] * dh[i](b, c);
    return v;
  }
};

Derivatives derivatives(const Connection& c, const Matrix& h) {
  Derivatives d;
  for (int i = 0; i < c.rank(); ++i) d.dh.push_back(contravariant_derivative(c, h, i));
  return d;
}

}  // namespace

AffinePatch::AffinePatch(const Chart& chart, std::vector<Section> christoffel)
    : c_(LieAlgebroid::tangent(chart), std::move(christoffel)) {
  if (chart.has_line()) throw std::invalid_argument("affine patch charts carry no line variable");
  DefectReport rep;
  rep.add("torsion", torsion(c_));
  rep.add("curvature", curvature(c_));
  if (!rep.passed()) throw StructureError("connection is not flat and torsion-free", std::move(rep));
}

AffinePatch AffinePatch::flat(const Chart& chart) {
  const int n = chart.dimension();
  return AffinePatch(chart, std::vector<Section>(static_cast<std::size_t>(n * n), Section(n)));
}

JacobiLSA AffinePatch::bar_nabla_jlsa() const {
  const int n = dimension();
  return JacobiLSA::candidate(lsa_bar_nabla(c_), Cosection::basis(n + 1, bit(n)));
}

Matrix contravariant_derivative(const Connection& c, const Matrix& h, int i) {
  const int n = c.rank();
  std::vector<std::vector<Scalar>> m(static_cast<std::size_t>(n), std::vector<Scalar>(static_cast<std::size_t>(n)));
  for (int b = 0; b < n; ++b)
    for (int k = b; k < n; ++k) {
      Scalar v = c.algebroid().bundle().derive(i, h(b, k));
      for (int l = 0; l < n; ++l) {
        const Section& g = c.christoffel(i, l);
        if (!g[b].is_zero() && !h(l, k).is_zero()) v += g[b] * h(l, k);
        if (!g[k].is_zero() && !h(b, l).is_zero()) v += g[k] * h(b, l);
      }
      m[b][k] = v;
      m[k][b] = v;
    }
  return Matrix(std::move(m));
}

DefectTensor codazzi_defect(const AffinePatch& p, const Matrix& g) {
  const int n = p.dimension();
  check_symmetric(g, n);
  DefectTensor t;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k)
        t.add({i, j, k}, covariant_metric_derivative(p.connection(), g, i, j, k) -
                             covariant_metric_derivative(p.connection(), g, j, i, k));
  return t;
}

DefectTensor kv_manifold_defect(const AffinePatch& p, const Matrix& h) {
  const int n = p.dimension();
  check_symmetric(h, n);
  const Derivatives d = derivatives(p.connection(), h);
  DefectTensor t;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = 0; c < n; ++c) t.add({a, b, c}, d.along_sharp(h, a, b, c) - d.along_sharp(h, b, a, c));
  return t;
}

namespace {

struct JKVValues {
  std::vector<std::vector<std::vector<Scalar>>> one;  // (i)(a,b,c), full skew storage
  std::vector<std::vector<Scalar>> two;               // (ii)(b,c)
  std::vector<Scalar> three;                          // (iii)(k)
};

JKVValues jkv_values(const AffinePatch& p, const JKVPair& pair) {
  const int n = p.dimension();
  const Matrix& h = pair.h;
  const Section& e = pair.e;
  const Connection& c = p.connection();
  const Derivatives d = derivatives(c, h);
  JKVValues v;
  v.one.assign(n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n)));
  v.two.assign(n, std::vector<Scalar>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int k = 0; k < n; ++k)
        v.one[a][b][k] = d.along_sharp(h, a, b, k) - e[a] * h(b, k) - d.along_sharp(h, b, a, k) + e[b] * h(a, k);
  for (int b = 0; b < n; ++b) {
    const Section nabla_e = connection_apply(c, row(h, b), e);
    for (int k = 0; k < n; ++k) v.two[b][k] = d.along(e, b, k) - nabla_e[k] + e[b] * e[k];
  }
  const Section ee = connection_apply(c, e, e);
  for (int k = 0; k < n; ++k) v.three.push_back(ee[k]);
  return v;
}

}  // namespace

DefectReport jkv_defects(const AffinePatch& p, const JKVPair& pair) {
  const int n = p.dimension();
  check_pair(n, pair);
  const JKVValues v = jkv_values(p, pair);
  DefectTensor one, two, three;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int k = 0; k < n; ++k) one.add({a, b, k}, v.one[a][b][k]);
  for (int b = 0; b < n; ++b)
    for (int k = 0; k < n; ++k) two.add({b, k}, v.two[b][k]);
  for (int k = 0; k < n; ++k) three.add({k}, v.three[k]);
  DefectReport rep;
  rep.add("i", std::move(one));
  rep.add("ii", std::move(two));
  rep.add("iii", std::move(three));
  return rep;
}

Matrix pack_H(const JKVPair& pair) {
  const int n = pair.h.size();
  check_pair(n, pair);
  std::vector<std::vector<Scalar>> m(static_cast<std::size_t>(n + 1),
                                     std::vector<Scalar>(static_cast<std::size_t>(n + 1)));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) m[a][b] = pair.h(a, b);
    m[a][n] = pair.e[a];
    m[n][a] = pair.e[a];
  }
  return Matrix(std::move(m));
}

EquivalenceReport jkv_equivalence_report(const AffinePatch& p, const JKVPair& pair) {
  const int n = p.dimension();
  check_pair(n, pair);
  const KVTensor hh = jkv_bracket(p.bar_nabla_jlsa(), pack_H(pair));
  const JKVValues v = jkv_values(p, pair);
  DefectTensor rel;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      for (int c = 0; c < n; ++c) rel.add({a, b, c}, hh.at({a, b}, c) + v.one[a][b][c]);
      rel.add({a, b, n}, hh.at({a, b}, n) - (v.two[a][b] - v.two[b][a]));
    }
  for (int b = 0; b < n; ++b) {
    for (int c = 0; c < n; ++c) rel.add({n, b, c}, hh.at({n, b}, c) + v.two[b][c]);
    rel.add({n, b, n}, hh.at({n, b}, n) + v.three[b]);
  }
  EquivalenceReport out;
  out.details = jkv_defects(p, pair);
  out.details.add("HH", DefectTensor::from(hh));
  out.details.add("slot_relations", std::move(rel));
  out.left_vanishes = hh.is_zero();
  out.right_vanishes = out.details.vanishes("i") && out.details.vanishes("ii") && out.details.vanishes("iii");
  return out;
}

DefectTensor semi_weyl_defect(const AffinePatch& p, const Matrix& g, const Cosection& theta) {
  const int n = p.dimension();
  check_symmetric(g, n);
  auto s = [&](int i, int j, int k) {
    return covariant_metric_derivative(p.connection(), g, i, j, k) + theta[i] * g(j, k);
  };
  DefectTensor t;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k) t.add({i, j, k}, s(i, j, k) - s(j, i, k));
  return t;
}

Cosection theta_of(const Matrix& g, const Section& e) {
  std::vector<Scalar> th(static_cast<std::size_t>(g.size()));
  for (int i = 0; i < g.size(); ++i) th[i] = dot(row(g, i), e);
  return Cosection::linear(th);
}

DefectReport dtheta_report(const AffinePatch& p, const Matrix& g, const Section& e) {
  const int n = p.dimension();
  check_pair(n, JKVPair{g, e});
  const Connection& c = p.connection();
  const Cosection theta = theta_of(g, e);
  const Cosection dtheta = differential(c.algebroid(), theta);

  DefectTensor identity, closed;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Section x = Section::frame(n, i), y = Section::frame(n, j);
      const Section xe = connection_apply(c, x, e), ye = connection_apply(c, y, e);
      const Scalar closed_form = metric(g, y, xe) - metric(g, x, ye);
      const Scalar expansion = metric_derivative(c, g, x, y, e) - metric_derivative(c, g, y, x, e) + closed_form;
      const Scalar dt = dtheta.coefficient(bit(i) | bit(j));
      identity.add({i, j}, dt - expansion);
      closed.add({i, j}, dt - closed_form);
    }

  DefectReport rep;
  rep.add("semi_weyl", semi_weyl_defect(p, g, theta));
  rep.add("torsion", torsion(c));
  rep.add("curvature", curvature(c));
  rep.add("dtheta", DefectTensor::from(dtheta));
  rep.add("dtheta_identity", std::move(identity));
  rep.add("dtheta_closed_form", std::move(closed));
  return rep;
}

DefectReport lch_report(const AffinePatch& p, const JKVPair& pair) {
  const int n = p.dimension();
  check_pair(n, pair);
  const Connection& c = p.connection();
  const Matrix g = pair.h.inverse();
  const Cosection theta = theta_of(g, pair.e);
  DefectReport rep = dtheta_report(p, g, pair.e);

  // (i)(a,b,c) = -S(X,Y,Z) + S(Y,X,Z) with X, Y, Z the h#-images.
  const JKVValues v = jkv_values(p, pair);
  auto s = [&](const Section& x, const Section& y, const Section& z) {
    return metric_derivative(c, g, x, y, z) + pairing(theta, x) * metric(g, y, z);
  };
  DefectTensor translation;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int k = 0; k < n; ++k) {
        const Section x = row(pair.h, a), y = row(pair.h, b), z = row(pair.h, k);
        translation.add({a, b, k}, v.one[a][b][k] + s(x, y, z) - s(y, x, z));
      }
  rep.add("translation", std::move(translation));
  return rep;
}

EquivalenceReport dual_connection_report(const AffinePatch& p, const Matrix& g) {
  EquivalenceReport out;
  out.details.add("dual_torsion", torsion(dual_connection(p.connection(), g)));
  out.details.add("codazzi", codazzi_defect(p, g));
  out.left_vanishes = out.details.vanishes("dual_torsion");
  out.right_vanishes = out.details.vanishes("codazzi");
  return out;
}

}  // namespace algebroid
