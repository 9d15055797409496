#include "algebroid/line_extension.hpp"

#include <array>

namespace algebroid {

namespace {

const Scalar& exp_minus_t() {
  static const Scalar e = Scalar::exp_line(-1);
  return e;
}

const Scalar& exp_t() {
  static const Scalar e = Scalar::exp_line(1);
  return e;
}

void require_base_chart(const Chart& c) {
  if (c.has_line()) throw std::invalid_argument("line extension of a chart that already carries t");
}

Section multiply(const Scalar& f, const Section& x) { return f * x; }

}  // namespace

Section t_derivative(const Section& x) {
  Section out(x.rank());
  for (int k = 0; k < x.rank(); ++k) out[k] = x[k].derivative(Monomial::kLineSlot);
  return out;
}

AnchoredBundle extend_bundle(const AnchoredBundle& b, const Cosection& phi0, LineVariant v) {
  require_base_chart(b.chart());
  const Chart c = b.chart().with_line();
  std::vector<std::vector<Scalar>> anchor;
  for (int i = 0; i < b.rank(); ++i) {
    std::vector<Scalar> row = b.anchor(i);
    row.push_back(phi0[i]);
    if (v == LineVariant::Hat)
      for (auto& f : row) f = exp_minus_t() * f;
    anchor.push_back(std::move(row));
  }
  return AnchoredBundle(c, std::move(anchor));
}

LieAlgebroid extend_lie(const JacobiAlgebroid& j, LineVariant v) {
  const LieAlgebroid& l = j.lie();
  const int r = l.rank();
  std::vector<Section> table(static_cast<std::size_t>(r * r));
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) {
      Section s = l.bracket(i, k);
      if (v == LineVariant::Hat) {
        // e^{-t}([e_i,e_k] - phi0_i e_k + phi0_k e_i)
        s[k] -= j.phi0()[i];
        s[i] += j.phi0()[k];
        s = multiply(exp_minus_t(), s);
      }
      table[i * r + k] = std::move(s);
    }
  return LieAlgebroid::candidate(extend_bundle(l.bundle(), j.phi0(), v), std::move(table));
}

LeftSymmetricAlgebroid extend_lsa(const JacobiLSA& j, LineVariant v) {
  const LeftSymmetricAlgebroid& s = j.lsa();
  const int r = s.rank();
  std::vector<Section> table(static_cast<std::size_t>(r * r));
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) {
      Section p = s.product(i, k);
      if (v == LineVariant::Hat) {
        // e^{-t}(e_i . e_k - phi0_i e_k)
        p[k] -= j.phi0()[i];
        p = multiply(exp_minus_t(), p);
      }
      table[i * r + k] = std::move(p);
    }
  return LeftSymmetricAlgebroid::candidate(extend_bundle(s.bundle(), j.phi0(), v), std::move(table));
}

Section extended_bracket(const JacobiAlgebroid& j, LineVariant v, const Section& x, const Section& y) {
  const Scalar px = pairing(j.phi0(), x), py = pairing(j.phi0(), y);
  Section out = lie_bracket(j.lie(), x, y);
  if (v == LineVariant::Bar) return out + px * t_derivative(y) - py * t_derivative(x);
  out += px * (t_derivative(y) - y) - py * (t_derivative(x) - x);
  return multiply(exp_minus_t(), out);
}

Section extended_product(const JacobiLSA& j, LineVariant v, const Section& x, const Section& y) {
  const Scalar px = pairing(j.phi0(), x);
  Section out = ls_product(j.lsa(), x, y);
  if (v == LineVariant::Bar) return out + px * t_derivative(y);
  out += px * (t_derivative(y) - y);
  return multiply(exp_minus_t(), out);
}

DefectReport psi_check(const JacobiLSA& j) {
  const int r = j.rank();
  const LeftSymmetricAlgebroid hat = extend_lsa(j, LineVariant::Hat);
  const LeftSymmetricAlgebroid bar = extend_lsa(j, LineVariant::Bar);
  const LieAlgebroid hat_lie = commutator_algebroid(hat);
  const LieAlgebroid bar_lie = commutator_algebroid(bar);
  auto psi = [](const Section& x) { return multiply(exp_t(), x); };
  DefectTensor anchor, product, bracket;
  for (int i = 0; i < r; ++i) {
    const Section ei = Section::frame(r, i);
    const auto lhs = hat.bundle().vector_field(psi(ei));
    const auto rhs = bar.bundle().vector_field(ei);
    for (std::size_t a = 0; a < lhs.size(); ++a) anchor.add({i, static_cast<int>(a)}, lhs[a] - rhs[a]);
    for (int k = 0; k < r; ++k) {
      const Section ek = Section::frame(r, k);
      const Section dp = psi(ls_product(bar, ei, ek)) - ls_product(hat, psi(ei), psi(ek));
      const Section db = psi(lie_bracket(bar_lie, ei, ek)) - lie_bracket(hat_lie, psi(ei), psi(ek));
      for (int m = 0; m < r; ++m) {
        product.add({i, k, m}, dp[m]);
        bracket.add({i, k, m}, db[m]);
      }
    }
  }
  DefectReport rep;
  rep.add("anchor", std::move(anchor));
  rep.add("product", std::move(product));
  rep.add("bracket", std::move(bracket));
  return rep;
}

LineProbe bar_jacobiator_probe(const JacobiAlgebroid& j) {
  const int r = j.rank();
  const LieAlgebroid bar = extend_lie(j, LineVariant::Bar);
  const Cosection dphi = differential(j.lie(), j.phi0());
  const Scalar t = Scalar::line();
  auto br = [&](const Section& x, const Section& y) { return lie_bracket(bar, x, y); };
  LineProbe out;
  for (int i = 0; i < r; ++i)
    for (int k = i + 1; k < r; ++k)
      for (int m = 0; m < r; ++m) {
        const Section a = Section::frame(r, i), b = Section::frame(r, k), c = t * Section::frame(r, m);
        const Section jac = br(a, br(b, c)) + br(b, br(c, a)) + br(c, br(a, b));
        const Scalar d = dphi.coefficient(bit(i) | bit(k));
        for (int n = 0; n < r; ++n) {
          out.raw.add({i, k, m, n}, jac[n]);
          out.residual.add({i, k, m, n}, n == m ? jac[n] - d : jac[n]);
        }
      }
  return out;
}

LineProbe bar_associator_probe(const JacobiLSA& j) {
  const int r = j.rank();
  const LeftSymmetricAlgebroid bar = extend_lsa(j, LineVariant::Bar);
  const Cosection sym = antisymmetrized_coboundary(j.lsa(), j.phi0());
  const Scalar t = Scalar::line();
  auto pr = [&](const Section& x, const Section& y) { return ls_product(bar, x, y); };
  auto assoc = [&](const Section& x, const Section& y, const Section& z) {
    return pr(pr(x, y), z) - pr(x, pr(y, z));
  };
  LineProbe out;
  for (int i = 0; i < r; ++i)
    for (int k = i + 1; k < r; ++k)
      for (int m = 0; m < r; ++m) {
        const Section a = Section::frame(r, i), b = Section::frame(r, k), c = t * Section::frame(r, m);
        // x.(y.z) - y.(x.z) - (x.y).z + (y.x).z
        const Section diff = assoc(b, a, c) - assoc(a, b, c);
        const Scalar d = sym.coefficient(bit(i) | bit(k));
        for (int n = 0; n < r; ++n) {
          out.raw.add({i, k, m, n}, diff[n]);
          out.residual.add({i, k, m, n}, n == m ? diff[n] - d : diff[n]);
        }
      }
  return out;
}

Poissonization poissonize(const JacobiAlgebroid& j, const Multisection& pi) {
  if (pi.rank() != j.rank() || pi.degree() != 2) throw std::invalid_argument("poissonize: expected a bivector");
  const LieAlgebroid bar = extend_lie(j, LineVariant::Bar);
  Poissonization out;
  out.pi_tilde = exp_minus_t() * pi;
  const Multisection big = schouten_bracket(bar, out.pi_tilde, out.pi_tilde);
  const Scalar e2 = Scalar::exp_line(-2);
  out.report.add("scaling", DefectTensor::from(big - e2 * twisted_schouten(j, pi, pi)));
  out.report.add("poisson", DefectTensor::from(big));
  return out;
}

KVization kv_ize(const JacobiLSA& j, const Matrix& h) {
  const int r = j.rank();
  check_symmetric(h, r);
  const LeftSymmetricAlgebroid bar = extend_lsa(j, LineVariant::Bar);
  std::vector<std::vector<Scalar>> rows(static_cast<std::size_t>(r), std::vector<Scalar>(static_cast<std::size_t>(r)));
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) rows[a][b] = exp_minus_t() * h(a, b);
  KVization out{Matrix(std::move(rows)), {}};
  const KVTensor big = kv_bracket(bar, out.h_tilde);
  const KVTensor small = jkv_bracket(j, h);
  const Scalar e2 = Scalar::exp_line(-2);
  DefectTensor scaling;
  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b < r; ++b)
      for (int c = 0; c < r; ++c) {
        const Mask m = bit(a) | bit(b);
        scaling.add({a, b, c}, big.value(m, c) - e2 * small.value(m, c));
      }
  out.report.add("scaling", std::move(scaling));
  out.report.add("kv", DefectTensor::from(big));
  return out;
}

}  // namespace algebroid
