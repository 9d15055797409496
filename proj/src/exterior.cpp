#include "algebroid/exterior.hpp"

namespace algebroid {

std::vector<int> mask_indices(Mask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

int wedge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  int inversions = 0;
  for (Mask rest = b; rest; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    inversions += std::popcount(a >> (j + 1));
  }
  return inversions % 2 ? -1 : 1;
}

std::vector<Mask> masks_of_degree(int rank, int degree) {
  std::vector<Mask> out;
  for (Mask m = 0; m < (Mask{1} << rank); ++m)
    if (mask_degree(m) == degree) out.push_back(m);
  return out;
}

Section Section::frame(int rank, int i) {
  Section s(rank);
  s[i] = Scalar(1);
  return s;
}

bool Section::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

Section& Section::operator+=(const Section& o) {
  if (o.rank() != rank()) throw std::invalid_argument("section rank mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Section& Section::operator-=(const Section& o) {
  if (o.rank() != rank()) throw std::invalid_argument("section rank mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Section Section::operator-() const {
  Section s = *this;
  for (auto& c : s.c_) c = -c;
  return s;
}

Section operator*(const Scalar& f, const Section& s) {
  Section r(s.rank());
  if (f.is_zero()) return r;
  for (int i = 0; i < s.rank(); ++i)
    if (!s[i].is_zero()) r[i] = f * s[i];
  return r;
}

Multisection as_multisection(const Section& s) { return Multisection::linear(s.components()); }

Section as_section(const Multisection& d) {
  if (d.degree() != 1) throw std::invalid_argument("expected a degree 1 multisection");
  return Section(d.components());
}

Cosection interior(const Section& x, const Cosection& w) { return interior(as_multisection(x), w); }

Scalar pairing(const Cosection& xi, const Section& x) {
  if (xi.degree() != 1 || xi.rank() != x.rank()) throw std::invalid_argument("pairing: shape mismatch");
  Scalar s;
  for (const auto& [m, c] : xi.terms()) {
    const Scalar& xv = x[std::countr_zero(m)];
    if (!xv.is_zero()) s += c * xv;
  }
  return s;
}

Scalar evaluate(const Multisection& d, std::span<const Cosection> args) {
  if (static_cast<int>(args.size()) != d.degree()) throw std::invalid_argument("evaluate: wrong number of arguments");
  Multisection cur = d;
  for (const auto& a : args) {
    if (cur.degree() == 0) break;
    cur = interior(a, cur);
  }
  return cur.coefficient(0);
}

Scalar evaluate(const Cosection& w, std::span<const Section> args) {
  if (static_cast<int>(args.size()) != w.degree()) throw std::invalid_argument("evaluate: wrong number of arguments");
  Cosection cur = w;
  for (const auto& a : args) cur = interior(a, cur);
  return cur.coefficient(0);
}

}  // namespace algebroid
