#include "algebroid/scalar.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace algebroid {

// ---- Monomial ------------------------------------------------------------

Monomial Monomial::variable(int slot, int power) {
  if (slot < 0 || slot >= kSlots) throw std::out_of_range("monomial slot out of range");
  if (power < 0 || power > kMaxDegree) throw std::overflow_error("monomial degree exceeds 255");
  return Monomial((static_cast<std::uint64_t>(power) << 56) |
                  (static_cast<std::uint64_t>(power) << shift(slot)));
}

Monomial Monomial::with_exponent(int slot, int e) const {
  const int deg = degree() - exponent(slot) + e;
  if (e < 0 || deg > kMaxDegree) throw std::overflow_error("monomial degree exceeds 255");
  std::uint64_t b = bits_ & ~(0xffull << shift(slot)) & ~(0xffull << 56);
  b |= static_cast<std::uint64_t>(e) << shift(slot);
  b |= static_cast<std::uint64_t>(deg) << 56;
  return Monomial(b);
}

bool Monomial::divides(Monomial other) const {
  for (int s = 0; s < kSlots; ++s)
    if (exponent(s) > other.exponent(s)) return false;
  return true;
}

Monomial Monomial::operator*(Monomial other) const {
  // Total degree bounds every slot, so checking it rules out slot carries.
  if (degree() + other.degree() > kMaxDegree) throw std::overflow_error("monomial degree exceeds 255");
  return Monomial(bits_ + other.bits_);
}

// ---- Poly ----------------------------------------------------------------

namespace {

bool term_greater(const Poly::Term& a, const Poly::Term& b) { return a.first > b.first; }

// Merge of two sorted term lists, b scaled by sign.
std::vector<Poly::Term> merge_terms(const std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b,
                                    bool subtract) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first > b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first > a[i].first) {
      out.emplace_back(b[j].first, subtract ? mpq_class(-b[j].second) : b[j].second);
      ++j;
    } else {
      mpq_class c = subtract ? mpq_class(a[i].second - b[j].second) : mpq_class(a[i].second + b[j].second);
      if (sgn(c) != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly::Poly(long c) {
  if (c != 0) terms_.emplace_back(Monomial(), mpq_class(c));
}

Poly::Poly(const mpq_class& c) {
  if (sgn(c) != 0) terms_.emplace_back(Monomial(), c);
}

Poly Poly::variable(int slot) { return monomial(Monomial::variable(slot), 1); }

Poly Poly::monomial(Monomial m, const mpq_class& c) {
  Poly p;
  if (sgn(c) != 0) p.terms_.emplace_back(m, c);
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  Poly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
    } else {
      if (!p.terms_.empty() && sgn(p.terms_.back().second) == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && sgn(p.terms_.back().second) == 0) p.terms_.pop_back();
  return p;
}

bool Poly::is_one() const { return terms_.size() == 1 && terms_[0].first.is_one() && terms_[0].second == 1; }

mpq_class Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
  return 0;
}

int Poly::degree_in(int slot) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.exponent(slot));
  return d;
}

unsigned Poly::support() const {
  unsigned s = 0;
  for (const auto& t : terms_)
    for (int k = 0; k < Monomial::kSlots; ++k)
      if (t.first.exponent(k) > 0) s |= 1u << k;
  return s;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.terms_.size() == 1) return a.times(b.terms_[0].first).scaled(b.terms_[0].second);
  if (a.terms_.size() == 1) return b.times(a.terms_[0].first).scaled(a.terms_[0].second);
  std::vector<Poly::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) prod.emplace_back(x.first * y.first, x.second * y.second);
  return Poly::from_terms(std::move(prod));
}

Poly Poly::scaled(const mpq_class& c) const {
  if (sgn(c) == 0) return {};
  if (c == 1) return *this;
  Poly p = *this;
  for (auto& t : p.terms_) t.second *= c;
  return p;
}

Poly Poly::times(Monomial m) const {
  // Monomial orders are compatible with multiplication; order is preserved.
  Poly p = *this;
  for (auto& t : p.terms_) t.first = t.first * m;
  return p;
}

Poly Poly::derivative(int slot) const {
  Poly p;
  for (const auto& t : terms_) {
    const int e = t.first.exponent(slot);
    if (e == 0) continue;
    p.terms_.emplace_back(t.first.with_exponent(slot, e - 1), t.second * e);
  }
  return p;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].first != b.terms_[i].first || a.terms_[i].second != b.terms_[i].second) return false;
  return true;
}

Poly divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (b.is_constant()) return a.scaled(1 / b.leading_coefficient());
  std::vector<Poly::Term> q;
  Poly r = a;
  const Monomial lm = b.leading_monomial();
  const mpq_class lc_inv = 1 / b.leading_coefficient();
  while (!r.is_zero()) {
    if (!lm.divides(r.leading_monomial())) throw std::domain_error("inexact polynomial division");
    Poly::Term t{r.leading_monomial().quotient(lm), r.leading_coefficient() * lc_inv};
    r -= b.times(t.first).scaled(t.second);
    q.push_back(std::move(t));
  }
  // Quotient terms come out in decreasing order already.
  return Poly::from_terms(std::move(q));
}

Poly monic(const Poly& p) {
  if (p.is_zero() || p.leading_coefficient() == 1) return p;
  return p.scaled(1 / p.leading_coefficient());
}

namespace {

int first_slot(unsigned support) {
  for (int s = 0; s < Monomial::kSlots; ++s)
    if (support & (1u << s)) return s;
  return -1;
}

// Coefficients of p as a polynomial in one slot, indexed by power.
std::vector<Poly> coefficients_in(const Poly& p, int slot) {
  std::vector<std::vector<Poly::Term>> buckets(p.degree_in(slot) + 1);
  for (const auto& t : p.terms()) {
    const int e = t.first.exponent(slot);
    buckets[e].emplace_back(t.first.with_exponent(slot, 0), t.second);
  }
  std::vector<Poly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(Poly::from_terms(std::move(b)));
  return out;
}

Poly leading_coefficient_in(const Poly& p, int slot) { return coefficients_in(p, slot).back(); }

Poly content_in(const Poly& p, int slot) {
  Poly g;
  for (const auto& c : coefficients_in(p, slot)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

Poly primitive_part_in(const Poly& p, int slot) { return monic(divide_exact(p, content_in(p, slot))); }

Poly pseudo_remainder(const Poly& a, const Poly& b, int slot) {
  const int db = b.degree_in(slot);
  const Poly lb = leading_coefficient_in(b, slot);
  Poly r = a;
  while (!r.is_zero()) {
    const int dr = r.degree_in(slot);
    if (dr < db) break;
    const Poly lr = leading_coefficient_in(r, slot);
    r = lb * r - (lr * b).times(Monomial::variable(slot, dr - db));
  }
  return r;
}

Poly monomial_gcd(const Poly& a, Monomial m) {
  for (const auto& t : a.terms())
    for (int s = 0; s < Monomial::kSlots; ++s)
      if (t.first.exponent(s) < m.exponent(s)) m = m.with_exponent(s, t.first.exponent(s));
  return Poly::monomial(m, 1);
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return Poly(1);
  if (a.terms().size() == 1) return monomial_gcd(b, a.leading_monomial());
  if (b.terms().size() == 1) return monomial_gcd(a, b.leading_monomial());
  if (monic(a) == monic(b)) return monic(a);

  const int v = first_slot(a.support() | b.support());
  const Poly c = gcd(content_in(a, v), content_in(b, v));
  Poly p = primitive_part_in(a, v);
  Poly q = primitive_part_in(b, v);
  if (p.degree_in(v) < q.degree_in(v)) std::swap(p, q);
  while (!q.is_zero()) {
    if (q.degree_in(v) == 0) {
      p = Poly(1);
      break;
    }
    Poly r = pseudo_remainder(p, q, v);
    p = std::move(q);
    q = r.is_zero() ? Poly() : primitive_part_in(r, v);
  }
  if (p.degree_in(v) == 0) p = Poly(1);
  return monic(c * p);
}

// ---- ExpPoly -------------------------------------------------------------

ExpPoly::ExpPoly(Poly p) {
  if (!p.is_zero()) bands_.emplace_back(0, std::move(p));
}

ExpPoly ExpPoly::band(int k, Poly p) {
  ExpPoly e;
  if (!p.is_zero()) e.bands_.emplace_back(k, std::move(p));
  return e;
}

ExpPoly ExpPoly::operator-() const {
  ExpPoly e = *this;
  for (auto& b : e.bands_) b.second = -b.second;
  return e;
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& o) {
  if (o.bands_.empty()) return *this;
  if (bands_.empty()) return *this = o;
  std::vector<Band> out;
  std::size_t i = 0, j = 0;
  while (i < bands_.size() || j < o.bands_.size()) {
    if (j == o.bands_.size() || (i < bands_.size() && bands_[i].first < o.bands_[j].first)) {
      out.push_back(std::move(bands_[i++]));
    } else if (i == bands_.size() || o.bands_[j].first < bands_[i].first) {
      out.push_back(o.bands_[j++]);
    } else {
      Poly s = bands_[i].second + o.bands_[j].second;
      if (!s.is_zero()) out.emplace_back(bands_[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  bands_ = std::move(out);
  return *this;
}

ExpPoly& ExpPoly::operator-=(const ExpPoly& o) { return *this += -o; }

ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.bands_.size() == 1 && b.bands_.size() == 1)
    return ExpPoly::band(a.bands_[0].first + b.bands_[0].first, a.bands_[0].second * b.bands_[0].second);
  std::map<int, Poly> acc;
  for (const auto& x : a.bands_)
    for (const auto& y : b.bands_) acc[x.first + y.first] += x.second * y.second;
  ExpPoly e;
  for (auto& [k, p] : acc)
    if (!p.is_zero()) e.bands_.emplace_back(k, std::move(p));
  return e;
}

ExpPoly ExpPoly::times(const Poly& p) const {
  if (p.is_zero()) return {};
  if (p.is_one()) return *this;
  ExpPoly e = *this;
  for (auto& b : e.bands_) b.second = b.second * p;
  return e;
}

ExpPoly ExpPoly::divided_exact(const Poly& p) const {
  if (p.is_one()) return *this;
  ExpPoly e = *this;
  for (auto& b : e.bands_) b.second = divide_exact(b.second, p);
  return e;
}

ExpPoly ExpPoly::shifted(int k) const {
  ExpPoly e = *this;
  for (auto& b : e.bands_) b.first += k;
  return e;
}

ExpPoly ExpPoly::derivative(int slot) const {
  ExpPoly e;
  for (const auto& [k, p] : bands_) {
    Poly d = p.derivative(slot);
    if (slot == Monomial::kLineSlot && k != 0) d += p.scaled(k);
    if (!d.is_zero()) e.bands_.emplace_back(k, std::move(d));
  }
  return e;
}

// ---- Scalar --------------------------------------------------------------

Scalar Scalar::fraction(ExpPoly num, const Poly& den) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  Scalar s;
  if (num.is_zero()) return s;
  if (den.is_constant()) {
    s.num_ = den.is_one() ? std::move(num) : num.times(Poly(1 / den.leading_coefficient()));
    return s;
  }
  Poly g = den;
  for (const auto& [k, p] : num.bands()) {
    g = gcd(g, p);
    if (g.is_one()) break;
  }
  Poly d = divide_exact(den, g);
  ExpPoly n = num.divided_exact(g);
  const mpq_class lc = d.leading_coefficient();
  if (lc != 1) {
    d = d.scaled(1 / lc);
    n = n.times(Poly(1 / lc));
  }
  s.num_ = std::move(n);
  s.den_ = std::move(d);
  return s;
}

bool Scalar::is_constant() const {
  return den_.is_one() && num_.is_exp_free() && (num_.is_zero() || num_.bands()[0].second.is_constant());
}

unsigned Scalar::support() const {
  unsigned s = den_.support();
  for (const auto& [k, p] : num_.bands()) {
    s |= p.support();
    if (k != 0) s |= 1u << Monomial::kLineSlot;
  }
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  s.num_ = -s.num_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (num_.is_zero()) {
      den_ = Poly(1);
    } else if (!den_.is_one()) {
      *this = fraction(std::move(num_), den_);
    }
    return *this;
  }
  const Poly g = gcd(den_, o.den_);
  const Poly a = divide_exact(o.den_, g);
  const Poly b = divide_exact(den_, g);
  *this = fraction(num_.times(a) + o.num_.times(b), den_ * a);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = Scalar();
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  // Inputs are reduced, so only cross cancellation can occur.
  auto cancel = [](const ExpPoly& n, const Poly& d) {
    Poly g = d;
    for (const auto& [k, p] : n.bands()) {
      if (g.is_one()) break;
      g = gcd(g, p);
    }
    return g;
  };
  const Poly g1 = cancel(num_, o.den_);
  const Poly g2 = cancel(o.num_, den_);
  ExpPoly n = num_.divided_exact(g1) * o.num_.divided_exact(g2);
  Poly d = divide_exact(den_, g2) * divide_exact(o.den_, g1);
  num_ = std::move(n);
  den_ = monic(d);
  return *this;
}

Scalar Scalar::reciprocal() const {
  if (is_zero()) throw std::domain_error("reciprocal of zero");
  if (num_.bands().size() != 1) throw std::domain_error("reciprocal of a multi-band exponential sum");
  const auto& [k, p] = num_.bands()[0];
  return fraction(ExpPoly::band(-k, den_), p);
}

Scalar Scalar::derivative(int slot) const {
  if (den_.is_one()) return Scalar(num_.derivative(slot));
  const Poly dd = den_.derivative(slot);
  ExpPoly n = num_.derivative(slot).times(den_);
  if (!dd.is_zero()) n -= num_.times(dd);
  return fraction(std::move(n), den_ * den_);
}

}  // namespace algebroid
