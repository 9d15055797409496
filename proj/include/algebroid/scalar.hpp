#pragma once

// Exact scalars: rational functions in the base coordinates and the line
// variable t, with numerators allowed to carry e^{kt} factors.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace algebroid {

// A monomial packed into one word. The top byte holds the total degree and
// each of the seven slots below it holds one exponent, first slot most
// significant, so comparing the raw words is graded lexicographic order.
// Slots 0..5 belong to base coordinates, slot 6 is reserved for t.
class Monomial {
 public:
  static constexpr int kSlots = 7;
  static constexpr int kBaseSlots = 6;
  static constexpr int kLineSlot = 6;
  static constexpr int kMaxDegree = 255;

  constexpr Monomial() = default;
  static Monomial variable(int slot, int power = 1);

  int degree() const { return static_cast<int>(bits_ >> 56); }
  int exponent(int slot) const { return static_cast<int>((bits_ >> shift(slot)) & 0xffu); }
  bool is_one() const { return bits_ == 0; }
  std::uint64_t bits() const { return bits_; }

  Monomial with_exponent(int slot, int e) const;
  bool divides(Monomial other) const;
  // Caller guarantees divisibility.
  Monomial quotient(Monomial divisor) const { return Monomial(bits_ - divisor.bits_); }
  Monomial operator*(Monomial other) const;

  friend auto operator<=>(Monomial, Monomial) = default;

 private:
  explicit constexpr Monomial(std::uint64_t b) : bits_(b) {}
  static constexpr int shift(int slot) { return 48 - 8 * slot; }
  std::uint64_t bits_ = 0;
};

// Sparse polynomial over Q. Terms are kept strictly decreasing in monomial
// order with no zero coefficients, so structural equality is equality.
class Poly {
 public:
  using Term = std::pair<Monomial, mpq_class>;

  Poly() = default;
  Poly(long c);  // NOLINT(google-explicit-constructor)
  Poly(const mpq_class& c);  // NOLINT(google-explicit-constructor)
  static Poly variable(int slot);
  static Poly monomial(Monomial m, const mpq_class& c);
  // Sorts and combines arbitrary terms.
  static Poly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  bool is_one() const;
  mpq_class constant_term() const;
  const std::vector<Term>& terms() const { return terms_; }
  Monomial leading_monomial() const { return terms_.front().first; }
  const mpq_class& leading_coefficient() const { return terms_.front().second; }
  int degree_in(int slot) const;
  // Bit s set when slot s occurs.
  unsigned support() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const mpq_class& c) const;
  Poly times(Monomial m) const;
  Poly derivative(int slot) const;

  friend bool operator==(const Poly& a, const Poly& b);

 private:
  std::vector<Term> terms_;
};

// Quotient when b divides a exactly; throws std::domain_error otherwise.
Poly divide_exact(const Poly& a, const Poly& b);
// Monic greatest common divisor; gcd(0, 0) is 0.
Poly gcd(const Poly& a, const Poly& b);
Poly monic(const Poly& p);

// Sum of p_k(x, t) e^{kt}, bands ordered by k, no zero bands.
class ExpPoly {
 public:
  using Band = std::pair<int, Poly>;

  ExpPoly() = default;
  ExpPoly(Poly p);  // NOLINT(google-explicit-constructor)
  static ExpPoly band(int k, Poly p);

  bool is_zero() const { return bands_.empty(); }
  bool is_exp_free() const { return bands_.empty() || (bands_.size() == 1 && bands_[0].first == 0); }
  const std::vector<Band>& bands() const { return bands_; }
  const Poly& leading_poly() const { return bands_.back().second; }

  ExpPoly operator-() const;
  ExpPoly& operator+=(const ExpPoly& o);
  ExpPoly& operator-=(const ExpPoly& o);
  friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }
  friend ExpPoly operator-(ExpPoly a, const ExpPoly& b) { return a -= b; }
  friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b);
  ExpPoly times(const Poly& p) const;
  ExpPoly divided_exact(const Poly& p) const;
  ExpPoly shifted(int k) const;  // multiply by e^{kt}
  // For the line slot the band rule d/dt (p e^{kt}) = (p' + k p) e^{kt} applies.
  ExpPoly derivative(int slot) const;

  friend bool operator==(const ExpPoly& a, const ExpPoly& b) = default;

 private:
  std::vector<Band> bands_;
};

// numerator / denominator with the denominator exp-free, monic and coprime to
// every band of the numerator. Zero is 0/1.
class Scalar {
 public:
  Scalar() : den_(1) {}
  Scalar(long c) : num_(Poly(c)), den_(1) {}  // NOLINT(google-explicit-constructor)
  Scalar(const mpq_class& c) : num_(Poly(c)), den_(1) {}  // NOLINT(google-explicit-constructor)
  Scalar(Poly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  Scalar(ExpPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  static Scalar fraction(ExpPoly num, const Poly& den);
  static Scalar variable(int slot) { return Scalar(Poly::variable(slot)); }
  static Scalar line() { return variable(Monomial::kLineSlot); }
  static Scalar exp_line(int k) { return Scalar(ExpPoly::band(k, Poly(1))); }

  const ExpPoly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_exp_free() const { return num_.is_exp_free(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const;
  unsigned support() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  // Explicit inversion. Only numerators with a single exponential band can be
  // inverted, since denominators stay exp-free.
  Scalar reciprocal() const;
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.reciprocal(); }

  Scalar derivative(int slot) const;

  friend bool operator==(const Scalar& a, const Scalar& b) = default;

 private:
  ExpPoly num_;
  Poly den_;
};

}  // namespace algebroid
