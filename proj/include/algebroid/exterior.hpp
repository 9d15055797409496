#pragma once

// Sections, multisections and forms over a frame e_1..e_r, keyed by bitmasks
// of strictly increasing index sets.

#include <bit>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "algebroid/scalar.hpp"

namespace algebroid {

using Mask = std::uint32_t;
constexpr int kMaxRank = 16;

inline int mask_degree(Mask m) { return std::popcount(m); }
inline Mask bit(int i) { return Mask{1} << i; }
std::vector<int> mask_indices(Mask m);
// Sign of e_I ^ e_J relative to e_{I u J}; zero when I and J overlap.
int wedge_sign(Mask a, Mask b);
// All masks of the given degree below 2^rank, in increasing numeric order.
std::vector<Mask> masks_of_degree(int rank, int degree);

class Section {
 public:
  Section() = default;
  explicit Section(int rank) : c_(static_cast<std::size_t>(rank)) {}
  explicit Section(std::vector<Scalar> c) : c_(std::move(c)) {}
  static Section frame(int rank, int i);

  int rank() const { return static_cast<int>(c_.size()); }
  Scalar& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  const Scalar& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  const std::vector<Scalar>& components() const { return c_; }
  bool is_zero() const;

  Section& operator+=(const Section& o);
  Section& operator-=(const Section& o);
  friend Section operator+(Section a, const Section& b) { return a += b; }
  friend Section operator-(Section a, const Section& b) { return a -= b; }
  Section operator-() const;
  friend Section operator*(const Scalar& f, const Section& s);
  friend bool operator==(const Section&, const Section&) = default;

 private:
  std::vector<Scalar> c_;
};

enum class Variance { Contravariant, Covariant };

template <Variance V>
class Exterior {
 public:
  Exterior() = default;
  Exterior(int rank, int degree) : rank_(rank), degree_(degree) {
    if (rank < 0 || rank > kMaxRank) throw std::invalid_argument("rank out of range");
    // Degrees above the rank are allowed and hold only zero.
    if (degree < 0) throw std::invalid_argument("negative degree");
  }
  static Exterior basis(int rank, Mask m, Scalar c = Scalar(1)) {
    Exterior e(rank, mask_degree(m));
    e.add(m, c);
    return e;
  }
  static Exterior function(int rank, Scalar f) { return basis(rank, 0, std::move(f)); }
  // Degree one element with the given components.
  static Exterior linear(const std::vector<Scalar>& comps) {
    Exterior e(static_cast<int>(comps.size()), 1);
    for (std::size_t i = 0; i < comps.size(); ++i) e.add(bit(static_cast<int>(i)), comps[i]);
    return e;
  }

  int rank() const { return rank_; }
  int degree() const { return degree_; }
  const std::map<Mask, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Scalar coefficient(Mask m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar() : it->second;
  }
  // Component along e_i for degree one elements.
  Scalar operator[](int i) const { return coefficient(bit(i)); }
  std::vector<Scalar> components() const {
    std::vector<Scalar> v(static_cast<std::size_t>(rank_));
    for (const auto& [m, c] : terms_)
      if (mask_degree(m) == 1) v[static_cast<std::size_t>(std::countr_zero(m))] = c;
    return v;
  }

  void add(Mask m, const Scalar& c) {
    if (c.is_zero()) return;
    if (mask_degree(m) != degree_ || (rank_ < 32 && (m >> rank_) != 0))
      throw std::invalid_argument("index set does not match degree or rank");
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Exterior& operator+=(const Exterior& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  Exterior& operator-=(const Exterior& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
  }
  friend Exterior operator+(Exterior a, const Exterior& b) { return a += b; }
  friend Exterior operator-(Exterior a, const Exterior& b) { return a -= b; }
  Exterior operator-() const {
    Exterior e = *this;
    for (auto& [m, c] : e.terms_) c = -c;
    return e;
  }
  friend Exterior operator*(const Scalar& f, const Exterior& e) {
    Exterior r(e.rank_, e.degree_);
    if (f.is_zero()) return r;
    for (const auto& [m, c] : e.terms_) r.add(m, f * c);
    return r;
  }
  friend bool operator==(const Exterior&, const Exterior&) = default;

 private:
  void check_same(const Exterior& o) const {
    if (o.rank_ != rank_ || o.degree_ != degree_) throw std::invalid_argument("rank or degree mismatch");
  }
  int rank_ = 0;
  int degree_ = 0;
  std::map<Mask, Scalar> terms_;
};

using Multisection = Exterior<Variance::Contravariant>;
using Cosection = Exterior<Variance::Covariant>;

template <Variance V>
Exterior<V> wedge(const Exterior<V>& a, const Exterior<V>& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("wedge: rank mismatch");
  Exterior<V> r(a.rank(), a.degree() + b.degree());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      const int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      r.add(ma | mb, s > 0 ? ca * cb : -(ca * cb));
    }
  return r;
}

// Value of a skew tensor with e_l inserted in front of the sorted set R.
template <Variance V>
Scalar front_insert(const Exterior<V>& d, int l, Mask r) {
  if (r & bit(l)) return Scalar();
  const Scalar c = d.coefficient(r | bit(l));
  return (std::popcount(r & (bit(l) - 1)) % 2) ? -c : c;
}

// Contraction in the first slot: (i_x D)(y_2, ...) = D(x, y_2, ...).
template <Variance V, Variance W>
Exterior<W> interior(const Exterior<V>& x, const Exterior<W>& d) {
  static_assert(V != W, "contraction pairs opposite variances");
  if (x.degree() != 1) throw std::invalid_argument("interior: contracting element must have degree 1");
  if (d.degree() == 0) throw std::invalid_argument("interior: degree 0 input");
  if (x.rank() != d.rank()) throw std::invalid_argument("interior: rank mismatch");
  Exterior<W> r(d.rank(), d.degree() - 1);
  for (const auto& [m, c] : d.terms()) {
    int pos = 0;
    for (int i : mask_indices(m)) {
      const Scalar xi = x.coefficient(bit(i));
      if (!xi.is_zero()) r.add(m & ~bit(i), (pos % 2) ? -(xi * c) : xi * c);
      ++pos;
    }
  }
  return r;
}

Multisection as_multisection(const Section& s);
Section as_section(const Multisection& d);
Cosection interior(const Section& x, const Cosection& w);
Scalar pairing(const Cosection& xi, const Section& x);
// D(xi_1, ..., xi_k), determinant convention.
Scalar evaluate(const Multisection& d, std::span<const Cosection> args);
Scalar evaluate(const Cosection& w, std::span<const Section> args);

}  // namespace algebroid
