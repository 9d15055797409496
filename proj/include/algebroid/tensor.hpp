#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "algebroid/exterior.hpp"

namespace algebroid {

// Element of Lambda^p V (x) V: skew in the first p slots, plain in the last.
// Cochains of degree k are the covariant case with p = k - 1; the bracket of
// a symmetric bivector is the contravariant case with p = 2.
template <Variance V>
class SkewTensor {
 public:
  SkewTensor() = default;
  SkewTensor(int rank, int skew_degree) : rank_(rank), skew_(skew_degree) {}

  int rank() const { return rank_; }
  int skew_degree() const { return skew_; }
  const std::map<std::pair<Mask, int>, Scalar>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  Scalar value(Mask m, int last) const {
    auto it = entries_.find({m, last});
    return it == entries_.end() ? Scalar() : it->second;
  }
  // Value at an arbitrary ordering of the skew slots.
  Scalar at(const std::vector<int>& skew, int last) const {
    Mask m = 0;
    int inversions = 0;
    for (std::size_t a = 0; a < skew.size(); ++a) {
      if (m & bit(skew[a])) return Scalar();
      m |= bit(skew[a]);
      for (std::size_t b = a + 1; b < skew.size(); ++b)
        if (skew[a] > skew[b]) ++inversions;
    }
    const Scalar v = value(m, last);
    return inversions % 2 ? -v : v;
  }
  void set(Mask m, int last, Scalar v) {
    if (v.is_zero()) {
      entries_.erase({m, last});
    } else {
      entries_[{m, last}] = std::move(v);
    }
  }

  friend bool operator==(const SkewTensor&, const SkewTensor&) = default;

 private:
  int rank_ = 0;
  int skew_ = 0;
  std::map<std::pair<Mask, int>, Scalar> entries_;
};

using Cochain = SkewTensor<Variance::Covariant>;
using KVTensor = SkewTensor<Variance::Contravariant>;

inline int cochain_degree(const Cochain& c) { return c.skew_degree() + 1; }

// Multi-index -> nonzero scalar. Indices are 0-based frame positions.
class DefectTensor {
 public:
  using Index = std::vector<int>;
  void add(Index idx, const Scalar& v);
  bool vanishes() const { return entries_.empty(); }
  const std::map<Index, Scalar>& entries() const { return entries_; }
  Scalar at(const Index& idx) const;
  friend bool operator==(const DefectTensor&, const DefectTensor&) = default;

  template <Variance V>
  static DefectTensor from(const SkewTensor<V>& t) {
    DefectTensor d;
    for (const auto& [key, v] : t.entries()) {
      Index idx = mask_indices(key.first);
      idx.push_back(key.second);
      d.add(std::move(idx), v);
    }
    return d;
  }
  template <Variance V>
  static DefectTensor from(const Exterior<V>& e) {
    DefectTensor d;
    for (const auto& [m, v] : e.terms()) d.add(mask_indices(m), v);
    return d;
  }

 private:
  std::map<Index, Scalar> entries_;
};

// Named defect tensors that must vanish, plus named scalars that must not.
class DefectReport {
 public:
  void add(const std::string& name, DefectTensor t) { vanishing_[name] = std::move(t); }
  void require_nonzero(const std::string& name, Scalar s) { nonvanishing_[name] = std::move(s); }

  bool passed() const;
  bool vanishes(const std::string& name) const { return at(name).vanishes(); }
  const DefectTensor& at(const std::string& name) const;
  const std::map<std::string, DefectTensor>& tensors() const { return vanishing_; }
  const std::map<std::string, Scalar>& nonvanishing() const { return nonvanishing_; }

 private:
  std::map<std::string, DefectTensor> vanishing_;
  std::map<std::string, Scalar> nonvanishing_;
};

// Two conditions that must vanish together.
struct EquivalenceReport {
  DefectReport details;
  bool left_vanishes = false;
  bool right_vanishes = false;
  bool consistent() const { return left_vanishes == right_vanishes; }
};

}  // namespace algebroid
