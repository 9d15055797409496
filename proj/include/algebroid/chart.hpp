#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "algebroid/scalar.hpp"

namespace algebroid {

// Coordinate names of a base chart. Base coordinates occupy monomial slots in
// declaration order; the line variable "t" always lives in the last slot and
// is a coordinate of the chart only after with_line().
class Chart {
 public:
  Chart() = default;
  explicit Chart(std::vector<std::string> names);

  Chart with_line() const;
  bool has_line() const { return has_line_; }
  int dimension() const { return static_cast<int>(names_.size()) + (has_line_ ? 1 : 0); }
  int base_dimension() const { return static_cast<int>(names_.size()); }
  // Monomial slot of coordinate a (0 <= a < dimension()).
  int slot(int a) const { return a < base_dimension() ? a : Monomial::kLineSlot; }
  std::string name(int a) const { return a < base_dimension() ? names_[a] : std::string("t"); }
  const std::vector<std::string>& base_names() const { return names_; }

  std::optional<int> slot_of(std::string_view name) const;
  std::string slot_name(int slot) const;
  // Slots a scalar may mention: the coordinates plus t, which is always
  // available as a parameter.
  unsigned allowed_slots() const;

  friend bool operator==(const Chart&, const Chart&) = default;

 private:
  std::vector<std::string> names_;
  bool has_line_ = false;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Grammar: integers, p/q rationals, identifiers, + - * / ^ (non-negative
// integer powers), parentheses and exp(k*t) with an integer literal k.
// Division by a non-constant expression is an explicit inversion.
// Columns in errors are 1-based and offset by column_offset.
Scalar parse_scalar(std::string_view text, const Chart& chart, int line = 1, int column_offset = 0);

// Canonical text that parse_scalar maps back to the same value.
std::string format(const Scalar& s, const Chart& chart);
std::string format(const Poly& p, const Chart& chart);

}  // namespace algebroid
