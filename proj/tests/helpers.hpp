#pragma once

#include <string>

#include "algebroid/fixtures.hpp"
#include "doctest.h"

namespace testing {

using namespace algebroid;

// Scalar literal over x, y, z (and t).
inline Scalar lit(const std::string& text, int base = 3) { return parse_scalar(text, fixtures::chart(base)); }

inline Scalar X() { return Scalar::variable(0); }
inline Scalar Y() { return Scalar::variable(1); }
inline Scalar Z() { return Scalar::variable(2); }
inline Scalar T() { return Scalar::line(); }

inline std::vector<Section> zero_table(int r) {
  return std::vector<Section>(static_cast<std::size_t>(r * r), Section(r));
}

}  // namespace testing

namespace doctest {
template <>
struct StringMaker<algebroid::Scalar> {
  static String convert(const algebroid::Scalar& s) {
    return algebroid::format(s, algebroid::fixtures::chart(3).with_line()).c_str();
  }
};
}  // namespace doctest
