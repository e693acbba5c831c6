#pragma once

#include <initializer_list>

#include "dcx/linalg.hpp"

namespace dcx::testing {

inline Matrix mat(std::initializer_list<std::initializer_list<Scalar>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  Matrix m = zeros(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (const auto& x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

inline Scalar q(long n, long d = 1) { return Scalar(mpq_class(n, d)); }
inline Scalar gi(long re, long im) { return Scalar(mpq_class(re), mpq_class(im)); }

}  // namespace dcx::testing
