#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace cubegray {

// Exact arbitrary-precision count.  (2n-1)!! overflows 64 bits near n = 17,
// so every cardinality in this library is a BigCount.
using BigCount = boost::multiprecision::cpp_int;

// (2m-1)!! = 1 * 3 * 5 * ... * (2m-1); the empty product for m = 0.
inline BigCount odd_double_factorial(int m) {
  BigCount r = 1;
  for (int i = 1; i <= m; ++i) r *= 2 * i - 1;
  return r;
}

}  // namespace cubegray
