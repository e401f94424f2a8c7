#pragma once

#include <complex>

namespace cohgeom::detail {

/// x^n by repeated squaring; 0^0 = 1.
template <class T>
T ipow(T x, unsigned n) {
  T result(1);
  while (n > 0) {
    if (n & 1u) result *= x;
    x *= x;
    n >>= 1;
  }
  return result;
}

}  // namespace cohgeom::detail
