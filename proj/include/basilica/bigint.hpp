#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace basilica {

// All kernel arithmetic is exact; angles and chord data carry unbounded
// integers so that deep compositions never overflow.
using Bigint = boost::multiprecision::cpp_int;

inline Bigint pow3(int e) {
  Bigint r = 1;
  Bigint b = 3;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

inline Bigint pow2(int e) { return Bigint(1) << e; }

// Floor-mod: result in [0, m), m > 0.
inline Bigint floor_mod(const Bigint& a, const Bigint& m) {
  Bigint r = a % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace basilica
