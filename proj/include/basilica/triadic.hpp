#pragma once

#include <compare>
#include <string>
#include <vector>

#include "basilica/bigint.hpp"
#include "basilica/error.hpp"

namespace basilica {

// Exact point of the circle R/2Z with denominator a power of three,
// kept in the canonical form num/3^level with 0 <= num < 2*3^level and
// level minimal (level == 0 or 3 does not divide num).
struct TriadicAngle {
  Bigint num = 0;
  int level = 0;

  friend bool operator==(const TriadicAngle& a, const TriadicAngle& b) {
    return a.level == b.level && a.num == b.num;
  }
  friend bool operator!=(const TriadicAngle& a, const TriadicAngle& b) { return !(a == b); }
};

// Canonical representative of num/3^level modulo 2. Accepts any integer
// numerator and any nonnegative level.
TriadicAngle normalize(Bigint num, int level);

inline TriadicAngle angle(long long num, int level = 0) { return normalize(Bigint(num), level); }

// Position order on the representative in [0, 2).
int compare_position(const TriadicAngle& a, const TriadicAngle& b);
inline bool position_less(const TriadicAngle& a, const TriadicAngle& b) {
  return compare_position(a, b) < 0;
}

TriadicAngle add(const TriadicAngle& a, const TriadicAngle& b);
TriadicAngle sub(const TriadicAngle& a, const TriadicAngle& b);

// Ternary digit view a0.a1a2...a_count (a0 in {0,1}), terminating expansion
// padded with zeros.
std::vector<int> digits(const TriadicAngle& x, int count);
std::string digits_string(const TriadicAngle& x, int count);

// Inverse of `digits` on well-formed finite sequences: first digit 0 or 1,
// the rest 0..2. Throws ValidationError on malformed input.
TriadicAngle from_digits(const std::vector<int>& seq);
TriadicAngle from_digits(const std::string& text);

enum class CyclicOrder { positive, negative, degenerate };

// positive iff y lies on the open counterclockwise arc from x to z.
CyclicOrder cyclic_order(const TriadicAngle& x, const TriadicAngle& y, const TriadicAngle& z);

// Closed circle arc [start, start + 3^-len_level], traversed counterclockwise.
struct Arc {
  TriadicAngle start;
  int len_level = 0;

  TriadicAngle end() const;
  // One third of the way in; always a triadic interior point.
  TriadicAngle probe() const;

  friend bool operator==(const Arc& a, const Arc& b) {
    return a.len_level == b.len_level && a.start == b.start;
  }
};

// Offset of x from the arc start, in [0, 2).
TriadicAngle arc_offset(const Arc& a, const TriadicAngle& x);
bool arc_contains(const Arc& a, const TriadicAngle& x);
bool arc_strictly_contains(const Arc& a, const TriadicAngle& x);

// Image of x under the affine map src -> dst with slope sign * 3^(a-b),
// where 3^-a, 3^-b are the arc lengths. sign = -1 reverses the arc.
TriadicAngle affine_image(const TriadicAngle& x, const Arc& src, const Arc& dst, int sign);

std::string to_string(const TriadicAngle& x);  // "num/3^level"

}  // namespace basilica
