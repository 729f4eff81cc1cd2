#pragma once

#include "basilica/lamination.hpp"

namespace basilica {

// Exact point of the circle R/3Z with a power-of-two denominator, canonical
// form num/2^level with 0 <= num < 3*2^level and num odd unless level is 0.
struct DyadicAngle {
  Bigint num = 0;
  int level = 0;

  friend bool operator==(const DyadicAngle& a, const DyadicAngle& b) {
    return a.level == b.level && a.num == b.num;
  }
  friend bool operator!=(const DyadicAngle& a, const DyadicAngle& b) { return !(a == b); }
  friend bool operator<(const DyadicAngle& a, const DyadicAngle& b);
};

DyadicAngle normalize_dyadic(Bigint num, int level);
DyadicAngle dyadic(long long num, int level = 0);
DyadicAngle dyadic_add(const DyadicAngle& a, const DyadicAngle& b);
DyadicAngle dyadic_sub(const DyadicAngle& a, const DyadicAngle& b);

// Chord of the 1:2:1 lamination, endpoints in position order.
struct BinaryLeaf {
  DyadicAngle a;
  DyadicAngle b;

  friend bool operator==(const BinaryLeaf& x, const BinaryLeaf& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator<(const BinaryLeaf& x, const BinaryLeaf& y) {
    if (!(x.a == y.a)) return x.a < y.a;
    return x.b < y.b;
  }
};

BinaryLeaf binary_leaf(const DyadicAngle& x, const DyadicAngle& y);

// All chords of the binary model through the given subdivision depth:
// depth 0 is the two initial chords [0-1] and [3/2-5/2]; each further round
// divides every arc with ratios 1:2:1.
std::vector<BinaryLeaf> binary_lamination(int depth);

// The conjugating circle map, computed by descending the paired subdivision
// trees (ternary arc digit d goes to binary sub-arc d). Exact on every
// triadic point; strictly increasing as a map of lifts [0,2) -> [0,3).
DyadicAngle theta(const TriadicAngle& x);

// Closed form c(a0) + w(a0) * sum phi-products * psi; equals the structural
// recursion on every terminating digit string.
DyadicAngle theta_closed_form(const std::vector<int>& digit_seq);

// The series with the first term psi(a0)/phi(0) and products starting at
// p = 0. Kept for comparison; it disagrees with the subdivision recursion
// (already at 0.1) and is not used by the kernel.
DyadicAngle theta_printed_form(const std::vector<int>& digit_seq);

Leaf theta_inverse_leaf(const BinaryLeaf& bl);
TriadicAngle theta_inverse(const DyadicAngle& y);  // construction points only

// Image chord of a leaf; lands in binary_lamination(construction_stage(l)).
BinaryLeaf theta_leaf(const Leaf& l);

// Stage at which a leaf appears in the parallel construction (the diameter
// and [4/3-5/3] are the stage-0 roots).
int construction_stage(const Leaf& l);

// The stage-by-stage bijection between the two chord systems.
std::vector<std::pair<Leaf, BinaryLeaf>> structural_match(int depth);

std::string to_string(const DyadicAngle& x);  // reduced fraction, e.g. "1/4"
std::string to_string(const BinaryLeaf& l);   // "b:1/4:3/4"

}  // namespace basilica
