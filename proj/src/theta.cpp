#include "basilica/theta.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace basilica {

bool operator<(const DyadicAngle& a, const DyadicAngle& b) {
  if (a.level == b.level) return a.num < b.num;
  int l = std::max(a.level, b.level);
  return a.num * pow2(l - a.level) < b.num * pow2(l - b.level);
}

DyadicAngle normalize_dyadic(Bigint num, int level) {
  detail::require(level >= 0, errc::malformed_input, "negative level");
  num = floor_mod(num, 3 * pow2(level));
  while (level > 0 && num % 2 == 0) {
    num /= 2;
    --level;
  }
  return DyadicAngle{std::move(num), level};
}

DyadicAngle dyadic(long long num, int level) { return normalize_dyadic(Bigint(num), level); }

DyadicAngle dyadic_add(const DyadicAngle& a, const DyadicAngle& b) {
  int l = std::max(a.level, b.level);
  return normalize_dyadic(a.num * pow2(l - a.level) + b.num * pow2(l - b.level), l);
}

DyadicAngle dyadic_sub(const DyadicAngle& a, const DyadicAngle& b) {
  int l = std::max(a.level, b.level);
  return normalize_dyadic(a.num * pow2(l - a.level) - b.num * pow2(l - b.level), l);
}

BinaryLeaf binary_leaf(const DyadicAngle& x, const DyadicAngle& y) {
  return x < y ? BinaryLeaf{x, y} : BinaryLeaf{y, x};
}

namespace {

// Arc of the binary model: [start, start + 2^-width_exp] on R/3Z. The two
// root arcs of width one have exponent 0; widths stay powers of two under
// the 1:2:1 division.
struct Arc2 {
  DyadicAngle start;
  int width_exp;

  DyadicAngle at(int quarters) const {  // start + quarters * width/4
    return dyadic_add(start, normalize_dyadic(quarters, width_exp + 2));
  }
};

Arc2 child2(const Arc2& a, int d) {
  switch (d) {
    case 0: return Arc2{a.start, a.width_exp + 2};
    case 1: return Arc2{a.at(1), a.width_exp + 1};
    default: return Arc2{a.at(3), a.width_exp + 2};
  }
}

BinaryLeaf chord_of(const Arc2& a) { return binary_leaf(a.at(1), a.at(3)); }

struct ArcPair {
  Arc tern;
  Arc2 bin;
};

// Stage-0 arcs of the parallel construction, after the root chords
// [1-2] <-> [0-1] and [4/3-5/3] <-> [3/2-5/2] are in place.
std::array<ArcPair, 4> root_arcs() {
  return {ArcPair{Arc{normalize(0, 0), 0}, Arc2{dyadic(0), 0}},
          ArcPair{Arc{normalize(1, 0), 1}, Arc2{dyadic(1), 1}},
          ArcPair{Arc{normalize(4, 1), 1}, Arc2{dyadic(3, 1), 0}},
          ArcPair{Arc{normalize(5, 1), 1}, Arc2{dyadic(5, 1), 1}}};
}

ArcPair child_pair(const ArcPair& p, int d) {
  Arc t{add(p.tern.start, normalize(d, p.tern.len_level + 1)), p.tern.len_level + 1};
  return ArcPair{t, child2(p.bin, d)};
}

int ternary_digit_in(const Arc& arc, const TriadicAngle& x) {
  TriadicAngle off = sub(x, arc.start);
  if (compare_position(off, normalize(1, arc.len_level + 1)) < 0) return 0;
  if (compare_position(off, normalize(2, arc.len_level + 1)) < 0) return 1;
  return 2;
}

}  // namespace

std::vector<BinaryLeaf> binary_lamination(int depth) {
  detail::require(depth >= 0, errc::malformed_input, "negative depth");
  std::vector<BinaryLeaf> out{binary_leaf(dyadic(0), dyadic(1)),
                              binary_leaf(dyadic(3, 1), dyadic(5, 1))};
  std::vector<Arc2> arcs;
  for (const ArcPair& p : root_arcs()) arcs.push_back(p.bin);
  for (int round = 0; round < depth; ++round) {
    std::vector<Arc2> next;
    next.reserve(arcs.size() * 3);
    for (const Arc2& a : arcs) {
      out.push_back(chord_of(a));
      for (int d = 0; d < 3; ++d) next.push_back(child2(a, d));
    }
    arcs = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

DyadicAngle theta(const TriadicAngle& x) {
  ArcPair cur{};
  bool found = false;
  for (const ArcPair& p : root_arcs()) {
    TriadicAngle off = sub(x, p.tern.start);
    if (compare_position(off, normalize(1, p.tern.len_level)) < 0) {
      cur = p;
      found = true;
      break;
    }
  }
  detail::ensure(found, errc::conjugacy_failure, "point escaped the root arcs");
  for (int step = 0; step <= x.level + 2; ++step) {
    if (x == cur.tern.start) return cur.bin.start;
    cur = child_pair(cur, ternary_digit_in(cur.tern, x));
  }
  throw InternalError(errc::conjugacy_failure, "descent did not terminate");
}

namespace {

const std::array<std::pair<int, int>, 3> kPhi = {{{1, 2}, {1, 1}, {1, 2}}};  // num, level
const std::array<std::pair<int, int>, 3> kPsi = {{{0, 0}, {1, 2}, {3, 2}}};

void check_digits(const std::vector<int>& seq) {
  detail::require(!seq.empty() && (seq[0] == 0 || seq[0] == 1), errc::malformed_input,
                  "integer digit must be 0 or 1");
  for (size_t i = 1; i < seq.size(); ++i)
    detail::require(seq[i] >= 0 && seq[i] <= 2, errc::malformed_input, "bad ternary digit");
}

}  // namespace

namespace {

struct Frac2 {  // num / 2^level, unreduced accumulator
  Bigint num;
  int level;
};

void frac2_add(Frac2& total, const Bigint& num, int level) {
  if (level > total.level) {
    total.num *= pow2(level - total.level);
    total.level = level;
  }
  total.num += num * pow2(total.level - level);
}

}  // namespace

DyadicAngle theta_closed_form(const std::vector<int>& seq) {
  check_digits(seq);
  // c(0)=0, c(1)=1; w(0)=1, w(1)=2; products start at p=1.
  Frac2 total{0, 0};
  Bigint prefix_num = 1;
  int prefix_level = 0;
  for (size_t i = 1; i < seq.size(); ++i) {
    auto [pn, pl] = kPsi[seq[i]];
    frac2_add(total, prefix_num * pn, prefix_level + pl);
    auto [fn, fl] = kPhi[seq[i]];
    prefix_num *= fn;
    prefix_level += fl;
  }
  int w_shift = seq[0] == 1 ? 1 : 0;  // multiply by w(a0)
  Bigint c = seq[0] == 1 ? 1 : 0;
  return normalize_dyadic(c * pow2(total.level) + total.num * pow2(w_shift), total.level);
}

DyadicAngle theta_printed_form(const std::vector<int>& seq) {
  check_digits(seq);
  // psi(a0)/phi(0) + sum with products from p=0.
  auto [h0n, h0l] = kPsi[seq[0]];
  Frac2 total{Bigint(h0n) * 4, h0l};  // divided by phi(0) = 1/4
  Bigint prefix_num = kPhi[seq[0]].first;
  int prefix_level = kPhi[seq[0]].second;
  for (size_t i = 1; i < seq.size(); ++i) {
    auto [pn, pl] = kPsi[seq[i]];
    frac2_add(total, prefix_num * pn, prefix_level + pl);
    auto [fn, fl] = kPhi[seq[i]];
    prefix_num *= fn;
    prefix_level += fl;
  }
  return normalize_dyadic(total.num, total.level);
}

BinaryLeaf theta_leaf(const Leaf& l) {
  BinaryLeaf image = binary_leaf(theta(l.endpoint_a()), theta(l.endpoint_b()));
  std::vector<BinaryLeaf> chords = binary_lamination(construction_stage(l));
  detail::ensure(std::binary_search(chords.begin(), chords.end(), image),
                 errc::conjugacy_failure, "image is not a chord of the binary model");
  return image;
}

int construction_stage(const Leaf& l) {
  if (l.is_diameter()) return 0;
  return 3 * l.k + 1 < pow3(l.n) ? l.n : l.n - 1;
}

std::vector<std::pair<Leaf, BinaryLeaf>> structural_match(int depth) {
  detail::require(depth >= 0, errc::malformed_input, "negative depth");
  std::vector<std::pair<Leaf, BinaryLeaf>> out{
      {diameter(), binary_leaf(dyadic(0), dyadic(1))},
      {Leaf(1, 1), binary_leaf(dyadic(3, 1), dyadic(5, 1))}};
  std::vector<ArcPair> arcs;
  for (const ArcPair& p : root_arcs()) arcs.push_back(p);
  for (int round = 0; round < depth; ++round) {
    std::vector<ArcPair> next;
    next.reserve(arcs.size() * 3);
    for (const ArcPair& p : arcs) {
      Bigint c = p.tern.start.num * pow3(p.tern.len_level - p.tern.start.level);
      out.emplace_back(Leaf(c, p.tern.len_level + 1), chord_of(p.bin));
      for (int d = 0; d < 3; ++d) next.push_back(child_pair(p, d));
    }
    arcs = std::move(next);
  }
  return out;
}

TriadicAngle theta_inverse(const DyadicAngle& y) {
  ArcPair cur{};
  bool found = false;
  for (const ArcPair& p : root_arcs()) {
    DyadicAngle off = dyadic_sub(y, p.bin.start);
    if (off < normalize_dyadic(1, p.bin.width_exp)) {
      cur = p;
      found = true;
      break;
    }
  }
  detail::require(found, errc::malformed_input, "point escaped the root arcs");
  for (int step = 0; step <= 2 * y.level + 6; ++step) {
    if (y == cur.bin.start) return cur.tern.start;
    DyadicAngle off = dyadic_sub(y, cur.bin.start);
    int d = 2;
    if (off < normalize_dyadic(1, cur.bin.width_exp + 2))
      d = 0;
    else if (off < normalize_dyadic(3, cur.bin.width_exp + 2))
      d = 1;
    cur = child_pair(cur, d);
  }
  throw ValidationError(errc::malformed_input, "not a construction point of the binary model");
}

Leaf theta_inverse_leaf(const BinaryLeaf& bl) {
  return leaf_from_endpoints(theta_inverse(bl.a), theta_inverse(bl.b));
}

std::string to_string(const DyadicAngle& x) {
  std::ostringstream os;
  os << x.num;
  if (x.level > 0) os << "/" << pow2(x.level);
  return os.str();
}

std::string to_string(const BinaryLeaf& l) {
  return "b:" + to_string(l.a) + ":" + to_string(l.b);
}

}  // namespace basilica
