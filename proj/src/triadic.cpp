#include "basilica/triadic.hpp"

#include <sstream>

namespace basilica {

const char* errc_name(errc c) {
  switch (c) {
    case errc::malformed_input: return "MalformedInput";
    case errc::not_equivalent: return "NotEquivalent";
    case errc::diameter_has_no_parent: return "DiameterHasNoParent";
    case errc::outside_source_arc: return "OutsideSourceArc";
    case errc::bad_index: return "BadIndex";
    case errc::empty_gap: return "EmptyGap";
    case errc::completion_failed: return "CompletionFailed";
    case errc::size_mismatch: return "SizeMismatch";
    case errc::invalid_isomorphism: return "InvalidIsomorphism";
    case errc::leaf_transport_failure: return "LeafTransportFailure";
    case errc::refinement_failure: return "RefinementFailure";
    case errc::disconnected: return "Disconnected";
    case errc::incidence_broken: return "IncidenceBroken";
    case errc::cyclic_order_broken: return "CyclicOrderBroken";
    case errc::precondition_diam: return "PreconditionDiam";
    case errc::no_isomorphism: return "NoIsomorphism";
    case errc::conjugacy_failure: return "ConjugacyFailure";
    case errc::io_failure: return "IoFailure";
  }
  return "UnknownError";
}

TriadicAngle normalize(Bigint num, int level) {
  detail::require(level >= 0, errc::malformed_input, "negative level");
  num = floor_mod(num, 2 * pow3(level));
  while (level > 0 && num % 3 == 0) {
    num /= 3;
    --level;
  }
  return TriadicAngle{std::move(num), level};
}

int compare_position(const TriadicAngle& a, const TriadicAngle& b) {
  if (a.level == b.level) return a.num.compare(b.num);
  int l = std::max(a.level, b.level);
  Bigint an = a.num * pow3(l - a.level);
  Bigint bn = b.num * pow3(l - b.level);
  return an.compare(bn);
}

TriadicAngle add(const TriadicAngle& a, const TriadicAngle& b) {
  int l = std::max(a.level, b.level);
  return normalize(a.num * pow3(l - a.level) + b.num * pow3(l - b.level), l);
}

TriadicAngle sub(const TriadicAngle& a, const TriadicAngle& b) {
  int l = std::max(a.level, b.level);
  return normalize(a.num * pow3(l - a.level) - b.num * pow3(l - b.level), l);
}

std::vector<int> digits(const TriadicAngle& x, int count) {
  detail::require(count >= 0, errc::malformed_input, "negative digit count");
  std::vector<int> out;
  out.reserve(count + 1);
  Bigint den = pow3(x.level);
  Bigint rem = x.num;
  out.push_back(static_cast<int>(rem / den));
  rem %= den;
  for (int i = 0; i < count; ++i) {
    rem *= 3;
    out.push_back(static_cast<int>(rem / den));
    rem %= den;
  }
  return out;
}

std::string digits_string(const TriadicAngle& x, int count) {
  std::vector<int> d = digits(x, count);
  std::string s;
  s += static_cast<char>('0' + d[0]);
  s += '.';
  for (size_t i = 1; i < d.size(); ++i) s += static_cast<char>('0' + d[i]);
  return s;
}

TriadicAngle from_digits(const std::vector<int>& seq) {
  detail::require(!seq.empty(), errc::malformed_input, "empty digit sequence");
  detail::require(seq[0] == 0 || seq[0] == 1, errc::malformed_input,
                  "integer digit must be 0 or 1");
  Bigint num = seq[0];
  for (size_t i = 1; i < seq.size(); ++i) {
    detail::require(seq[i] >= 0 && seq[i] <= 2, errc::malformed_input,
                    "fractional digit must be 0, 1 or 2");
    num = num * 3 + seq[i];
  }
  return normalize(num, static_cast<int>(seq.size()) - 1);
}

TriadicAngle from_digits(const std::string& text) {
  std::vector<int> seq;
  bool seen_dot = false;
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '.') {
      detail::require(!seen_dot && i == 1, errc::malformed_input,
                      "digit string must look like a0.a1a2...");
      seen_dot = true;
      continue;
    }
    detail::require(c >= '0' && c <= '2', errc::malformed_input, "bad ternary digit");
    seq.push_back(c - '0');
  }
  detail::require(!seq.empty() && (text.size() < 2 || seen_dot), errc::malformed_input,
                  "digit string must look like a0.a1a2...");
  return from_digits(seq);
}

CyclicOrder cyclic_order(const TriadicAngle& x, const TriadicAngle& y, const TriadicAngle& z) {
  if (x == y || y == z || x == z) return CyclicOrder::degenerate;
  TriadicAngle u = sub(y, x);
  TriadicAngle w = sub(z, x);
  return compare_position(u, w) < 0 ? CyclicOrder::positive : CyclicOrder::negative;
}

TriadicAngle Arc::end() const { return add(start, normalize(1, len_level)); }

TriadicAngle Arc::probe() const { return add(start, normalize(1, len_level + 1)); }

TriadicAngle arc_offset(const Arc& a, const TriadicAngle& x) { return sub(x, a.start); }

bool arc_contains(const Arc& a, const TriadicAngle& x) {
  TriadicAngle off = arc_offset(a, x);
  return compare_position(off, normalize(1, a.len_level)) <= 0;
}

bool arc_strictly_contains(const Arc& a, const TriadicAngle& x) {
  TriadicAngle off = arc_offset(a, x);
  if (off.num == 0) return false;
  return compare_position(off, normalize(1, a.len_level)) < 0;
}

TriadicAngle affine_image(const TriadicAngle& x, const Arc& src, const Arc& dst, int sign) {
  detail::require(sign == 1 || sign == -1, errc::malformed_input, "sign must be +-1");
  TriadicAngle off = arc_offset(src, x);
  detail::require(compare_position(off, normalize(1, src.len_level)) <= 0,
                  errc::outside_source_arc, "point outside source arc");
  // Rescale the offset by 3^(src - dst); the result stays within one arc length.
  int l = off.level - src.len_level + dst.len_level;
  TriadicAngle scaled =
      l >= 0 ? normalize(off.num, l) : normalize(off.num * pow3(-l), 0);
  if (sign > 0) return add(dst.start, scaled);
  return sub(dst.end(), scaled);
}

std::string to_string(const TriadicAngle& x) {
  std::ostringstream os;
  os << x.num << "/3^" << x.level;
  return os.str();
}

}  // namespace basilica
