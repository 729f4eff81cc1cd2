#include "basilica/lamination.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace basilica {

Leaf::Leaf(Bigint k_, int n_) : k(std::move(k_)), n(n_) {
  detail::require(n >= 0 && k >= 0, errc::malformed_input, "leaf indices must be nonnegative");
  detail::require(3 * k + 1 < 2 * pow3(n), errc::malformed_input, "leaf endpoint out of range");
  detail::require(n > 0 || k == 0, errc::malformed_input, "level 0 admits only the diameter");
}

TriadicAngle Leaf::endpoint_a() const { return normalize(3 * k + 1, n); }
TriadicAngle Leaf::endpoint_b() const { return normalize(3 * k + 2, n); }
Arc Leaf::middle_arc() const { return Arc{endpoint_a(), n}; }

VertexId VertexId::central(int arc) {
  detail::require(arc == 0 || arc == 1, errc::malformed_input, "central arc must be 0 or 1");
  return VertexId{std::nullopt, arc};
}

VertexId VertexId::inner_of(const Leaf& l) {
  detail::require(!l.is_diameter(), errc::malformed_input, "Inner(diameter) is not a vertex");
  return VertexId{l, 0};
}

Arc VertexId::base_arc() const {
  if (is_central()) return Arc{normalize(central_arc, 0), 0};
  return inner->middle_arc();
}

Leaf VertexId::longest_side() const { return is_central() ? diameter() : *inner; }

bool equivalent(const TriadicAngle& x, const TriadicAngle& y) {
  if (x.level != y.level) return false;
  if (x.level == 0) {
    Bigint lo = std::min(x.num, y.num), hi = std::max(x.num, y.num);
    return lo == 0 && hi == 1;
  }
  Bigint lo = std::min(x.num, y.num), hi = std::max(x.num, y.num);
  return hi == lo + 1 && lo % 3 == 1;
}

Leaf leaf_from_endpoints(const TriadicAngle& x, const TriadicAngle& y) {
  detail::require(equivalent(x, y), errc::not_equivalent, "points are not an identified pair");
  if (x.level == 0) return diameter();
  Bigint lo = std::min(x.num, y.num);
  return Leaf((lo - 1) / 3, x.level);
}

Leaf leaf_of_endpoint(const TriadicAngle& x) {
  if (x.level == 0) {
    detail::require(x.num == 0 || x.num == 1, errc::not_equivalent,
                    "integer point is not a chord endpoint");
    return diameter();
  }
  Bigint r = x.num % 3;
  detail::ensure(r != 0, errc::not_equivalent, "normalized angle with residue 0");
  return Leaf((x.num - r) / 3, x.level);
}

namespace {

// Walk of the enclosing construction arcs: (a, m) describes [a/3^m, (a+1)/3^m].
// Stops at the first middle-third arc, or at a base arc when m hits 0.
std::pair<Bigint, int> parent_walk(const Leaf& l) {
  Bigint a = 3 * l.k;
  int m = l.n;
  while (m > 0 && a % 3 != 1) {
    a /= 3;
    --m;
  }
  return {a, m};
}

}  // namespace

Leaf parent(const Leaf& l) {
  detail::require(!l.is_diameter(), errc::diameter_has_no_parent, "the diameter has no parent");
  auto [a, m] = parent_walk(l);
  if (m == 0) return diameter();
  return Leaf((a - 1) / 3, m);
}

std::pair<VertexId, VertexId> edge_endpoints(const Leaf& l) {
  if (l.is_diameter()) return {VertexId::central(0), VertexId::central(1)};
  return {VertexId::inner_of(l), outer_vertex(l)};
}

VertexId outer_vertex(const Leaf& l) {
  detail::require(!l.is_diameter(), errc::malformed_input, "diameter has no single outer vertex");
  auto [a, m] = parent_walk(l);
  if (m == 0) return VertexId::central(static_cast<int>(a));
  return VertexId::inner_of(Leaf((a - 1) / 3, m));
}

VertexId common_vertex(const Leaf& a, const Leaf& b) {
  auto [a1, a2] = edge_endpoints(a);
  auto [b1, b2] = edge_endpoints(b);
  if (a1 == b1 || a1 == b2) return a1;
  if (a2 == b1 || a2 == b2) return a2;
  throw ValidationError(errc::incidence_broken, "leaves " + to_string(a) + " and " +
                                                    to_string(b) + " share no vertex");
}

namespace {

void collect_sides(const Arc& arc, int max_level, std::vector<Leaf>& out) {
  int child = arc.len_level + 1;
  if (child > max_level) return;
  Bigint c = arc.start.num * pow3(arc.len_level - arc.start.level);
  // Middle chord of [c/3^m, (c+1)/3^m] is the leaf (c, m+1); its own middle
  // arc belongs to the inner Cantorgon, so recursion continues only into the
  // left and right thirds.
  Arc left{arc.start, child};
  collect_sides(left, max_level, out);
  out.push_back(Leaf(c, child));
  Arc right{add(arc.start, normalize(2, child)), child};
  collect_sides(right, max_level, out);
}

}  // namespace

std::vector<Leaf> sides(const VertexId& v, int max_level) {
  std::vector<Leaf> out;
  Leaf longest = v.longest_side();
  if (longest.n <= max_level) out.push_back(longest);
  collect_sides(v.base_arc(), max_level, out);
  return out;
}

TriadicAngle occupied_start(const VertexId& v, const Leaf& side) {
  if (side == v.longest_side()) return v.base_arc().end();
  return side.endpoint_a();
}

TriadicAngle occupied_end(const VertexId& v, const Leaf& side) {
  if (side == v.longest_side()) return v.base_arc().start;
  return side.endpoint_b();
}

namespace {

bool strictly_inside_gap(const Gap& gap, const TriadicAngle& a, const TriadicAngle& b) {
  // Both endpoints inside the ccw arc (from, to), in forward order.
  TriadicAngle width = sub(gap.to, gap.from);
  TriadicAngle oa = sub(a, gap.from);
  TriadicAngle ob = sub(b, gap.from);
  if (oa.num == 0 || ob.num == 0) return false;
  return compare_position(oa, width) < 0 && compare_position(ob, width) < 0 &&
         compare_position(oa, ob) < 0;
}

}  // namespace

Leaf max_side_in_gap(const VertexId& v, const Gap& gap) {
  Leaf longest = v.longest_side();
  if (strictly_inside_gap(gap, occupied_start(v, longest), occupied_end(v, longest)))
    return longest;
  Arc cur = v.base_arc();
  int limit = std::max(gap.from.level, gap.to.level) + 2;
  while (cur.len_level <= limit) {
    Bigint c = cur.start.num * pow3(cur.len_level - cur.start.level);
    Leaf chord(c, cur.len_level + 1);
    if (strictly_inside_gap(gap, chord.endpoint_a(), chord.endpoint_b())) return chord;
    Arc left{cur.start, cur.len_level + 1};
    Arc right{add(cur.start, normalize(2, cur.len_level + 1)), cur.len_level + 1};
    TriadicAngle from_off = sub(gap.from, cur.start);
    TriadicAngle to_off = sub(gap.to, cur.start);
    TriadicAngle third = normalize(1, cur.len_level + 1);
    TriadicAngle two_thirds = normalize(2, cur.len_level + 1);
    if (compare_position(to_off, third) <= 0 && compare_position(from_off, to_off) < 0) {
      cur = left;
    } else if (compare_position(from_off, two_thirds) >= 0 &&
               compare_position(from_off, to_off) < 0) {
      cur = right;
    } else {
      break;
    }
  }
  throw ValidationError(errc::empty_gap, "no side inside the gap");
}

Gap gap_left_of(const Gap& gap, const Leaf& side) { return Gap{gap.from, side.endpoint_a()}; }
Gap gap_right_of(const Gap& gap, const Leaf& side) { return Gap{side.endpoint_b(), gap.to}; }

std::vector<Leaf> tree_path(const Leaf& e, const Leaf& f) {
  auto chain = [](Leaf l) {
    std::vector<Leaf> c{l};
    while (!l.is_diameter()) {
      l = parent(l);
      c.push_back(l);
    }
    return c;
  };
  std::vector<Leaf> ce = chain(e);
  std::vector<Leaf> cf = chain(f);
  std::map<Leaf, size_t> pos;
  for (size_t i = 0; i < ce.size(); ++i) pos.emplace(ce[i], i);
  size_t meet_f = 0;
  while (!pos.count(cf[meet_f])) ++meet_f;
  size_t meet_e = pos[cf[meet_f]];
  std::vector<Leaf> path(ce.begin(), ce.begin() + meet_e + 1);
  for (size_t i = meet_f; i-- > 0;) path.push_back(cf[i]);
  return path;
}

bool is_connected_edge_set(const std::vector<Leaf>& leaves) {
  if (leaves.empty()) return false;
  std::vector<std::pair<VertexId, size_t>> incidence;
  incidence.reserve(leaves.size() * 2);
  for (size_t i = 0; i < leaves.size(); ++i) {
    auto [u, w] = edge_endpoints(leaves[i]);
    incidence.emplace_back(u, i);
    incidence.emplace_back(w, i);
  }
  std::sort(incidence.begin(), incidence.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<int> seen(leaves.size(), 0);
  std::vector<size_t> stack{0};
  seen[0] = 1;
  size_t reached = 1;
  while (!stack.empty()) {
    size_t i = stack.back();
    stack.pop_back();
    auto [u, w] = edge_endpoints(leaves[i]);
    for (const VertexId& v : {u, w}) {
      auto it = std::lower_bound(
          incidence.begin(), incidence.end(), v,
          [](const auto& a, const VertexId& key) { return a.first < key; });
      for (; it != incidence.end() && it->first == v; ++it) {
        if (!seen[it->second]) {
          seen[it->second] = 1;
          ++reached;
          stack.push_back(it->second);
        }
      }
    }
  }
  return reached == leaves.size();
}

std::string to_string(const Leaf& l) {
  std::ostringstream os;
  os << l.k << ":" << l.n;
  return os.str();
}

std::string to_string(const VertexId& v) {
  if (v.is_central()) return v.central_arc == 0 ? "C0" : "C1";
  return "I(" + to_string(*v.inner) + ")";
}

}  // namespace basilica
