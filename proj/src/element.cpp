#include "basilica/element.hpp"

#include <algorithm>

namespace basilica {

namespace {

bool shift_compatible(const PerfectDiagram& dom, const PerfectDiagram& ran, size_t s) {
  size_t n = dom.vertex_count();
  for (size_t i = 0; i < n; ++i)
    if (ran.paired_vertex((i + s) % n) != (dom.paired_vertex(i) + s) % n) return false;
  return true;
}

}  // namespace

ThompsonElement::ThompsonElement(PerfectDiagram dom, PerfectDiagram ran, size_t shift)
    : dom_(std::move(dom)), ran_(std::move(ran)), shift_(shift) {
  detail::require(dom_.vertex_count() == ran_.vertex_count(), errc::size_mismatch,
                  "diagrams have different sizes");
  shift_ %= dom_.vertex_count();
  detail::require(shift_compatible(dom_, ran_, shift_), errc::invalid_isomorphism,
                  "shift does not identify the diagrams");
}

std::vector<size_t> isomorphism_shifts(const PerfectDiagram& dom, const PerfectDiagram& ran) {
  std::vector<size_t> out;
  if (dom.vertex_count() != ran.vertex_count()) return out;
  for (size_t s = 0; s < dom.vertex_count(); ++s)
    if (shift_compatible(dom, ran, s)) out.push_back(s);
  return out;
}

TriadicAngle apply(const ThompsonElement& g, const TriadicAngle& x) {
  size_t n = g.dom().vertex_count();
  if (auto vi = g.dom().vertex_index(x)) return g.ran().vertex((*vi + g.shift()) % n);
  size_t i = g.dom().interval_containing(x);
  return affine_image(x, g.dom().interval(i), g.ran().interval((i + g.shift()) % n), +1);
}

Leaf apply_leaf(const ThompsonElement& g, const Leaf& l) {
  size_t n = g.dom().vertex_count();
  if (auto vi = g.dom().vertex_index(l.endpoint_a())) {
    // Diagram leaf: endpoints are paired vertices, transported by the shift.
    return leaf_of_endpoint(g.ran().vertex((*vi + g.shift()) % n));
  }
  // Off-diagram leaf: its middle arc sits inside one interval.
  size_t ia = g.dom().interval_containing(l.endpoint_a());
  size_t ib = g.dom().interval_containing(l.endpoint_b());
  detail::ensure(ia == ib, errc::leaf_transport_failure,
                 "leaf endpoints fell in different intervals");
  const Arc& src = g.dom().interval(ia);
  const Arc& dst = g.ran().interval((ia + g.shift()) % n);
  TriadicAngle a = affine_image(l.endpoint_a(), src, dst, +1);
  TriadicAngle b = affine_image(l.endpoint_b(), src, dst, +1);
  detail::ensure(equivalent(a, b), errc::leaf_transport_failure,
                 "images of an identified pair are not identified");
  return leaf_from_endpoints(a, b);
}

ThompsonElement invert(const ThompsonElement& g) {
  size_t n = g.dom().vertex_count();
  return ThompsonElement(g.ran(), g.dom(), (n - g.shift() % n) % n);
}

ThompsonElement compose(const ThompsonElement& g, const ThompsonElement& h) {
  PerfectDiagram mid = diagram_union(h.ran(), g.dom());
  ThompsonElement hinv = invert(h);
  std::vector<Leaf> dom_leaves, ran_leaves;
  dom_leaves.reserve(mid.size());
  ran_leaves.reserve(mid.size());
  for (const Leaf& l : mid.leaves()) {
    dom_leaves.push_back(apply_leaf(hinv, l));
    ran_leaves.push_back(apply_leaf(g, l));
  }
  PerfectDiagram dom(std::move(dom_leaves));
  PerfectDiagram ran(std::move(ran_leaves));
  detail::ensure(dom.vertex_count() == mid.vertex_count() &&
                     ran.vertex_count() == mid.vertex_count(),
                 errc::refinement_failure, "pullback lost vertices");
  // Shift from the image of dom vertex 0; uniformity is checked below.
  size_t n = dom.vertex_count();
  auto through = [&](const TriadicAngle& x) { return apply(g, apply(h, x)); };
  auto s0 = ran.vertex_index(through(dom.vertex(0)));
  detail::ensure(s0.has_value(), errc::refinement_failure, "image of a vertex is not a vertex");
  for (size_t i = 1; i < n; ++i) {
    auto si = ran.vertex_index(through(dom.vertex(i)));
    detail::ensure(si.has_value() && *si == (*s0 + i) % n, errc::refinement_failure,
                   "composite index map is not a uniform shift");
  }
  return ThompsonElement(std::move(dom), std::move(ran), *s0);
}

bool is_identity(const ThompsonElement& g) {
  return g.shift() == 0 && g.dom() == g.ran();
}

bool equals(const ThompsonElement& g, const ThompsonElement& h) {
  return is_identity(compose(g, invert(h)));
}

ThompsonElement reduce(const ThompsonElement& g) {
  ThompsonElement cur = g;
  for (;;) {
    std::set<Leaf> rd = removable_leaves(cur.dom());
    std::set<Leaf> rr = removable_leaves(cur.ran());
    bool removed = false;
    size_t n = cur.dom().vertex_count();
    for (const Leaf& l : rd) {
      size_t ia = *cur.dom().vertex_index(l.endpoint_a());
      Leaf image = leaf_of_endpoint(cur.ran().vertex((ia + cur.shift()) % n));
      if (!rr.count(image)) continue;
      std::vector<Leaf> dl = cur.dom().leaves();
      std::vector<Leaf> rl = cur.ran().leaves();
      dl.erase(std::find(dl.begin(), dl.end(), l));
      rl.erase(std::find(rl.begin(), rl.end(), image));
      PerfectDiagram dom(std::move(dl));
      PerfectDiagram ran(std::move(rl));
      // Recompute the shift from any surviving vertex.
      TriadicAngle witness = dom.vertex(0);
      size_t old_i = *cur.dom().vertex_index(witness);
      TriadicAngle image_angle = cur.ran().vertex((old_i + cur.shift()) % n);
      size_t new_i = *dom.vertex_index(witness);
      size_t new_j = *ran.vertex_index(image_angle);
      size_t m = dom.vertex_count();
      cur = ThompsonElement(std::move(dom), std::move(ran), (new_j + m - new_i) % m);
      removed = true;
      break;
    }
    if (!removed) return cur;
  }
}

Leaf pi_edge(const ThompsonElement& g, const Leaf& l) { return apply_leaf(g, l); }

VertexId pi_vertex(const ThompsonElement& g, const VertexId& v) {
  std::vector<Leaf> two = sides(v, v.longest_side().n + 1);
  detail::ensure(two.size() >= 2, errc::refinement_failure, "vertex with fewer than two sides");
  return common_vertex(apply_leaf(g, two[0]), apply_leaf(g, two[1]));
}

}  // namespace basilica
