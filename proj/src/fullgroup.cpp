#include "basilica/fullgroup.hpp"

#include <algorithm>

#include "basilica/approx.hpp"

namespace basilica {

namespace {

size_t one_sided_image(const PerfectDiagram& ran, const std::vector<size_t>& target,
                       const std::vector<int>& sign, size_t n, size_t i, int side) {
  // side +1: vertex i as the start of interval i; side -1: as the end of
  // interval i-1. An interval's image runs from target to target+1 when the
  // sign is positive and backwards otherwise.
  if (side > 0) {
    size_t t = target[i];
    return sign[i] > 0 ? t : (t + 1) % ran.vertex_count();
  }
  size_t j = (i + n - 1) % n;
  size_t t = target[j];
  return sign[j] > 0 ? (t + 1) % ran.vertex_count() : t;
}

}  // namespace

std::string validate_continuity(const PerfectDiagram& dom, const PerfectDiagram& ran,
                                const std::vector<size_t>& target,
                                const std::vector<int>& sign) {
  size_t n = dom.vertex_count();
  if (ran.vertex_count() != n) return "diagram sizes differ";
  if (target.size() != n || sign.size() != n) return "interval table sizes differ";
  std::vector<int> hit(n, 0);
  for (size_t i = 0; i < n; ++i) {
    if (sign[i] != 1 && sign[i] != -1) return "interval sign must be +-1";
    if (target[i] >= n) return "interval target out of range";
    hit[target[i]] += 1;
  }
  for (size_t i = 0; i < n; ++i)
    if (hit[i] != 1) return "interval targets are not a bijection";
  for (size_t i = 0; i < n; ++i) {
    size_t left = one_sided_image(ran, target, sign, n, i, -1);
    size_t right = one_sided_image(ran, target, sign, n, i, +1);
    size_t prev = (i + n - 1) % n;
    if (sign[prev] == sign[i]) {
      if (left != right)
        return "one-sided images disagree at vertex " + to_string(dom.vertex(i));
    } else {
      if (ran.paired_vertex(left) != right)
        return "jump at vertex " + to_string(dom.vertex(i)) +
               " does not cross an identified pair";
    }
  }
  for (size_t i = 0; i < n; ++i) {
    size_t j = dom.paired_vertex(i);
    Leaf a = leaf_of_endpoint(ran.vertex(one_sided_image(ran, target, sign, n, i, +1)));
    Leaf b = leaf_of_endpoint(ran.vertex(one_sided_image(ran, target, sign, n, j, +1)));
    if (!(a == b))
      return "chord endpoints " + to_string(dom.vertex(i)) + ", " + to_string(dom.vertex(j)) +
             " map to different classes";
  }
  return std::string();
}

GeneralElement::GeneralElement(PerfectDiagram dom, PerfectDiagram ran,
                               std::vector<size_t> target, std::vector<int> sign)
    : dom_(std::move(dom)), ran_(std::move(ran)), target_(std::move(target)),
      sign_(std::move(sign)) {
  std::string why = validate_continuity(dom_, ran_, target_, sign_);
  detail::require(why.empty(), errc::invalid_isomorphism, why.c_str());
}

GeneralElement GeneralElement::embed_identity() {
  return GeneralElement(PerfectDiagram::base(), PerfectDiagram::base(), {0, 1}, {1, 1});
}

size_t GeneralElement::image_vertex(size_t i, int side) const {
  return one_sided_image(ran_, target_, sign_, dom_.vertex_count(), i, side);
}

TriadicAngle apply(const GeneralElement& g, const TriadicAngle& x) {
  if (auto vi = g.dom().vertex_index(x)) return g.ran().vertex(g.image_vertex(*vi, +1));
  size_t i = g.dom().interval_containing(x);
  return affine_image(x, g.dom().interval(i), g.ran().interval(g.interval_target(i)),
                      g.interval_sign(i));
}

Leaf apply_leaf(const GeneralElement& g, const Leaf& l) {
  if (auto vi = g.dom().vertex_index(l.endpoint_a()))
    return leaf_of_endpoint(g.ran().vertex(g.image_vertex(*vi, +1)));
  size_t ia = g.dom().interval_containing(l.endpoint_a());
  size_t ib = g.dom().interval_containing(l.endpoint_b());
  detail::ensure(ia == ib, errc::leaf_transport_failure,
                 "leaf endpoints fell in different intervals");
  const Arc& src = g.dom().interval(ia);
  const Arc& dst = g.ran().interval(g.interval_target(ia));
  int sign = g.interval_sign(ia);
  TriadicAngle a = affine_image(l.endpoint_a(), src, dst, sign);
  TriadicAngle b = affine_image(l.endpoint_b(), src, dst, sign);
  detail::ensure(equivalent(a, b), errc::leaf_transport_failure,
                 "images of an identified pair are not identified");
  return leaf_from_endpoints(a, b);
}

GeneralElement invert(const GeneralElement& g) {
  size_t n = g.dom().vertex_count();
  std::vector<size_t> target(n);
  std::vector<int> sign(n);
  for (size_t i = 0; i < n; ++i) {
    target[g.interval_target(i)] = i;
    sign[g.interval_target(i)] = g.interval_sign(i);
  }
  return GeneralElement(g.ran(), g.dom(), std::move(target), std::move(sign));
}

GeneralElement compose(const GeneralElement& g, const GeneralElement& h) {
  PerfectDiagram mid = diagram_union(h.ran(), g.dom());
  GeneralElement hinv = invert(h);
  std::vector<Leaf> dom_leaves, ran_leaves;
  dom_leaves.reserve(mid.size());
  ran_leaves.reserve(mid.size());
  for (const Leaf& l : mid.leaves()) {
    dom_leaves.push_back(apply_leaf(hinv, l));
    ran_leaves.push_back(apply_leaf(g, l));
  }
  try {
    PerfectDiagram dom(std::move(dom_leaves));
    PerfectDiagram ran(std::move(ran_leaves));
    size_t n = dom.vertex_count();
    std::vector<size_t> target(n);
    std::vector<int> sign(n);
    for (size_t i = 0; i < n; ++i) {
      TriadicAngle p = dom.interval(i).probe();
      size_t ih = h.dom().interval_containing(p);
      TriadicAngle q = apply(h, p);
      size_t ig = g.dom().interval_containing(q);
      TriadicAngle r = apply(g, q);
      target[i] = ran.interval_containing(r);
      sign[i] = h.interval_sign(ih) * g.interval_sign(ig);
    }
    return GeneralElement(std::move(dom), std::move(ran), std::move(target), std::move(sign));
  } catch (const ValidationError& e) {
    throw InternalError(errc::refinement_failure,
                        std::string("composition broke down: ") + e.what());
  }
}

bool is_identity(const GeneralElement& g) {
  if (!(g.dom() == g.ran())) return false;
  for (size_t i = 0; i < g.dom().vertex_count(); ++i)
    if (g.interval_target(i) != i || g.interval_sign(i) != 1) return false;
  return true;
}

bool equals(const GeneralElement& g, const GeneralElement& h) {
  return is_identity(compose(g, invert(h)));
}

GeneralElement embed(const ThompsonElement& g) {
  size_t n = g.dom().vertex_count();
  std::vector<size_t> target(n);
  std::vector<int> sign(n, 1);
  for (size_t i = 0; i < n; ++i) target[i] = (i + g.shift()) % n;
  return GeneralElement(g.dom(), g.ran(), std::move(target), std::move(sign));
}

namespace {

bool arc_within(const Arc& inner, const Arc& outer) {
  TriadicAngle off = sub(inner.start, outer.start);
  TriadicAngle reach = add(off, normalize(1, inner.len_level));
  return compare_position(off, normalize(1, outer.len_level)) <= 0 &&
         compare_position(reach, normalize(1, outer.len_level)) <= 0 &&
         compare_position(off, reach) < 0;
}

GeneralElement reflection_flip(const Leaf& l, const Arc& arc) {
  PerfectDiagram d = perfect_complete(tree_path(l, diameter()));
  size_t n = d.vertex_count();
  std::vector<size_t> target(n);
  std::vector<int> sign(n, 1);
  for (size_t i = 0; i < n; ++i) {
    target[i] = i;
    if (arc_within(d.interval(i), arc)) sign[i] = -1;
  }
  return GeneralElement(d, d, std::move(target), std::move(sign));
}

}  // namespace

GeneralElement gamma(const Leaf& l, BranchSide side) {
  if (l.is_diameter()) {
    Arc arc = side == BranchSide::middle ? l.middle_arc() : Arc{normalize(0, 0), 0};
    return reflection_flip(l, arc);
  }
  if (side == BranchSide::middle) return reflection_flip(l, l.middle_arc());
  // Outer branch: a single reflection of the complement is not a lamination
  // map once the leaf is deeper than level one, so conjugate the middle flip
  // of the diameter by an element carrying l onto the diameter.
  PartialAutomorphism seed = PartialAutomorphism::from_edges({{l, diameter()}});
  PartialAutomorphism covering = extend_to_cover_diam(seed);
  ThompsonElement h = approximate(covering);
  GeneralElement flip = gamma(diameter(), BranchSide::middle);
  return compose(embed(invert(h)), compose(flip, embed(h)));
}

bool in_branch(const VertexId& v, const Leaf& l, BranchSide side) {
  bool in_middle;
  if (l.is_diameter()) {
    Arc arc = side == BranchSide::middle ? l.middle_arc() : Arc{normalize(0, 0), 0};
    return arc_within(v.base_arc(), arc);
  }
  in_middle = arc_within(v.base_arc(), l.middle_arc());
  return side == BranchSide::middle ? in_middle : !in_middle;
}

}  // namespace basilica
