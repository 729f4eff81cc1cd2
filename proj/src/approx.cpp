#include "basilica/approx.hpp"

#include <algorithm>
#include <random>

namespace basilica {

namespace {

std::vector<Leaf> incident_sorted(const VertexId& v, const std::vector<Leaf>& edges) {
  std::vector<Leaf> out;
  for (const Leaf& l : edges) {
    auto [a, b] = edge_endpoints(l);
    if (a == v || b == v) out.push_back(l);
  }
  std::sort(out.begin(), out.end(), [&](const Leaf& a, const Leaf& b) {
    return position_less(occupied_start(v, a), occupied_start(v, b));
  });
  return out;
}

VertexId other_endpoint(const Leaf& l, const VertexId& v) {
  auto [a, b] = edge_endpoints(l);
  return a == v ? b : a;
}

}  // namespace

std::vector<VertexId> subtree_vertices(const std::vector<Leaf>& edges) {
  std::vector<VertexId> out;
  for (const Leaf& l : edges) {
    auto [a, b] = edge_endpoints(l);
    out.push_back(a);
    out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PartialAutomorphism PartialAutomorphism::from_edges(std::vector<std::pair<Leaf, Leaf>> edges,
                                                    GermMode mode) {
  PartialAutomorphism pa;
  pa.edges = std::move(edges);
  pa.mode = mode;
  detail::require(!pa.edges.empty(), errc::malformed_input, "germ without edges");

  if (pa.edges.size() == 1) {
    auto [sa, sb] = edge_endpoints(pa.edges[0].first);
    auto [ta, tb] = edge_endpoints(pa.edges[0].second);
    pa.vertices = {{sa, ta}, {sb, tb}};
    return pa;
  }

  // Shared vertices first, then pendant ones forced by their edge's image.
  std::map<VertexId, std::vector<size_t>> at;
  for (size_t i = 0; i < pa.edges.size(); ++i) {
    auto [a, b] = edge_endpoints(pa.edges[i].first);
    at[a].push_back(i);
    at[b].push_back(i);
  }
  std::map<VertexId, VertexId> vmap;
  for (const auto& [v, inc] : at) {
    if (inc.size() < 2) continue;
    vmap.emplace(v, common_vertex(pa.edges[inc[0]].second, pa.edges[inc[1]].second));
  }
  for (const auto& [v, inc] : at) {
    if (inc.size() != 1) continue;
    const auto& [src, dst] = pa.edges[inc[0]];
    VertexId near = other_endpoint(src, v);
    auto it = vmap.find(near);
    detail::require(it != vmap.end(), errc::disconnected, "pendant edge is detached");
    pa.vertices.emplace_back(v, other_endpoint(dst, it->second));
  }
  for (const auto& [v, w] : vmap) pa.vertices.emplace_back(v, w);
  std::sort(pa.vertices.begin(), pa.vertices.end());
  return pa;
}

std::vector<Leaf> PartialAutomorphism::source_edges() const {
  std::vector<Leaf> out;
  out.reserve(edges.size());
  for (const auto& [s, t] : edges) out.push_back(s);
  return out;
}

std::vector<Leaf> PartialAutomorphism::target_edges() const {
  std::vector<Leaf> out;
  out.reserve(edges.size());
  for (const auto& [s, t] : edges) out.push_back(t);
  return out;
}

bool PartialAutomorphism::has_source_edge(const Leaf& l) const {
  for (const auto& [s, t] : edges)
    if (s == l) return true;
  return false;
}

Leaf PartialAutomorphism::edge_image(const Leaf& l) const {
  for (const auto& [s, t] : edges)
    if (s == l) return t;
  throw ValidationError(errc::bad_index, "edge " + to_string(l) + " not in the germ");
}

VertexId PartialAutomorphism::vertex_image(const VertexId& v) const {
  for (const auto& [s, t] : vertices)
    if (s == v) return t;
  throw ValidationError(errc::bad_index, "vertex " + to_string(v) + " not in the germ");
}

int PartialAutomorphism::sign_at(const VertexId& v) const {
  auto it = signs.find(v);
  return it == signs.end() ? 1 : it->second;
}

std::string validate_germ(const PartialAutomorphism& pa) {
  if (pa.edges.empty()) return "disconnected: germ without edges";
  std::vector<Leaf> src = pa.source_edges();
  std::vector<Leaf> dst = pa.target_edges();
  {
    std::set<Leaf> s(src.begin(), src.end()), d(dst.begin(), dst.end());
    if (s.size() != src.size() || d.size() != dst.size())
      return "incidence: repeated edge in the germ";
  }
  if (!is_connected_edge_set(src)) return "disconnected: source edges";
  if (!is_connected_edge_set(dst)) return "disconnected: target edges";

  std::map<VertexId, VertexId> vmap;
  std::set<VertexId> images;
  for (const auto& [v, w] : pa.vertices) {
    if (!vmap.emplace(v, w).second) return "incidence: vertex mapped twice";
    if (!images.insert(w).second) return "incidence: vertex map is not injective";
  }
  for (const VertexId& v : subtree_vertices(src))
    if (!vmap.count(v)) return "incidence: vertex " + to_string(v) + " has no image";
  for (const auto& [s, t] : pa.edges) {
    auto [a, b] = edge_endpoints(s);
    auto [c, d] = edge_endpoints(t);
    const VertexId& ia = vmap.at(a);
    const VertexId& ib = vmap.at(b);
    bool ok = (ia == c && ib == d) || (ia == d && ib == c);
    if (!ok) return "incidence: endpoints of " + to_string(s) + " do not map onto " +
                    to_string(t);
  }
  if (pa.mode == GermMode::preserve && !pa.signs.empty())
    return "cyclic order: signs given for an orientation-preserving germ";

  for (const VertexId& v : subtree_vertices(src)) {
    std::vector<Leaf> inc = incident_sorted(v, src);
    if (inc.size() < 3) continue;
    const VertexId& w = vmap.at(v);
    std::vector<Leaf> img;
    img.reserve(inc.size());
    for (const Leaf& l : inc) img.push_back(pa.edge_image(l));
    std::vector<Leaf> img_sorted = img;
    std::sort(img_sorted.begin(), img_sorted.end(), [&](const Leaf& a, const Leaf& b) {
      return position_less(occupied_start(w, a), occupied_start(w, b));
    });
    size_t k = inc.size();
    size_t anchor = std::find(img_sorted.begin(), img_sorted.end(), img[0]) - img_sorted.begin();
    bool fwd = true, rev = true;
    for (size_t j = 0; j < k; ++j) {
      if (!(img_sorted[(anchor + j) % k] == img[j])) fwd = false;
      if (!(img_sorted[(anchor + k - j % k) % k] == img[j])) rev = false;
    }
    int needed = pa.mode == GermMode::preserve ? 1 : pa.sign_at(v);
    if (needed == 1 && !fwd)
      return "cyclic order: not preserved at " + to_string(v);
    if (needed == -1 && !rev)
      return "cyclic order: not reversed at " + to_string(v);
  }
  return std::string();
}

void require_valid(const PartialAutomorphism& pa) {
  std::string why = validate_germ(pa);
  if (why.empty()) return;
  errc code = errc::incidence_broken;
  if (why.rfind("disconnected", 0) == 0) code = errc::disconnected;
  if (why.rfind("cyclic order", 0) == 0) code = errc::cyclic_order_broken;
  throw ValidationError(code, why);
}

PartialAutomorphism invert_germ(const PartialAutomorphism& pa) {
  PartialAutomorphism out;
  out.mode = pa.mode;
  out.edges.reserve(pa.edges.size());
  for (const auto& [s, t] : pa.edges) out.edges.emplace_back(t, s);
  out.vertices.reserve(pa.vertices.size());
  for (const auto& [v, w] : pa.vertices) {
    out.vertices.emplace_back(w, v);
    if (pa.mode == GermMode::respect) out.signs[w] = pa.sign_at(v);
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  return out;
}

bool same_germ(const PartialAutomorphism& a, const PartialAutomorphism& b) {
  if (a.mode != b.mode) return false;
  auto norm_edges = [](const PartialAutomorphism& p) {
    auto e = p.edges;
    std::sort(e.begin(), e.end());
    return e;
  };
  auto norm_verts = [](const PartialAutomorphism& p) {
    auto v = p.vertices;
    std::sort(v.begin(), v.end());
    return v;
  };
  if (!(norm_edges(a) == norm_edges(b)) || !(norm_verts(a) == norm_verts(b))) return false;
  if (a.mode == GermMode::respect) {
    for (const auto& [v, w] : a.vertices)
      if (a.sign_at(v) != b.sign_at(v)) return false;
  }
  return true;
}

namespace {

// Gap of the cell at v following `after` in the cyclic incident order, and
// its match at the image vertex (reversed when the vertex sign is -1).
struct GapPair {
  Gap src;
  Gap dst;
};

GapPair matched_gap(const PartialAutomorphism& pa, const VertexId& v,
                    const std::vector<Leaf>& inc, size_t j) {
  const VertexId w = pa.vertex_image(v);
  size_t k = inc.size();
  const Leaf& a = inc[j];
  const Leaf& b = inc[(j + 1) % k];
  Leaf ia = pa.edge_image(a);
  Leaf ib = pa.edge_image(b);
  Gap src{occupied_end(v, a), occupied_start(v, b)};
  if (pa.sign_at(v) > 0 || pa.mode == GermMode::preserve)
    return {src, Gap{occupied_end(w, ia), occupied_start(w, ib)}};
  // Reversed cyclic order: the gap after a maps to the gap before its image.
  return {src, Gap{occupied_end(w, ib), occupied_start(w, ia)}};
}

bool side_strictly_in_gap(const VertexId& v, const Leaf& side, const Gap& gap) {
  TriadicAngle width = sub(gap.to, gap.from);
  TriadicAngle oa = sub(occupied_start(v, side), gap.from);
  TriadicAngle ob = sub(occupied_end(v, side), gap.from);
  if (oa.num == 0 || ob.num == 0) return false;
  return compare_position(oa, width) < 0 && compare_position(ob, width) < 0 &&
         compare_position(oa, ob) < 0;
}

}  // namespace

PartialAutomorphism extend_to_cover_diam(PartialAutomorphism pa) {
  require_valid(pa);
  auto grow_source = [](PartialAutomorphism p) {
    std::vector<Leaf> src = p.source_edges();
    while (std::find(src.begin(), src.end(), diameter()) == src.end()) {
      std::vector<Leaf> path = tree_path(src[0], diameter());
      size_t first_out = 0;
      while (std::find(src.begin(), src.end(), path[first_out]) != src.end()) ++first_out;
      Leaf grown = path[first_out];
      VertexId attach = common_vertex(path[first_out - 1], grown);
      std::vector<Leaf> inc = incident_sorted(attach, src);
      size_t j = 0;
      for (; j < inc.size(); ++j) {
        GapPair gp = matched_gap(p, attach, inc, j);
        if (side_strictly_in_gap(attach, grown, gp.src)) {
          Leaf image = max_side_in_gap(p.vertex_image(attach), gp.dst);
          p.edges.emplace_back(grown, image);
          VertexId far_src = other_endpoint(grown, attach);
          VertexId far_dst = other_endpoint(image, p.vertex_image(attach));
          p.vertices.emplace_back(far_src, far_dst);
          if (p.mode == GermMode::respect) p.signs.emplace(far_src, 1);
          break;
        }
      }
      detail::ensure(j < inc.size(), errc::empty_gap, "grown edge is in no gap");
      src.push_back(grown);
    }
    return p;
  };
  pa = grow_source(std::move(pa));
  pa = invert_germ(grow_source(invert_germ(std::move(pa))));
  require_valid(pa);
  return pa;
}

namespace {

struct Matching {
  std::set<Leaf> dom;
  std::set<Leaf> ran;
  std::map<Leaf, Leaf> pairs;
};

bool any_side_in_gap(const VertexId& v, const std::set<Leaf>& pool, const Gap& gap) {
  for (const Leaf& l : pool) {
    auto [a, b] = edge_endpoints(l);
    if (!(a == v || b == v)) continue;
    if (side_strictly_in_gap(v, l, gap)) return true;
  }
  return false;
}

void check_perfect(const std::set<Leaf>& s) {
  detail::ensure(is_perfect(std::vector<Leaf>(s.begin(), s.end())), errc::no_isomorphism,
                 "padding broke perfectness");
}

// Brings the sides of v inside gap (in dom) and of w inside matched gap (in
// ran) to the same binary shape, inserting lowest-level sides where one tree
// is missing a node; every insertion is a single 1:1:1 interval subdivision.
void merge_gap_trees(const VertexId& v, const Gap& gv, const VertexId& w, const Gap& gw,
                     Matching& m) {
  bool in_dom = any_side_in_gap(v, m.dom, gv);
  bool in_ran = any_side_in_gap(w, m.ran, gw);
  if (!in_dom && !in_ran) return;
  Leaf rv = max_side_in_gap(v, gv);
  Leaf rw = max_side_in_gap(w, gw);
  if (m.dom.insert(rv).second) check_perfect(m.dom);
  if (m.ran.insert(rw).second) check_perfect(m.ran);
  m.pairs.emplace(rv, rw);
  merge_gap_trees(v, gap_left_of(gv, rv), w, gap_left_of(gw, rw), m);
  merge_gap_trees(v, gap_right_of(gv, rv), w, gap_right_of(gw, rw), m);
}

}  // namespace

ThompsonElement approximate(const PartialAutomorphism& pa) {
  require_valid(pa);
  detail::require(pa.mode == GermMode::preserve, errc::cyclic_order_broken,
                  "approximate needs an orientation-preserving germ");
  std::vector<Leaf> src = pa.source_edges();
  std::vector<Leaf> dst = pa.target_edges();
  detail::require(std::find(src.begin(), src.end(), diameter()) != src.end() &&
                      std::find(dst.begin(), dst.end(), diameter()) != dst.end(),
                  errc::precondition_diam,
                  "both subtrees must contain the diameter (extend_to_cover_diam)");

  Matching m;
  {
    PerfectDiagram d = perfect_complete(src);
    PerfectDiagram r = perfect_complete(dst);
    m.dom.insert(d.leaves().begin(), d.leaves().end());
    m.ran.insert(r.leaves().begin(), r.leaves().end());
  }
  for (const auto& [s, t] : pa.edges) m.pairs.emplace(s, t);

  for (const auto& [v, inc] : diagram_cells(src)) {
    for (size_t j = 0; j < inc.size(); ++j) {
      GapPair gp = matched_gap(pa, v, inc, j);
      merge_gap_trees(v, gp.src, pa.vertex_image(v), gp.dst, m);
    }
  }

  PerfectDiagram dom(std::vector<Leaf>(m.dom.begin(), m.dom.end()));
  PerfectDiagram ran(std::vector<Leaf>(m.ran.begin(), m.ran.end()));
  detail::ensure(m.pairs.size() == dom.size() && dom.size() == ran.size(),
                 errc::no_isomorphism, "padding left unmatched chords");

  // Orientation of the diameter's image fixes the shift: the branch over
  // [1,2] goes to the branch over the image's middle arc or its complement.
  Leaf image_of_diam = pa.edge_image(diameter());
  VertexId middle_head = pa.vertex_image(VertexId::central(1));
  VertexId image_middle_head = image_of_diam.is_diameter()
                                   ? VertexId::central(1)
                                   : VertexId::inner_of(image_of_diam);
  TriadicAngle anchor_dst = middle_head == image_middle_head ? image_of_diam.endpoint_a()
                                                             : image_of_diam.endpoint_b();
  size_t n = dom.vertex_count();
  size_t ia = *dom.vertex_index(normalize(1, 0));
  size_t ib = *ran.vertex_index(anchor_dst);
  ThompsonElement g = [&]() {
    try {
      return ThompsonElement(std::move(dom), std::move(ran), (ib + n - ia) % n);
    } catch (const ValidationError& e) {
      throw InternalError(errc::no_isomorphism,
                          std::string("padded diagrams are not isomorphic: ") + e.what());
    }
  }();
  for (const auto& [s, t] : m.pairs)
    detail::ensure(apply_leaf(g, s) == t, errc::no_isomorphism,
                   "padded element does not realize the matching");
  return g;
}

std::vector<std::pair<Leaf, BranchSide>> flips_for_signs(const PartialAutomorphism& pa) {
  require_valid(pa);
  detail::require(pa.mode == GermMode::respect, errc::cyclic_order_broken,
                  "flip computation needs an orientation-respecting germ");
  std::vector<Leaf> src = pa.source_edges();
  detail::require(std::find(src.begin(), src.end(), diameter()) != src.end(),
                  errc::precondition_diam, "source must contain the diameter");

  std::vector<std::pair<Leaf, BranchSide>> flips;
  if (pa.sign_at(VertexId::central(1)) < 0) flips.emplace_back(diameter(), BranchSide::middle);
  if (pa.sign_at(VertexId::central(0)) < 0) flips.emplace_back(diameter(), BranchSide::outer);

  // Walk outward from the diameter; flipping below an edge toggles every
  // deeper vertex.
  struct Item {
    VertexId v;
    Leaf via;
    int toggle;
  };
  std::vector<Item> stack{{VertexId::central(0), diameter(), pa.sign_at(VertexId::central(0))},
                          {VertexId::central(1), diameter(), pa.sign_at(VertexId::central(1))}};
  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    std::vector<Leaf> inc = incident_sorted(it.v, src);
    std::sort(inc.begin(), inc.end());
    for (const Leaf& e : inc) {
      if (e == it.via) continue;
      VertexId w = other_endpoint(e, it.v);
      int t = it.toggle;
      if (pa.sign_at(w) * t < 0) {
        flips.emplace_back(e, BranchSide::middle);
        t = -t;
      }
      stack.push_back({w, e, t});
    }
  }
  return flips;
}

VertexId pi_vertex(const GeneralElement& g, const VertexId& v) {
  std::vector<Leaf> two = sides(v, v.longest_side().n + 1);
  detail::ensure(two.size() >= 2, errc::refinement_failure, "vertex with fewer than two sides");
  return common_vertex(apply_leaf(g, two[0]), apply_leaf(g, two[1]));
}

PartialAutomorphism pi_restrict(const ThompsonElement& g, const std::vector<Leaf>& subtree) {
  PartialAutomorphism pa;
  pa.mode = GermMode::preserve;
  for (const Leaf& l : subtree) pa.edges.emplace_back(l, apply_leaf(g, l));
  for (const VertexId& v : subtree_vertices(subtree))
    pa.vertices.emplace_back(v, pi_vertex(g, v));
  return pa;
}

PartialAutomorphism pi_full(const GeneralElement& g, const std::vector<Leaf>& subtree) {
  PartialAutomorphism pa;
  pa.mode = GermMode::respect;
  for (const Leaf& l : subtree) pa.edges.emplace_back(l, apply_leaf(g, l));
  for (const VertexId& v : subtree_vertices(subtree)) {
    VertexId w = pi_vertex(g, v);
    pa.vertices.emplace_back(v, w);
    std::vector<Leaf> three = sides(v, v.longest_side().n + 2);
    detail::ensure(three.size() >= 3, errc::refinement_failure, "vertex with too few sides");
    TriadicAngle p0 = occupied_start(w, apply_leaf(g, three[0]));
    TriadicAngle p1 = occupied_start(w, apply_leaf(g, three[1]));
    TriadicAngle p2 = occupied_start(w, apply_leaf(g, three[2]));
    pa.signs[v] = cyclic_order(p0, p1, p2) == CyclicOrder::positive ? 1 : -1;
  }
  return pa;
}

GeneralElement approximate_full(const PartialAutomorphism& pa) {
  require_valid(pa);
  detail::require(pa.mode == GermMode::respect, errc::cyclic_order_broken,
                  "approximate_full needs an orientation-respecting germ");
  std::vector<std::pair<Leaf, BranchSide>> flips = flips_for_signs(pa);
  GeneralElement phi = GeneralElement::identity();
  for (const auto& [leaf, side] : flips) phi = compose(gamma(leaf, side), phi);
  GeneralElement phi_inv = invert(phi);

  // q = pa after the flips is orientation preserving on the pulled-back tree.
  PartialAutomorphism q;
  q.mode = GermMode::preserve;
  for (const auto& [s, t] : pa.edges) q.edges.emplace_back(apply_leaf(phi_inv, s), t);
  for (const auto& [v, w] : pa.vertices) q.vertices.emplace_back(pi_vertex(phi_inv, v), w);
  std::sort(q.vertices.begin(), q.vertices.end());
  detail::ensure(validate_germ(q).empty(), errc::no_isomorphism,
                 "flip normalization did not produce a preserving germ");

  ThompsonElement gq = approximate(q);
  GeneralElement result = compose(embed(gq), phi_inv);
  for (const auto& [s, t] : pa.edges)
    detail::ensure(apply_leaf(result, s) == t, errc::no_isomorphism,
                   "composed element does not realize the germ");
  return result;
}

namespace {

struct SeededRng {
  std::mt19937_64 eng;
  explicit SeededRng(std::uint64_t seed) : eng(seed) {}
  std::uint64_t next(std::uint64_t n) { return eng() % n; }
};

Leaf descend_in_gap(const VertexId& v, Gap gap, int turns, SeededRng& rng) {
  Leaf side = max_side_in_gap(v, gap);
  for (int i = 0; i < turns; ++i) {
    gap = rng.next(2) == 0 ? gap_left_of(gap, side) : gap_right_of(gap, side);
    side = max_side_in_gap(v, gap);
  }
  return side;
}

}  // namespace

PartialAutomorphism random_partial_automorphism(int radius, std::uint64_t seed) {
  detail::require(radius >= 0, errc::malformed_input, "negative radius");
  SeededRng rng(seed * 0x9E3779B97F4A7C15ull + 0xD1B54A32D192ED03ull * (radius + 1));
  PartialAutomorphism pa;
  pa.mode = GermMode::preserve;
  pa.edges.emplace_back(diameter(), diameter());
  if (rng.next(2) == 0) {
    pa.vertices = {{VertexId::central(0), VertexId::central(0)},
                   {VertexId::central(1), VertexId::central(1)}};
  } else {
    pa.vertices = {{VertexId::central(0), VertexId::central(1)},
                   {VertexId::central(1), VertexId::central(0)}};
  }
  for (int round = 0; round < radius; ++round) {
    std::vector<VertexId> verts;
    for (const auto& [v, w] : pa.vertices) verts.push_back(v);
    std::sort(verts.begin(), verts.end());
    std::vector<Leaf> src = pa.source_edges();
    for (const VertexId& v : verts) {
      if (rng.next(2)) continue;
      std::vector<Leaf> inc = incident_sorted(v, src);
      size_t j = rng.next(inc.size());
      GapPair gp = matched_gap(pa, v, inc, j);
      Leaf grown = descend_in_gap(v, gp.src, static_cast<int>(rng.next(3)), rng);
      Leaf image = descend_in_gap(pa.vertex_image(v), gp.dst,
                                  static_cast<int>(rng.next(3)), rng);
      pa.edges.emplace_back(grown, image);
      pa.vertices.emplace_back(other_endpoint(grown, v),
                               other_endpoint(image, pa.vertex_image(v)));
      src.push_back(grown);
    }
    std::sort(pa.vertices.begin(), pa.vertices.end());
  }
  require_valid(pa);
  return pa;
}

}  // namespace basilica
