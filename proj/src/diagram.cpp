#include "basilica/diagram.hpp"

#include <algorithm>

namespace basilica {

namespace {

bool contains_diameter(const std::vector<Leaf>& leaves) {
  return std::find(leaves.begin(), leaves.end(), diameter()) != leaves.end();
}

// Interval (c, m) stands for [c/3^m, (c+1)/3^m]. A leaf (k, n) is the middle
// chord of interval (k, n-1); consuming it replaces that interval by its
// three thirds. Perfectness is exactly closure of this consumption starting
// from the base intervals (0,0) and (1,0).
struct CInterval {
  Bigint c;
  int m;
};

Arc interval_arc(const CInterval& iv) { return Arc{normalize(iv.c, iv.m), iv.m}; }

// Emits the fringe intervals; returns false if a leaf lacks its parent
// interval (i.e. the set is not subdivision-generated).
bool reconstruct(const std::vector<Leaf>& leaves, std::vector<CInterval>* out) {
  if (!contains_diameter(leaves)) return false;
  std::set<std::pair<int, Bigint>> pending;  // (n, k) of unconsumed leaves
  for (const Leaf& l : leaves)
    if (!l.is_diameter()) pending.emplace(l.n, l.k);
  std::vector<CInterval> stack{{Bigint(0), 0}, {Bigint(1), 0}};
  while (!stack.empty()) {
    CInterval iv = stack.back();
    stack.pop_back();
    auto it = pending.find({iv.m + 1, iv.c});
    if (it != pending.end()) {
      pending.erase(it);
      for (int d = 2; d >= 0; --d) stack.push_back({iv.c * 3 + d, iv.m + 1});
    } else if (out) {
      out->push_back(iv);
    }
  }
  return pending.empty();
}

}  // namespace

bool is_diagram(const std::vector<Leaf>& leaves) {
  if (!contains_diameter(leaves)) return false;
  return is_connected_edge_set(leaves);
}

bool is_perfect(const std::vector<Leaf>& leaves) { return reconstruct(leaves, nullptr); }

PerfectDiagram::PerfectDiagram(std::vector<Leaf> leaves) : leaves_(std::move(leaves)) {
  std::sort(leaves_.begin(), leaves_.end());
  detail::require(std::adjacent_find(leaves_.begin(), leaves_.end()) == leaves_.end(),
                  errc::malformed_input, "duplicate leaf");
  std::vector<CInterval> fringe;
  detail::require(reconstruct(leaves_, &fringe), errc::malformed_input,
                  "leaf set is not subdivision-generated");

  verts_.reserve(leaves_.size() * 2);
  for (const Leaf& l : leaves_) {
    verts_.push_back(l.endpoint_a());
    verts_.push_back(l.endpoint_b());
  }
  std::sort(verts_.begin(), verts_.end(), position_less);

  pair_.assign(verts_.size(), 0);
  for (const Leaf& l : leaves_) {
    size_t i = *vertex_index(l.endpoint_a());
    size_t j = *vertex_index(l.endpoint_b());
    pair_[i] = j;
    pair_[j] = i;
  }

  intervals_.reserve(verts_.size());
  forms_.reserve(verts_.size());
  std::sort(fringe.begin(), fringe.end(), [](const CInterval& a, const CInterval& b) {
    return position_less(normalize(a.c, a.m), normalize(b.c, b.m));
  });
  detail::ensure(fringe.size() == verts_.size(), errc::refinement_failure,
                 "interval count mismatch");
  for (size_t i = 0; i < fringe.size(); ++i) {
    Arc arc = interval_arc(fringe[i]);
    detail::ensure(arc.start == verts_[i], errc::refinement_failure,
                   "interval does not start at a vertex");
    intervals_.push_back(arc);
    Bigint c = fringe[i].c;
    int residue = static_cast<int>(c % 3);
    IntervalForm f;
    f.exponent = fringe[i].m;
    f.tag = residue == 0 ? IntervalForm::Left
                         : (residue == 1 ? IntervalForm::Middle : IntervalForm::Right);
    f.index = c / 3;
    forms_.push_back(f);
  }
}

Leaf PerfectDiagram::leaf_at_vertex(size_t i) const { return leaf_of_endpoint(verts_[i]); }

std::optional<size_t> PerfectDiagram::vertex_index(const TriadicAngle& x) const {
  auto it = std::lower_bound(verts_.begin(), verts_.end(), x, position_less);
  if (it != verts_.end() && *it == x) return it - verts_.begin();
  return std::nullopt;
}

size_t PerfectDiagram::interval_containing(const TriadicAngle& x) const {
  auto it = std::upper_bound(verts_.begin(), verts_.end(), x, position_less);
  if (it == verts_.begin()) return verts_.size() - 1;  // below the first vertex: wrap
  return (it - verts_.begin()) - 1;
}

bool PerfectDiagram::contains(const Leaf& l) const {
  return std::binary_search(leaves_.begin(), leaves_.end(), l);
}

PerfectDiagram subdivide(const PerfectDiagram& p, size_t index) {
  detail::require(index < p.interval_count(), errc::bad_index, "interval index out of range");
  const Arc& arc = p.interval(index);
  Bigint c = arc.start.num * pow3(arc.len_level - arc.start.level);
  std::vector<Leaf> leaves = p.leaves();
  leaves.push_back(Leaf(c, arc.len_level + 1));
  return PerfectDiagram(std::move(leaves));
}

std::map<VertexId, std::vector<Leaf>> diagram_cells(const std::vector<Leaf>& leaves) {
  std::map<VertexId, std::vector<Leaf>> cells;
  for (const Leaf& l : leaves) {
    auto [u, w] = edge_endpoints(l);
    cells[u].push_back(l);
    cells[w].push_back(l);
  }
  for (auto& [v, incident] : cells) {
    const VertexId& vertex = v;
    std::sort(incident.begin(), incident.end(), [&vertex](const Leaf& a, const Leaf& b) {
      return position_less(occupied_start(vertex, a), occupied_start(vertex, b));
    });
  }
  return cells;
}

PerfectDiagram perfect_complete(const std::vector<Leaf>& input) {
  detail::require(is_diagram(input), errc::disconnected, "input is not a diagram");
  std::set<Leaf> result(input.begin(), input.end());
  for (const auto& [v, incident] : diagram_cells(input)) {
    if (incident.size() < 2) continue;
    int deepest = 0;
    for (const Leaf& l : incident) deepest = std::max(deepest, l.n);
    for (const Leaf& s : sides(v, deepest - 1)) result.insert(s);
  }
  std::vector<Leaf> leaves(result.begin(), result.end());
  detail::ensure(is_perfect(leaves), errc::completion_failed,
                 "completion did not yield a perfect diagram");
  return PerfectDiagram(std::move(leaves));
}

PerfectDiagram diagram_union(const PerfectDiagram& p, const PerfectDiagram& q) {
  std::set<Leaf> all(p.leaves().begin(), p.leaves().end());
  all.insert(q.leaves().begin(), q.leaves().end());
  std::vector<Leaf> leaves(all.begin(), all.end());
  detail::ensure(is_perfect(leaves), errc::refinement_failure,
                 "union of perfect diagrams is not perfect");
  return PerfectDiagram(std::move(leaves));
}

std::set<Leaf> removable_leaves(const PerfectDiagram& p) {
  std::set<Leaf> out;
  for (const Leaf& l : p.leaves()) {
    if (l.is_diameter()) continue;
    bool child_split = false;
    for (int d = 0; d < 3 && !child_split; ++d)
      child_split = p.contains(Leaf(l.k * 3 + d, l.n + 1));
    if (!child_split) out.insert(l);
  }
  return out;
}

}  // namespace basilica
