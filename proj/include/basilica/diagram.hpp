#pragma once

#include <map>
#include <set>
#include <vector>

#include "basilica/lamination.hpp"

namespace basilica {

// Finite chord system containing the diameter and connected in the ribbon
// tree; equivalently, no absent chord separates it.
bool is_diagram(const std::vector<Leaf>& leaves);

struct IntervalForm {
  enum Tag { Left, Middle, Right } tag;
  Bigint index;  // the witnessing alpha / beta / gamma
  int exponent;  // a / b / c
};

// A diagram generated from the diameter by repeated 1:1:1 interval
// subdivisions. Vertices are the chord endpoints sorted in [0, 2); interval
// i runs from vertex i to vertex i+1 (mod 2m).
class PerfectDiagram {
public:
  // Validates perfectness (throws ValidationError if the leaf set is not
  // subdivision-generated) and builds the vertex/interval tables.
  explicit PerfectDiagram(std::vector<Leaf> leaves);

  static PerfectDiagram base() { return PerfectDiagram({diameter()}); }

  const std::vector<Leaf>& leaves() const { return leaves_; }
  size_t size() const { return leaves_.size(); }
  size_t vertex_count() const { return verts_.size(); }

  const TriadicAngle& vertex(size_t i) const { return verts_[i]; }
  size_t paired_vertex(size_t i) const { return pair_[i]; }
  Leaf leaf_at_vertex(size_t i) const;

  const Arc& interval(size_t i) const { return intervals_[i]; }
  const IntervalForm& interval_form(size_t i) const { return forms_[i]; }
  size_t interval_count() const { return intervals_.size(); }

  // Index of the vertex at x, if any.
  std::optional<size_t> vertex_index(const TriadicAngle& x) const;
  // Interval whose closed arc contains x; interior unless x is a vertex, in
  // which case the interval starting at x is returned.
  size_t interval_containing(const TriadicAngle& x) const;

  bool contains(const Leaf& l) const;

  friend bool operator==(const PerfectDiagram& a, const PerfectDiagram& b) {
    return a.leaves_ == b.leaves_;
  }
  friend bool operator!=(const PerfectDiagram& a, const PerfectDiagram& b) { return !(a == b); }

private:
  std::vector<Leaf> leaves_;  // sorted by (n, k)
  std::vector<TriadicAngle> verts_;
  std::vector<size_t> pair_;
  std::vector<Arc> intervals_;
  std::vector<IntervalForm> forms_;
};

// Whether the leaf set is generated by the subdivision procedure. Requires
// is_diagram to hold first (callers outside tests usually know it does).
bool is_perfect(const std::vector<Leaf>& leaves);

// Adds the middle-third chord of interval `index`.
PerfectDiagram subdivide(const PerfectDiagram& p, size_t index);

// Extension of a diagram to a perfect one: for each cell adjacent to at
// least two chords, adds every side of that cell's Cantorgon of level
// strictly below the cell's deepest adjacent chord.
PerfectDiagram perfect_complete(const std::vector<Leaf>& leaves);

PerfectDiagram diagram_union(const PerfectDiagram& p, const PerfectDiagram& q);

// Leaves whose three child intervals are all unsubdivided; removing any one
// of them leaves a perfect diagram. The diameter is never removable.
std::set<Leaf> removable_leaves(const PerfectDiagram& p);

// Cells of a diagram: vertex plus its incident chords, in cyclic order
// (sorted by occupied-arc start).
std::map<VertexId, std::vector<Leaf>> diagram_cells(const std::vector<Leaf>& leaves);

}  // namespace basilica
