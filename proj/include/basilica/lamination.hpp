#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "basilica/triadic.hpp"

namespace basilica {

// A chord of the lamination: the identified pair (3k+1)/3^n ~ (3k+2)/3^n.
// The level n is the exponent of the middle-arc length 3^-n; "longer" chords
// are the ones of smaller level. Leaf(0,0) is the diameter, endpoints 1 and
// 2 = 0.
struct Leaf {
  Bigint k = 0;
  int n = 0;

  Leaf() = default;
  Leaf(Bigint k_, int n_);

  bool is_diameter() const { return n == 0; }
  TriadicAngle endpoint_a() const;  // (3k+1)/3^n
  TriadicAngle endpoint_b() const;  // (3k+2)/3^n, normalized (diameter: 0)
  Arc middle_arc() const;           // [(3k+1)/3^n, (3k+2)/3^n]

  friend bool operator==(const Leaf& a, const Leaf& b) { return a.n == b.n && a.k == b.k; }
  friend bool operator!=(const Leaf& a, const Leaf& b) { return !(a == b); }
  friend bool operator<(const Leaf& a, const Leaf& b) {
    if (a.n != b.n) return a.n < b.n;
    return a.k < b.k;
  }
};

inline Leaf diameter() { return Leaf(0, 0); }

// A Cantorgon, addressed by its unique longest side: Central(i) is the one
// whose circle trace is the Cantor set of [i, i+1]; Inner(l) sits inside the
// middle arc of l.
struct VertexId {
  // central arc 0/1 when inner is empty, otherwise Inner(inner).
  std::optional<Leaf> inner;
  int central_arc = 0;

  static VertexId central(int arc);
  static VertexId inner_of(const Leaf& l);

  bool is_central() const { return !inner.has_value(); }
  Arc base_arc() const;       // the arc carrying the Cantor-set trace
  Leaf longest_side() const;  // the diameter for Central, l for Inner(l)

  friend bool operator==(const VertexId& a, const VertexId& b) {
    if (a.is_central() != b.is_central()) return false;
    if (a.is_central()) return a.central_arc == b.central_arc;
    return *a.inner == *b.inner;
  }
  friend bool operator!=(const VertexId& a, const VertexId& b) { return !(a == b); }
  friend bool operator<(const VertexId& a, const VertexId& b) {
    if (a.is_central() != b.is_central()) return a.is_central();
    if (a.is_central()) return a.central_arc < b.central_arc;
    return *a.inner < *b.inner;
  }
};

// true iff {x, y} are the two endpoints of some leaf.
bool equivalent(const TriadicAngle& x, const TriadicAngle& y);

// Canonical leaf through two equivalent endpoints; order-insensitive.
Leaf leaf_from_endpoints(const TriadicAngle& x, const TriadicAngle& y);

// The unique leaf having x as an endpoint.
Leaf leaf_of_endpoint(const TriadicAngle& x);

// Longest side of the Cantorgon adjacent to l on its outer side; strictly
// smaller level. Throws for the diameter.
Leaf parent(const Leaf& l);

// (Inner(l), outer vertex); the diameter yields (Central(0), Central(1)).
std::pair<VertexId, VertexId> edge_endpoints(const Leaf& l);

VertexId outer_vertex(const Leaf& l);
VertexId common_vertex(const Leaf& a, const Leaf& b);  // throws if not adjacent

// All sides of v with level <= max_level, starting with the longest side and
// then in circle order along the base arc.
std::vector<Leaf> sides(const VertexId& v, int max_level);

// The arc a side occupies as seen from the vertex: its middle arc for a gap
// chord, the complement of the base arc for the longest side. Only the two
// boundary angles are needed.
TriadicAngle occupied_start(const VertexId& v, const Leaf& side);
TriadicAngle occupied_end(const VertexId& v, const Leaf& side);

// Counterclockwise arc (from, to) between two trace points of a vertex.
struct Gap {
  TriadicAngle from;
  TriadicAngle to;
};

// The unique side of v of minimal level strictly inside the gap.
Leaf max_side_in_gap(const VertexId& v, const Gap& gap);

// The two sub-gaps a side cuts a gap into.
Gap gap_left_of(const Gap& gap, const Leaf& side);
Gap gap_right_of(const Gap& gap, const Leaf& side);

// Unique simple edge path in the ribbon tree from e to f, inclusive.
std::vector<Leaf> tree_path(const Leaf& e, const Leaf& f);

// Edge-connectivity in the ribbon tree (every pairwise path stays inside).
bool is_connected_edge_set(const std::vector<Leaf>& leaves);

std::string to_string(const Leaf& l);      // "k:n"
std::string to_string(const VertexId& v);  // "C0", "C1", "I(k:n)"

}  // namespace basilica
