#pragma once

#include "basilica/diagram.hpp"

namespace basilica {

// An orientation-preserving piecewise-affine circle map with slopes 3^k,
// given by two perfect diagrams of equal size and a vertex shift: dom vertex
// i goes to ran vertex i+s (mod 2m), and the map is affine on each interval.
// Composition convention everywhere: compose(g, h) applies h first.
class ThompsonElement {
public:
  ThompsonElement(PerfectDiagram dom, PerfectDiagram ran, size_t shift);

  static ThompsonElement identity() {
    return ThompsonElement(PerfectDiagram::base(), PerfectDiagram::base(), 0);
  }

  const PerfectDiagram& dom() const { return dom_; }
  const PerfectDiagram& ran() const { return ran_; }
  size_t shift() const { return shift_; }

private:
  PerfectDiagram dom_;
  PerfectDiagram ran_;
  size_t shift_;
};

// All shifts making the two diagrams isomorphic (pairing-compatible);
// empty when sizes differ.
std::vector<size_t> isomorphism_shifts(const PerfectDiagram& dom, const PerfectDiagram& ran);

TriadicAngle apply(const ThompsonElement& g, const TriadicAngle& x);
Leaf apply_leaf(const ThompsonElement& g, const Leaf& l);

ThompsonElement compose(const ThompsonElement& g, const ThompsonElement& h);
ThompsonElement invert(const ThompsonElement& g);

bool is_identity(const ThompsonElement& g);
bool equals(const ThompsonElement& g, const ThompsonElement& h);

// Synchronized reverse subdivisions: repeatedly drops a dom leaf removable on
// both sides of the pair. The result equals g; it is a normal form heuristic,
// not a canonical form.
ThompsonElement reduce(const ThompsonElement& g);

// The induced ribbon-tree automorphism on edges and vertices.
Leaf pi_edge(const ThompsonElement& g, const Leaf& l);
VertexId pi_vertex(const ThompsonElement& g, const VertexId& v);

}  // namespace basilica
