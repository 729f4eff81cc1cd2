#pragma once

#include <cstdint>

#include "basilica/fullgroup.hpp"

namespace basilica {

enum class GermMode { preserve, respect };

// A finite germ of a ribbon-tree automorphism: a bijection between two
// finite subtrees given edgewise, together with the induced vertex map. In
// respect mode each source vertex carries a sign telling whether the cyclic
// order of its sides is preserved (+1) or reversed (-1).
struct PartialAutomorphism {
  std::vector<std::pair<Leaf, Leaf>> edges;
  std::vector<std::pair<VertexId, VertexId>> vertices;
  GermMode mode = GermMode::preserve;
  std::map<VertexId, int> signs;  // respect mode; missing entries read as +1

  // Derives the vertex map from shared endpoints; a single-edge germ gets the
  // aligned orientation (endpoint lists matched in edge_endpoints order).
  static PartialAutomorphism from_edges(std::vector<std::pair<Leaf, Leaf>> edges,
                                        GermMode mode = GermMode::preserve);

  std::vector<Leaf> source_edges() const;
  std::vector<Leaf> target_edges() const;
  bool has_source_edge(const Leaf& l) const;
  Leaf edge_image(const Leaf& l) const;
  VertexId vertex_image(const VertexId& v) const;
  int sign_at(const VertexId& v) const;
};

// Empty string when the germ is a valid partial automorphism, otherwise the
// violated condition (disconnected, incidence, cyclic order).
std::string validate_germ(const PartialAutomorphism& pa);
// Same checks, throwing Disconnected / IncidenceBroken / CyclicOrderBroken.
void require_valid(const PartialAutomorphism& pa);

PartialAutomorphism invert_germ(const PartialAutomorphism& pa);
bool same_germ(const PartialAutomorphism& a, const PartialAutomorphism& b);

// Deterministic minimal-choice extension until both subtrees contain the
// diameter edge: grows along the tree path toward the diameter, mapping each
// new pendant edge to the lowest-level unused side of the matched gap.
PartialAutomorphism extend_to_cover_diam(PartialAutomorphism pa);

// The approximation construction: an orientation-preserving element whose
// induced tree action agrees with pa on its whole source subtree. Requires
// mode preserve and diameter coverage on both sides.
ThompsonElement approximate(const PartialAutomorphism& pa);

// Orientation-respecting version: peels the sign pattern off with branch
// flips, approximates the remaining orientation-preserving germ, and returns
// the composed element.
GeneralElement approximate_full(const PartialAutomorphism& pa);

// The flip sequence used by approximate_full; applying the corresponding
// sign toggles to pa makes every vertex sign positive.
std::vector<std::pair<Leaf, BranchSide>> flips_for_signs(const PartialAutomorphism& pa);

// Germ extraction from elements.
PartialAutomorphism pi_restrict(const ThompsonElement& g, const std::vector<Leaf>& subtree);
PartialAutomorphism pi_full(const GeneralElement& g, const std::vector<Leaf>& subtree);
VertexId pi_vertex(const GeneralElement& g, const VertexId& v);

// Seeded valid orientation-preserving germ grown around the diameter by
// pseudo-random gap choices; identical seeds give identical germs.
PartialAutomorphism random_partial_automorphism(int radius, std::uint64_t seed);

std::vector<VertexId> subtree_vertices(const std::vector<Leaf>& edges);

}  // namespace basilica
