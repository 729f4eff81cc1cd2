#pragma once

#include "basilica/element.hpp"

namespace basilica {

// Which complementary branch of a leaf's edge a flip acts on: `middle` is
// the branch over the leaf's middle arc (the inner Cantorgon side), `outer`
// the rest of the tree. For the diameter, `middle` is the branch over [1,2].
enum class BranchSide { middle, outer };

// Orientation-respecting piecewise-affine circle map with slopes +-3^k: each
// dom interval maps affinely onto one ran interval, with a per-interval
// direction sign. At a vertex where the sign changes, the one-sided images
// jump across an identified pair, so the induced map on the quotient stays
// continuous; at equal signs the one-sided images must agree.
class GeneralElement {
public:
  GeneralElement(PerfectDiagram dom, PerfectDiagram ran, std::vector<size_t> target,
                 std::vector<int> sign);

  static GeneralElement identity() { return embed_identity(); }

  const PerfectDiagram& dom() const { return dom_; }
  const PerfectDiagram& ran() const { return ran_; }
  size_t interval_target(size_t i) const { return target_[i]; }
  int interval_sign(size_t i) const { return sign_[i]; }
  const std::vector<int>& signs() const { return sign_; }

  // Image vertex index of dom vertex i seen from the interval on the given
  // side (+1: interval i, -1: interval i-1).
  size_t image_vertex(size_t i, int side) const;

private:
  static GeneralElement embed_identity();

  PerfectDiagram dom_;
  PerfectDiagram ran_;
  std::vector<size_t> target_;
  std::vector<int> sign_;
};

// Structural validation: target a bijection, signs +-1, one-sided vertex
// images jump exactly across identified pairs at sign changes and agree
// otherwise, and chord endpoints land in a single equivalence class.
// Returns an explanation for rejection, empty string for acceptance.
std::string validate_continuity(const PerfectDiagram& dom, const PerfectDiagram& ran,
                                const std::vector<size_t>& target,
                                const std::vector<int>& sign);

TriadicAngle apply(const GeneralElement& g, const TriadicAngle& x);
Leaf apply_leaf(const GeneralElement& g, const Leaf& l);

GeneralElement compose(const GeneralElement& g, const GeneralElement& h);
GeneralElement invert(const GeneralElement& g);
bool is_identity(const GeneralElement& g);
bool equals(const GeneralElement& g, const GeneralElement& h);

GeneralElement embed(const ThompsonElement& g);

// The branch flip: reflection of the chosen branch across the separating
// point of l, identity on the other branch.
GeneralElement gamma(const Leaf& l, BranchSide side);

// Whether v lies in the flipped branch of gamma(l, side).
bool in_branch(const VertexId& v, const Leaf& l, BranchSide side);

}  // namespace basilica
