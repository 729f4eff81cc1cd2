#pragma once

#include <iosfwd>
#include <optional>

#include "basilica/approx.hpp"
#include "basilica/theta.hpp"

namespace basilica {

// Angle literal: "num/3^level" or a ternary digit string like "0.12".
TriadicAngle parse_angle(const std::string& text);
std::string emit_angle(const TriadicAngle& x);  // canonical "num/3^level"

Leaf parse_leaf(const std::string& text);  // "k:n"
std::string emit_leaf(const Leaf& l);

VertexId parse_vertex(const std::string& text);  // "C0", "C1", "I(k:n)"
std::string emit_vertex(const VertexId& v);

// Dyadic literal: "p", "p/q" with q a power of two, or "p/2^k".
DyadicAngle parse_dyadic(const std::string& text);
std::string emit_dyadic(const DyadicAngle& x);  // reduced fraction, e.g. "1/4"

BinaryLeaf parse_binary_leaf(const std::string& text);  // "b:<dyadic>:<dyadic>"
std::string emit_binary_leaf(const BinaryLeaf& l);

// Diagram file: one leaf literal per line, '#' comments, blank lines
// ignored, duplicates rejected. Emission is canonical (sorted, no comments).
std::vector<Leaf> parse_diagram_file(std::istream& in);
std::string emit_diagram_file(const std::vector<Leaf>& leaves);

// Element file: [dom] and [ran] sections of leaf literals, a [shift]
// section, and for signed elements a [signs] section with one +-1 per dom
// interval in order. The shift is the image vertex index of vertex 0; the
// interval targets of a signed element are recovered from the rule that the
// one-sided images jump across an identified pair exactly at sign changes.
struct ElementFile {
  std::vector<Leaf> dom;
  std::vector<Leaf> ran;
  size_t shift = 0;
  std::optional<std::vector<int>> signs;
};

ElementFile parse_element_file(std::istream& in);
ThompsonElement to_thompson(const ElementFile& f);
GeneralElement to_general(const ElementFile& f);
std::string emit_element_file(const ThompsonElement& g);
std::string emit_element_file(const GeneralElement& g);

// Partial-automorphism file: lines "k:n -> k':n'", optional sign lines
// "sign C0 -" / "sign I(k:n) +". Any sign line switches the germ to the
// orientation-respecting mode.
PartialAutomorphism parse_germ_file(std::istream& in);
std::string emit_germ_file(const PartialAutomorphism& pa);

// Unit-circle chord drawing. Positions are fractions of the full turn in
// [0, 1); output is deterministic for fixed input.
std::string render_svg(const std::vector<std::pair<double, double>>& chords);

double turn_fraction(const TriadicAngle& x);  // x / 2
double turn_fraction(const DyadicAngle& x);   // x / 3

}  // namespace basilica
