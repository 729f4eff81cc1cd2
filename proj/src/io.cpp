#include "basilica/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <sstream>

namespace basilica {

namespace {

Bigint parse_bigint(const std::string& text) {
  detail::require(!text.empty(), errc::malformed_input, "empty number");
  size_t i = text[0] == '-' ? 1 : 0;
  detail::require(i < text.size(), errc::malformed_input, "bare sign");
  for (; i < text.size(); ++i)
    detail::require(text[i] >= '0' && text[i] <= '9', errc::malformed_input,
                    "bad digit in number");
  return Bigint(text);
}

int parse_small(const std::string& text) {
  Bigint b = parse_bigint(text);
  detail::require(b >= 0 && b <= 1000000, errc::malformed_input, "exponent out of range");
  return static_cast<int>(b);
}

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return std::string();
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

TriadicAngle parse_angle(const std::string& text) {
  std::string t = strip(text);
  size_t slash = t.find('/');
  if (slash == std::string::npos) return from_digits(t);
  std::string den = t.substr(slash + 1);
  detail::require(den.rfind("3^", 0) == 0, errc::malformed_input,
                  "angle denominator must be 3^level");
  return normalize(parse_bigint(t.substr(0, slash)), parse_small(den.substr(2)));
}

std::string emit_angle(const TriadicAngle& x) { return to_string(x); }

Leaf parse_leaf(const std::string& text) {
  std::vector<std::string> parts = split(strip(text), ':');
  detail::require(parts.size() == 2, errc::malformed_input, "leaf literal must be k:n");
  return Leaf(parse_bigint(parts[0]), parse_small(parts[1]));
}

std::string emit_leaf(const Leaf& l) { return to_string(l); }

VertexId parse_vertex(const std::string& text) {
  std::string t = strip(text);
  if (t == "C0") return VertexId::central(0);
  if (t == "C1") return VertexId::central(1);
  detail::require(t.size() > 3 && t.rfind("I(", 0) == 0 && t.back() == ')',
                  errc::malformed_input, "vertex literal must be C0, C1 or I(k:n)");
  return VertexId::inner_of(parse_leaf(t.substr(2, t.size() - 3)));
}

std::string emit_vertex(const VertexId& v) { return to_string(v); }

DyadicAngle parse_dyadic(const std::string& text) {
  std::string t = strip(text);
  size_t slash = t.find('/');
  if (slash == std::string::npos) return normalize_dyadic(parse_bigint(t), 0);
  Bigint num = parse_bigint(t.substr(0, slash));
  std::string den = t.substr(slash + 1);
  if (den.rfind("2^", 0) == 0) return normalize_dyadic(num, parse_small(den.substr(2)));
  Bigint q = parse_bigint(den);
  int level = 0;
  while (q > 1 && q % 2 == 0) {
    q /= 2;
    ++level;
  }
  detail::require(q == 1, errc::malformed_input, "dyadic denominator must be a power of two");
  return normalize_dyadic(num, level);
}

std::string emit_dyadic(const DyadicAngle& x) { return to_string(x); }

BinaryLeaf parse_binary_leaf(const std::string& text) {
  std::vector<std::string> parts = split(strip(text), ':');
  detail::require(parts.size() == 3 && parts[0] == "b", errc::malformed_input,
                  "binary leaf literal must be b:x:y");
  return binary_leaf(parse_dyadic(parts[1]), parse_dyadic(parts[2]));
}

std::string emit_binary_leaf(const BinaryLeaf& l) { return to_string(l); }

namespace {

std::vector<std::string> content_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = strip(line);
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

}  // namespace

std::vector<Leaf> parse_diagram_file(std::istream& in) {
  std::vector<Leaf> leaves;
  for (const std::string& line : content_lines(in)) {
    Leaf l = parse_leaf(line);
    detail::require(std::find(leaves.begin(), leaves.end(), l) == leaves.end(),
                    errc::malformed_input, "duplicate leaf line");
    leaves.push_back(l);
  }
  return leaves;
}

std::string emit_diagram_file(const std::vector<Leaf>& leaves) {
  std::vector<Leaf> sorted = leaves;
  std::sort(sorted.begin(), sorted.end());
  std::string out;
  for (const Leaf& l : sorted) out += emit_leaf(l) + "\n";
  return out;
}

ElementFile parse_element_file(std::istream& in) {
  ElementFile f;
  enum { none, dom, ran, shift, signs } section = none;
  bool have_shift = false;
  for (const std::string& line : content_lines(in)) {
    if (line == "[dom]") {
      section = dom;
    } else if (line == "[ran]") {
      section = ran;
    } else if (line == "[shift]") {
      section = shift;
    } else if (line == "[signs]") {
      section = signs;
      f.signs.emplace();
    } else if (section == dom) {
      f.dom.push_back(parse_leaf(line));
    } else if (section == ran) {
      f.ran.push_back(parse_leaf(line));
    } else if (section == shift) {
      detail::require(!have_shift, errc::malformed_input, "repeated shift value");
      f.shift = static_cast<size_t>(parse_small(line));
      have_shift = true;
    } else if (section == signs) {
      if (line == "+1" || line == "+" || line == "1")
        f.signs->push_back(1);
      else if (line == "-1" || line == "-")
        f.signs->push_back(-1);
      else
        throw ValidationError(errc::malformed_input, "bad sign line");
    } else {
      throw ValidationError(errc::malformed_input, "content before a section header");
    }
  }
  detail::require(have_shift, errc::malformed_input, "missing [shift] section");
  detail::require(!f.dom.empty() && !f.ran.empty(), errc::malformed_input,
                  "missing [dom] or [ran] section");
  return f;
}

ThompsonElement to_thompson(const ElementFile& f) {
  detail::require(!f.signs.has_value() ||
                      std::all_of(f.signs->begin(), f.signs->end(),
                                  [](int s) { return s == 1; }),
                  errc::malformed_input,
                  "element has negative signs; not orientation preserving");
  return ThompsonElement(PerfectDiagram(f.dom), PerfectDiagram(f.ran), f.shift);
}

GeneralElement to_general(const ElementFile& f) {
  PerfectDiagram dom(f.dom);
  PerfectDiagram ran(f.ran);
  size_t n = dom.vertex_count();
  std::vector<int> sign = f.signs.value_or(std::vector<int>(n, 1));
  detail::require(sign.size() == n, errc::malformed_input,
                  "signs count differs from interval count");
  // Recover interval targets: walk the vertices once, jumping across the
  // paired vertex exactly where the sign changes.
  detail::require(f.shift < n, errc::malformed_input, "shift out of range");
  std::vector<size_t> target(n);
  size_t right = f.shift;  // right-side image vertex of vertex i
  for (size_t i = 0; i < n; ++i) {
    target[i] = sign[i] > 0 ? right : (right + n - 1) % n;
    size_t left_next = sign[i] > 0 ? (target[i] + 1) % n : target[i];
    right = sign[i] == sign[(i + 1) % n] ? left_next : ran.paired_vertex(left_next);
  }
  return GeneralElement(std::move(dom), std::move(ran), std::move(target), std::move(sign));
}

namespace {

std::string emit_element_core(const std::vector<Leaf>& dom, const std::vector<Leaf>& ran,
                              size_t shift) {
  std::string out = "[dom]\n";
  for (const Leaf& l : dom) out += emit_leaf(l) + "\n";
  out += "[ran]\n";
  for (const Leaf& l : ran) out += emit_leaf(l) + "\n";
  out += "[shift]\n" + std::to_string(shift) + "\n";
  return out;
}

}  // namespace

std::string emit_element_file(const ThompsonElement& g) {
  return emit_element_core(g.dom().leaves(), g.ran().leaves(), g.shift());
}

std::string emit_element_file(const GeneralElement& g) {
  std::string out =
      emit_element_core(g.dom().leaves(), g.ran().leaves(), g.image_vertex(0, +1));
  out += "[signs]\n";
  for (size_t i = 0; i < g.dom().vertex_count(); ++i)
    out += (g.interval_sign(i) > 0 ? "+1\n" : "-1\n");
  return out;
}

PartialAutomorphism parse_germ_file(std::istream& in) {
  std::vector<std::pair<Leaf, Leaf>> edges;
  std::map<VertexId, int> signs;
  bool respect = false;
  for (const std::string& line : content_lines(in)) {
    if (line.rfind("sign ", 0) == 0) {
      std::istringstream ls(line.substr(5));
      std::string vtx, sgn;
      ls >> vtx >> sgn;
      detail::require(sgn == "+" || sgn == "-" || sgn == "+1" || sgn == "-1",
                      errc::malformed_input, "bad sign line");
      signs[parse_vertex(vtx)] = sgn[0] == '-' ? -1 : 1;
      respect = true;
      continue;
    }
    size_t arrow = line.find("->");
    detail::require(arrow != std::string::npos, errc::malformed_input,
                    "germ line must be k:n -> k':n'");
    edges.emplace_back(parse_leaf(line.substr(0, arrow)),
                       parse_leaf(line.substr(arrow + 2)));
  }
  PartialAutomorphism pa = PartialAutomorphism::from_edges(
      std::move(edges), respect ? GermMode::respect : GermMode::preserve);
  if (respect) {
    for (const auto& [v, w] : pa.vertices)
      if (!signs.count(v)) signs[v] = 1;
    pa.signs = std::move(signs);
  }
  return pa;
}

std::string emit_germ_file(const PartialAutomorphism& pa) {
  std::vector<std::pair<Leaf, Leaf>> edges = pa.edges;
  std::sort(edges.begin(), edges.end());
  std::string out;
  for (const auto& [s, t] : edges) out += emit_leaf(s) + " -> " + emit_leaf(t) + "\n";
  if (pa.mode == GermMode::respect) {
    std::vector<std::pair<VertexId, VertexId>> verts = pa.vertices;
    std::sort(verts.begin(), verts.end());
    for (const auto& [v, w] : verts)
      out += "sign " + emit_vertex(v) + (pa.sign_at(v) > 0 ? " +\n" : " -\n");
  }
  return out;
}

std::string render_svg(const std::vector<std::pair<double, double>>& chords) {
  const double cx = 256.0, cy = 256.0, r = 250.0;
  auto point = [&](double frac) {
    double a = 2.0 * M_PI * frac;
    return std::pair<double, double>(cx + r * std::cos(a), cy - r * std::sin(a));
  };
  char buf[160];
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"512\" height=\"512\" "
         "viewBox=\"0 0 512 512\">\n";
  std::snprintf(buf, sizeof buf,
                "  <circle cx=\"%.4f\" cy=\"%.4f\" r=\"%.4f\" fill=\"none\" "
                "stroke=\"black\" stroke-width=\"1\"/>\n",
                cx, cy, r);
  out += buf;
  for (const auto& [f1, f2] : chords) {
    auto [x1, y1] = point(f1);
    auto [x2, y2] = point(f2);
    std::snprintf(buf, sizeof buf,
                  "  <line x1=\"%.4f\" y1=\"%.4f\" x2=\"%.4f\" y2=\"%.4f\" "
                  "stroke=\"steelblue\" stroke-width=\"0.8\"/>\n",
                  x1, y1, x2, y2);
    out += buf;
  }
  out += "</svg>\n";
  return out;
}

double turn_fraction(const TriadicAngle& x) {
  return x.num.convert_to<double>() / (2.0 * pow3(x.level).convert_to<double>());
}

double turn_fraction(const DyadicAngle& x) {
  return x.num.convert_to<double>() / (3.0 * pow2(x.level).convert_to<double>());
}

}  // namespace basilica
