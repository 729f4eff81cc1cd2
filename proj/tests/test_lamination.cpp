#include "basilica/lamination.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace basilica;

namespace {

Leaf chord_to_leaf(const oracle::Model& m, int c) {
  return Leaf((m.chords[c].lo - 1) / 3, m.chords[c].level);
}

VertexId region_to_vertex(const oracle::Model& m, int region) {
  int longest = m.longest_side(region);
  if (m.chords[longest].level == 0)
    return VertexId::central(region);  // regions 0 and 1 are the central ones
  return VertexId::inner_of(chord_to_leaf(m, longest));
}

}  // namespace

TEST_CASE("equivalence relation") {
  CHECK(equivalent(normalize(1, 1), normalize(2, 1)));
  CHECK(equivalent(angle(1), angle(0)));
  CHECK_FALSE(equivalent(normalize(1, 1), normalize(1, 2)));
  CHECK_FALSE(equivalent(normalize(2, 1), normalize(4, 1)));
}

TEST_CASE("leaf from endpoints") {
  CHECK(leaf_from_endpoints(normalize(4, 2), normalize(5, 2)) == Leaf(1, 2));
  CHECK(leaf_from_endpoints(angle(1), angle(0)) == diameter());
  CHECK(leaf_from_endpoints(normalize(2, 1), normalize(1, 1)) == Leaf(0, 1));
  CHECK_THROWS_AS(leaf_from_endpoints(normalize(1, 1), normalize(1, 2)), ValidationError);
}

TEST_CASE("parent steps outward") {
  CHECK(parent(Leaf(1, 2)) == Leaf(0, 1));
  CHECK(parent(Leaf(0, 2)) == diameter());
  CHECK(parent(Leaf(3, 3)) == Leaf(0, 1));
  CHECK_THROWS_AS(parent(diameter()), ValidationError);
}

TEST_CASE("edge endpoints") {
  auto [d0, d1] = edge_endpoints(diameter());
  CHECK(d0 == VertexId::central(0));
  CHECK(d1 == VertexId::central(1));
  auto [a0, a1] = edge_endpoints(Leaf(0, 2));
  CHECK(a0 == VertexId::inner_of(Leaf(0, 2)));
  CHECK(a1 == VertexId::central(0));
  auto [b0, b1] = edge_endpoints(Leaf(1, 2));
  CHECK(b0 == VertexId::inner_of(Leaf(1, 2)));
  CHECK(b1 == VertexId::inner_of(Leaf(0, 1)));
}

TEST_CASE("sides in circle order") {
  CHECK(sides(VertexId::central(0), 2) ==
        std::vector<Leaf>{diameter(), Leaf(0, 2), Leaf(0, 1), Leaf(2, 2)});
  CHECK(sides(VertexId::inner_of(Leaf(0, 1)), 3) ==
        std::vector<Leaf>{Leaf(0, 1), Leaf(3, 3), Leaf(1, 2), Leaf(5, 3)});
  CHECK(sides(VertexId::central(1), 1) == std::vector<Leaf>{diameter(), Leaf(1, 1)});
}

TEST_CASE("parent, endpoints and sides against the subdivision model") {
  oracle::Model m = oracle::build(4);
  for (size_t c = 1; c < m.chords.size(); ++c) {
    Leaf l = chord_to_leaf(m, static_cast<int>(c));
    CHECK(parent(l) == chord_to_leaf(m, m.longest_side(m.outer_of(static_cast<int>(c)))));
    auto [inner, outer] = edge_endpoints(l);
    CHECK(inner == region_to_vertex(m, m.inner_of(static_cast<int>(c))));
    CHECK(outer == region_to_vertex(m, m.outer_of(static_cast<int>(c))));
  }
  for (size_t r = 0; r < m.region_sides.size(); ++r) {
    std::vector<Leaf> expect;
    for (int c : m.sides_of(static_cast<int>(r), m.depth))
      expect.push_back(chord_to_leaf(m, c));
    CHECK(sides(region_to_vertex(m, static_cast<int>(r)), m.depth) == expect);
  }
}

TEST_CASE("gap density") {
  // Between cyclically consecutive sides there is a side within two levels.
  for (int L = 1; L <= 4; ++L) {
    for (const VertexId& v :
         {VertexId::central(0), VertexId::central(1), VertexId::inner_of(Leaf(0, 1)),
          VertexId::inner_of(Leaf(1, 2))}) {
      std::vector<Leaf> s = sides(v, L);
      for (size_t i = 0; i < s.size(); ++i) {
        const Leaf& a = s[i];
        const Leaf& b = s[(i + 1) % s.size()];
        Gap gap{occupied_end(v, a), occupied_start(v, b)};
        Leaf inside = max_side_in_gap(v, gap);
        CHECK(inside.n <= L + 2);
      }
    }
  }
}

TEST_CASE("lowest-level side in a gap") {
  CHECK(max_side_in_gap(VertexId::central(0), Gap{angle(0), normalize(1, 1)}) == Leaf(0, 2));
  CHECK(max_side_in_gap(VertexId::central(0), Gap{angle(0), angle(1)}) == Leaf(0, 1));
  CHECK(max_side_in_gap(VertexId::inner_of(Leaf(0, 1)),
                        Gap{normalize(1, 1), normalize(2, 1)}) == Leaf(1, 2));
  // Wrapping gap that contains the longest side.
  CHECK(max_side_in_gap(VertexId::central(0), Gap{normalize(2, 1), normalize(1, 1)}) ==
        diameter());
  CHECK_THROWS_AS(
      max_side_in_gap(VertexId::central(0), Gap{normalize(1, 2), normalize(2, 2)}),
      ValidationError);
}

TEST_CASE("tree paths") {
  CHECK(tree_path(Leaf(1, 2), diameter()) ==
        std::vector<Leaf>{Leaf(1, 2), Leaf(0, 1), diameter()});
  CHECK(tree_path(Leaf(1, 2), Leaf(1, 2)) == std::vector<Leaf>{Leaf(1, 2)});
  CHECK(tree_path(Leaf(0, 2), Leaf(1, 1)) ==
        std::vector<Leaf>{Leaf(0, 2), diameter(), Leaf(1, 1)});
}

TEST_CASE("tree path edges stay shallow") {
  oracle::Model m = oracle::build(4);
  for (int a = 1; a < 30; ++a) {
    for (int b = a + 1; b < 30; ++b) {
      Leaf e = chord_to_leaf(m, a);
      Leaf f = chord_to_leaf(m, b);
      std::vector<Leaf> path = tree_path(e, f);
      CHECK(path.front() == e);
      CHECK(path.back() == f);
      CHECK(is_connected_edge_set(path));
      for (const Leaf& l : path) CHECK(l.n <= std::max(e.n, f.n));
    }
  }
}

TEST_CASE("leaf appears exactly at its two vertices") {
  oracle::Model m = oracle::build(4);
  for (size_t c = 1; c < m.chords.size(); ++c) {
    Leaf l = chord_to_leaf(m, static_cast<int>(c));
    if (l.n > 3) continue;
    int hits = 0;
    for (size_t r = 0; r < m.region_sides.size(); ++r) {
      std::vector<Leaf> s = sides(region_to_vertex(m, static_cast<int>(r)), l.n);
      hits += static_cast<int>(std::count(s.begin(), s.end(), l));
    }
    CHECK(hits == 2);
  }
}

TEST_CASE("vertex and leaf text forms") {
  CHECK(to_string(Leaf(1, 2)) == "1:2");
  CHECK(to_string(diameter()) == "0:0");
  CHECK(to_string(VertexId::central(1)) == "C1");
  CHECK(to_string(VertexId::inner_of(Leaf(1, 2))) == "I(1:2)");
}
