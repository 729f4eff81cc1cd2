#include <random>

#include "basilica/element.hpp"
#include "doctest.h"

using namespace basilica;

namespace {

ThompsonElement rot1() {
  return ThompsonElement(PerfectDiagram::base(), PerfectDiagram::base(), 1);
}

ThompsonElement g0() {
  return ThompsonElement(PerfectDiagram({diameter(), Leaf(0, 1)}),
                         PerfectDiagram({diameter(), Leaf(1, 1)}), 1);
}

// Seeded element built from random subdivisions of a common shape, so the
// shift is compatible by construction.
ThompsonElement random_element(std::mt19937_64& rng) {
  PerfectDiagram dom({diameter()});
  for (int step = static_cast<int>(rng() % 5); step > 0; --step)
    dom = subdivide(dom, rng() % dom.interval_count());
  for (;;) {
    PerfectDiagram ran({diameter()});
    while (ran.size() < dom.size()) ran = subdivide(ran, rng() % ran.interval_count());
    std::vector<size_t> shifts = isomorphism_shifts(dom, ran);
    if (!shifts.empty()) return ThompsonElement(dom, ran, shifts[rng() % shifts.size()]);
  }
}

}  // namespace

TEST_CASE("element construction") {
  CHECK(is_identity(ThompsonElement::identity()));
  CHECK_NOTHROW(rot1());
  CHECK_THROWS_AS(ThompsonElement(PerfectDiagram({diameter(), Leaf(0, 1)}),
                                  PerfectDiagram({diameter(), Leaf(1, 1)}), 2),
                  ValidationError);
  CHECK_THROWS_AS(ThompsonElement(PerfectDiagram({diameter(), Leaf(0, 1)}),
                                  PerfectDiagram({diameter()}), 0),
                  ValidationError);
}

TEST_CASE("isomorphism shifts") {
  CHECK(isomorphism_shifts(PerfectDiagram({diameter(), Leaf(0, 1)}),
                           PerfectDiagram({diameter(), Leaf(1, 1)})) ==
        std::vector<size_t>{1, 3});
  CHECK(isomorphism_shifts(PerfectDiagram::base(), PerfectDiagram::base()) ==
        std::vector<size_t>{0, 1});
  CHECK(isomorphism_shifts(PerfectDiagram({diameter(), Leaf(0, 1)}),
                           PerfectDiagram({diameter(), Leaf(0, 1), Leaf(1, 2)}))
            .empty());
}

TEST_CASE("pointwise application") {
  // Shift 1 turns the pair into the unreduced rotation: every piece has
  // slope one, e.g. [0,1/3] -> [1,4/3].
  CHECK(apply(g0(), normalize(1, 2)) == normalize(10, 2));
  CHECK(apply(g0(), normalize(4, 1)) == normalize(1, 1));
  CHECK(apply(g0(), normalize(1, 1)) == normalize(4, 1));  // vertex to vertex
  // Shift 3 on the same pair has pieces of slope 3 and 1/3:
  // [1/3,2/3] -> [0,1] and [1,2] -> [4/3,5/3].
  ThompsonElement steep(PerfectDiagram({diameter(), Leaf(0, 1)}),
                        PerfectDiagram({diameter(), Leaf(1, 1)}), 3);
  CHECK(apply(steep, normalize(4, 2)) == normalize(1, 1));
  CHECK(apply(steep, normalize(4, 1)) == normalize(13, 2));
  CHECK(apply(ThompsonElement::identity(), normalize(7, 3)) == normalize(7, 3));
  CHECK(apply(rot1(), normalize(1, 1)) == normalize(4, 1));
  CHECK(apply(rot1(), normalize(5, 1)) == normalize(2, 1));
}

TEST_CASE("chord transport") {
  CHECK(apply_leaf(g0(), Leaf(0, 2)) == Leaf(3, 2));
  CHECK(apply_leaf(g0(), Leaf(0, 1)) == Leaf(1, 1));
  CHECK(apply_leaf(ThompsonElement::identity(), Leaf(4, 3)) == Leaf(4, 3));
}

TEST_CASE("chord transport never fails on random pairs") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    ThompsonElement g = random_element(rng);
    int n = 1 + static_cast<int>(rng() % 6);
    Bigint bound = (2 * pow3(n) - 1) / 3;
    Leaf l(Bigint(rng() % 1000000) % (bound + 1), n);
    Leaf image = apply_leaf(g, l);
    CHECK(equivalent(image.endpoint_a(), image.endpoint_b()));
    CHECK(apply_leaf(invert(g), image) == l);
  }
}

TEST_CASE("composition and inversion") {
  CHECK(is_identity(compose(g0(), invert(g0()))));
  CHECK(is_identity(compose(rot1(), rot1())));
  CHECK(equals(compose(ThompsonElement::identity(), g0()), g0()));
  CHECK(equals(invert(rot1()), rot1()));
  CHECK(apply(invert(g0()), normalize(10, 2)) == normalize(1, 2));
  CHECK(is_identity(invert(ThompsonElement::identity())));
}

TEST_CASE("group axioms on random elements") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 25; ++trial) {
    ThompsonElement g = random_element(rng);
    ThompsonElement h = random_element(rng);
    ThompsonElement k = random_element(rng);
    CHECK(equals(compose(compose(g, h), k), compose(g, compose(h, k))));
    CHECK(equals(compose(g, ThompsonElement::identity()), g));
    CHECK(equals(compose(ThompsonElement::identity(), g), g));
    CHECK(is_identity(compose(invert(g), g)));
    // Composition agrees pointwise.
    TriadicAngle x = normalize(Bigint(rng() % 4000), 4 + static_cast<int>(rng() % 3));
    CHECK(apply(compose(g, h), x) == apply(g, apply(h, x)));
  }
}

TEST_CASE("equality is semantic") {
  CHECK(is_identity(ThompsonElement(PerfectDiagram({diameter(), Leaf(0, 1)}),
                                    PerfectDiagram({diameter(), Leaf(0, 1)}), 0)));
  CHECK(equals(g0(), reduce(g0())));
  CHECK_FALSE(equals(rot1(), ThompsonElement::identity()));
}

TEST_CASE("reduction removes synchronized chords") {
  ThompsonElement fat(PerfectDiagram({diameter(), Leaf(0, 1)}),
                      PerfectDiagram({diameter(), Leaf(0, 1)}), 0);
  ThompsonElement red = reduce(fat);
  CHECK(red.dom().size() == 1);
  CHECK(is_identity(red));
  CHECK(equals(reduce(g0()), g0()));
  CHECK(reduce(g0()).dom().size() == 2);
  CHECK(is_identity(reduce(ThompsonElement::identity())));

  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    ThompsonElement g = random_element(rng);
    ThompsonElement r = reduce(g);
    CHECK(equals(g, r));
    CHECK(r.dom().size() <= g.dom().size());
  }
}

TEST_CASE("induced tree action") {
  CHECK(pi_edge(g0(), Leaf(0, 1)) == Leaf(1, 1));
  CHECK(pi_vertex(g0(), VertexId::central(0)) == VertexId::central(1));
  CHECK(pi_vertex(ThompsonElement::identity(), VertexId::inner_of(Leaf(1, 2))) ==
        VertexId::inner_of(Leaf(1, 2)));
}

TEST_CASE("induced action is a homomorphism") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    ThompsonElement g = random_element(rng);
    ThompsonElement h = random_element(rng);
    ThompsonElement gh = compose(g, h);
    for (int i = 0; i < 10; ++i) {
      int n = 1 + static_cast<int>(rng() % 4);
      Bigint bound = (2 * pow3(n) - 1) / 3;
      Leaf l(Bigint(rng() % 1000000) % (bound + 1), n);
      CHECK(pi_edge(gh, l) == pi_edge(g, pi_edge(h, l)));
    }
  }
}

TEST_CASE("vertex action preserves adjacency and side order") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    ThompsonElement g = random_element(rng);
    for (const VertexId& v : {VertexId::central(0), VertexId::inner_of(Leaf(1, 2)),
                              VertexId::inner_of(Leaf(0, 1))}) {
      VertexId w = pi_vertex(g, v);
      std::vector<Leaf> s = sides(v, v.longest_side().n + 2);
      REQUIRE(s.size() >= 3);
      // Images of the sides are sides of the image vertex, in the same
      // cyclic order.
      TriadicAngle p0 = occupied_start(w, apply_leaf(g, s[0]));
      TriadicAngle p1 = occupied_start(w, apply_leaf(g, s[1]));
      TriadicAngle p2 = occupied_start(w, apply_leaf(g, s[2]));
      CHECK(cyclic_order(p0, p1, p2) == CyclicOrder::positive);
      for (const Leaf& side : s) {
        auto [x, y] = edge_endpoints(apply_leaf(g, side));
        CHECK((x == w || y == w));
      }
    }
  }
}
