#include <random>

#include "basilica/diagram.hpp"
#include "doctest.h"

using namespace basilica;

namespace {

// Literal reading of the defining condition: a chord system is a diagram
// when it contains the diameter and, for every absent leaf up to the deepest
// input level, the whole system lies on one side of that leaf.
bool geometric_is_diagram(const std::vector<Leaf>& leaves) {
  if (std::find(leaves.begin(), leaves.end(), diameter()) == leaves.end()) return false;
  int max_level = 0;
  for (const Leaf& l : leaves) max_level = std::max(max_level, l.n);
  std::vector<Leaf> all;
  all.push_back(diameter());
  for (int n = 1; n <= max_level; ++n) {
    Bigint bound = 2 * pow3(n);
    for (Bigint k = 0; 3 * k + 1 < bound; ++k) all.push_back(Leaf(k, n));
  }
  for (const Leaf& eta : all) {
    if (std::find(leaves.begin(), leaves.end(), eta) != leaves.end()) continue;
    Arc mid = eta.middle_arc();
    bool any_inside = false, any_outside = false;
    for (const Leaf& l : leaves) {
      bool a_in = arc_strictly_contains(mid, l.endpoint_a());
      bool b_in = arc_strictly_contains(mid, l.endpoint_b());
      (a_in && b_in ? any_inside : any_outside) = true;
    }
    if (any_inside && any_outside) return false;
  }
  return true;
}

std::vector<Leaf> leaves_up_to(int max_level) {
  std::vector<Leaf> all{diameter()};
  for (int n = 1; n <= max_level; ++n) {
    Bigint bound = 2 * pow3(n);
    for (Bigint k = 0; 3 * k + 1 < bound; ++k) all.push_back(Leaf(k, n));
  }
  return all;
}

}  // namespace

TEST_CASE("diagram recognition") {
  CHECK_FALSE(is_diagram({diameter(), Leaf(1, 2)}));
  CHECK(is_diagram({diameter(), Leaf(0, 1), Leaf(1, 2)}));
  CHECK_FALSE(is_diagram({Leaf(0, 1)}));
}

TEST_CASE("connectivity test matches the separation condition") {
  std::vector<Leaf> all = leaves_up_to(3);
  std::mt19937_64 rng(5);
  // Exhaustive over pairs and triples containing the diameter.
  for (size_t i = 1; i < all.size(); ++i) {
    CHECK(is_diagram({diameter(), all[i]}) == geometric_is_diagram({diameter(), all[i]}));
    for (size_t j = i + 1; j < all.size(); ++j) {
      std::vector<Leaf> set{diameter(), all[i], all[j]};
      CHECK(is_diagram(set) == geometric_is_diagram(set));
    }
  }
  // Random larger sets, which may or may not contain the diameter.
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Leaf> set;
    size_t size = 2 + rng() % 5;
    while (set.size() < size) {
      Leaf l = all[rng() % all.size()];
      if (std::find(set.begin(), set.end(), l) == set.end()) set.push_back(l);
    }
    CHECK(is_diagram(set) == geometric_is_diagram(set));
  }
}

TEST_CASE("perfectness checker") {
  CHECK(is_perfect({diameter()}));
  CHECK_FALSE(is_perfect({diameter(), Leaf(0, 2)}));
  CHECK(is_perfect({diameter(), Leaf(0, 1), Leaf(0, 2)}));
  CHECK(is_perfect({diameter(), Leaf(0, 1), Leaf(1, 2)}));
  CHECK_FALSE(is_perfect({Leaf(0, 1)}));
}

TEST_CASE("interval lists and their forms") {
  PerfectDiagram base({diameter()});
  REQUIRE(base.interval_count() == 2);
  CHECK(base.interval(0) == Arc{angle(0), 0});
  CHECK(base.interval_form(0).tag == IntervalForm::Left);
  CHECK(base.interval_form(0).index == 0);
  CHECK(base.interval(1) == Arc{angle(1), 0});
  CHECK(base.interval_form(1).tag == IntervalForm::Middle);

  PerfectDiagram left({diameter(), Leaf(0, 1)});
  REQUIRE(left.interval_count() == 4);
  CHECK(left.interval(0) == Arc{angle(0), 1});
  CHECK(left.interval_form(0).tag == IntervalForm::Left);
  CHECK(left.interval(1) == Arc{normalize(1, 1), 1});
  CHECK(left.interval_form(1).tag == IntervalForm::Middle);
  CHECK(left.interval(2) == Arc{normalize(2, 1), 1});
  CHECK(left.interval_form(2).tag == IntervalForm::Right);
  CHECK(left.interval(3) == Arc{angle(1), 0});
  CHECK(left.interval_form(3).tag == IntervalForm::Middle);

  PerfectDiagram right({diameter(), Leaf(1, 1)});
  REQUIRE(right.interval_count() == 4);
  CHECK(right.interval(0) == Arc{angle(0), 0});
  CHECK(right.interval_form(0).tag == IntervalForm::Left);
  CHECK(right.interval(1) == Arc{angle(1), 1});
  CHECK(right.interval_form(1).tag == IntervalForm::Left);
  CHECK(right.interval(2) == Arc{normalize(4, 1), 1});
  CHECK(right.interval_form(2).tag == IntervalForm::Middle);
  CHECK(right.interval(3) == Arc{normalize(5, 1), 1});
  CHECK(right.interval_form(3).tag == IntervalForm::Right);
}

TEST_CASE("subdivision moves") {
  PerfectDiagram base({diameter()});
  CHECK(subdivide(base, 0).leaves() == std::vector<Leaf>{diameter(), Leaf(0, 1)});
  CHECK(subdivide(base, 1).leaves() == std::vector<Leaf>{diameter(), Leaf(1, 1)});
  PerfectDiagram two({diameter(), Leaf(0, 1)});
  CHECK(subdivide(two, 1).leaves() ==
        std::vector<Leaf>{diameter(), Leaf(0, 1), Leaf(1, 2)});
  CHECK_THROWS_AS(subdivide(base, 2), ValidationError);
}

TEST_CASE("completion of diagrams") {
  CHECK(perfect_complete({diameter()}).leaves() == std::vector<Leaf>{diameter()});
  CHECK(perfect_complete({diameter(), Leaf(0, 2)}).leaves() ==
        std::vector<Leaf>{diameter(), Leaf(0, 1), Leaf(0, 2)});
  std::vector<Leaf> fixed{diameter(), Leaf(0, 1), Leaf(1, 2)};
  CHECK(perfect_complete(fixed).leaves() == fixed);
  CHECK_THROWS_AS(perfect_complete({diameter(), Leaf(1, 2)}), ValidationError);
}

TEST_CASE("completion on random diagrams") {
  std::mt19937_64 rng(17);
  std::vector<Leaf> all = leaves_up_to(4);
  for (int trial = 0; trial < 200; ++trial) {
    // Grow a connected chord set by stepping outward from the diameter.
    std::vector<Leaf> set{diameter()};
    int extra = 1 + static_cast<int>(rng() % 5);
    while (extra > 0) {
      Leaf l = all[rng() % all.size()];
      for (const Leaf& p : tree_path(l, diameter()))
        if (std::find(set.begin(), set.end(), p) == set.end()) set.push_back(p);
      --extra;
    }
    PerfectDiagram done = perfect_complete(set);
    for (const Leaf& l : set) CHECK(done.contains(l));
    CHECK(is_perfect(done.leaves()));
  }
}

TEST_CASE("union of perfect diagrams") {
  PerfectDiagram a({diameter(), Leaf(0, 1)});
  PerfectDiagram b({diameter(), Leaf(1, 1)});
  CHECK(diagram_union(a, b).leaves() ==
        std::vector<Leaf>{diameter(), Leaf(0, 1), Leaf(1, 1)});
  CHECK(diagram_union(a, a) == a);
  CHECK(diagram_union(a, PerfectDiagram({diameter()})) == a);
  CHECK(diagram_union(a, b) == diagram_union(b, a));
  PerfectDiagram c({diameter(), Leaf(0, 1), Leaf(1, 2)});
  CHECK(diagram_union(diagram_union(a, b), c) == diagram_union(a, diagram_union(b, c)));
}

TEST_CASE("removable leaves") {
  CHECK(removable_leaves(PerfectDiagram({diameter(), Leaf(0, 1)})) ==
        std::set<Leaf>{Leaf(0, 1)});
  CHECK(removable_leaves(PerfectDiagram({diameter()})).empty());
  CHECK(removable_leaves(PerfectDiagram({diameter(), Leaf(0, 1), Leaf(0, 2)})) ==
        std::set<Leaf>{Leaf(0, 2)});
}

TEST_CASE("subdivide and remove are inverse moves") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    PerfectDiagram p({diameter()});
    for (int step = 0; step < 6; ++step) p = subdivide(p, rng() % p.interval_count());
    size_t idx = rng() % p.interval_count();
    PerfectDiagram q = subdivide(p, idx);
    const Arc& arc = p.interval(idx);
    Leaf added(arc.start.num * pow3(arc.len_level - arc.start.level), arc.len_level + 1);
    CHECK(removable_leaves(q).count(added) == 1);
    std::vector<Leaf> back = q.leaves();
    back.erase(std::find(back.begin(), back.end(), added));
    CHECK(PerfectDiagram(back) == p);
  }
}

TEST_CASE("size bookkeeping and cell gaps") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    PerfectDiagram p({diameter()});
    for (int step = 0; step < static_cast<int>(rng() % 8); ++step)
      p = subdivide(p, rng() % p.interval_count());
    CHECK(p.vertex_count() == 2 * p.size());
    CHECK(p.interval_count() == 2 * p.size());
    // Every gap of every cell is exactly one diagram interval.
    for (const auto& [v, inc] : diagram_cells(p.leaves())) {
      for (size_t j = 0; j < inc.size(); ++j) {
        TriadicAngle from = occupied_end(v, inc[j]);
        TriadicAngle to = occupied_start(v, inc[(j + 1) % inc.size()]);
        size_t i = p.interval_containing(from);
        CHECK(p.interval(i).start == from);
        CHECK(p.interval(i).end() == to);
      }
    }
  }
}
