#include <doctest.h>

#include <vector>

#include "dihenum/actions.hpp"

using namespace dihenum;

namespace {

std::vector<int> odd_primes_up_to(int limit) {
  std::vector<int> primes;
  for (int p = 3; p <= limit; p += 2)
    if (is_odd_prime(p)) primes.push_back(p);
  return primes;
}

}  // namespace

TEST_CASE("point sets") {
  CHECK(points(DihedralGroup(3), ActionKind::Digraph).size() == 5);
  CHECK(points(DihedralGroup(3), ActionKind::Graph).size() == 4);
  CHECK(points(DihedralGroup(5), ActionKind::Graph).size() == 7);

  auto pts = points(DihedralGroup(5), ActionKind::Digraph);
  CHECK(pts.front() == ActionPoint{Part::Rotations, 1});
  CHECK(pts[3] == ActionPoint{Part::Rotations, 4});
  CHECK(pts[4] == ActionPoint{Part::Reflections, 0});
  CHECK(pts.back() == ActionPoint{Part::Reflections, 4});
}

TEST_CASE("point permutation") {
  DihedralGroup d10(5);
  CHECK(permute({2, 0}, {Part::Rotations, 1}, d10, ActionKind::Graph) ==
        ActionPoint{Part::Rotations, 2});
  // 4*2 = 8 = -2 (mod 5), same pair as 2
  CHECK(permute({4, 0}, {Part::Rotations, 2}, d10, ActionKind::Graph) ==
        ActionPoint{Part::Rotations, 2});
  CHECK(permute({1, 1}, {Part::Reflections, 4}, d10, ActionKind::Graph) ==
        ActionPoint{Part::Reflections, 0});

  SUBCASE("parts are preserved") {
    for (auto kind : {ActionKind::Digraph, ActionKind::Graph})
      for (const auto& a : all_automorphisms(d10))
        for (const auto& pt : points(d10, kind))
          CHECK(permute(a, pt, d10, kind).part == pt.part);
  }
}

TEST_CASE("traced cycle types") {
  DihedralGroup d10(5);
  auto identity = cycle_type_direct({1, 0}, d10, ActionKind::Digraph);
  CHECK(identity.merged() == std::map<int, int>{{1, 9}});

  auto doubling = cycle_type_direct({2, 0}, d10, ActionKind::Digraph);
  CHECK(doubling.merged() == std::map<int, int>{{1, 1}, {4, 2}});
  CHECK(doubling.rotation_cycles == std::map<int, int>{{4, 1}});
  CHECK(doubling.reflection_cycles == std::map<int, int>{{1, 1}, {4, 1}});

  auto negation = cycle_type_direct({4, 0}, d10, ActionKind::Graph);
  CHECK(negation.merged() == std::map<int, int>{{1, 3}, {2, 2}});
}

TEST_CASE("closed-form cycle types") {
  for (int p : {3, 5, 7, 11}) {
    DihedralGroup g(p);
    auto translation = cycle_type_closed({1, 1}, g, ActionKind::Digraph);
    CHECK(translation.merged() == std::map<int, int>{{1, p - 1}, {p, 1}});
  }

  DihedralGroup d10(5);
  auto doubling = cycle_type_closed({2, 0}, d10, ActionKind::Graph);
  CHECK(doubling.merged() == std::map<int, int>{{1, 1}, {2, 1}, {4, 1}});

  auto negation = cycle_type_closed({4, 0}, d10, ActionKind::Digraph);
  CHECK(negation.merged() == std::map<int, int>{{1, 1}, {2, 4}});
}

TEST_CASE("closed cycle types equal traced decomposition everywhere") {
  for (int p : odd_primes_up_to(31)) {
    DihedralGroup g(p);
    for (auto kind : {ActionKind::Digraph, ActionKind::Graph}) {
      const int n = point_count(g, kind);
      for (const auto& a : all_automorphisms(g)) {
        const auto direct = cycle_type_direct(a, g, kind);
        CHECK(direct == cycle_type_closed(a, g, kind));

        int covered = 0;
        for (const auto& [len, count] : direct.merged()) covered += len * count;
        CHECK(covered == n);
      }
    }
  }
}

TEST_CASE("cycle type does not depend on the reflection shift") {
  for (int p : {5, 7, 13}) {
    DihedralGroup g(p);
    for (auto kind : {ActionKind::Digraph, ActionKind::Graph})
      for (int s = 2; s < p; ++s)
        for (int t = 1; t < p; ++t)
          CHECK(cycle_type_direct({s, t}, g, kind) ==
                cycle_type_direct({s, 0}, g, kind));
  }
}

TEST_CASE("the action is faithful") {
  for (int p : {3, 5, 7, 13}) {
    DihedralGroup g(p);
    for (auto kind : {ActionKind::Digraph, ActionKind::Graph}) {
      int fixing_everything = 0;
      for (const auto& a : all_automorphisms(g)) {
        bool fixes_all = true;
        for (const auto& pt : points(g, kind))
          fixes_all &= permute(a, pt, g, kind) == pt;
        fixing_everything += fixes_all;
      }
      CHECK(fixing_everything == 1);
    }
  }
}
