// Closed-form families: crossing rules, counts, rotations, and the
// recursive family's census self-checks.

#include <array>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "holescope/generators.hpp"
#include "holescope/geometry.hpp"
#include "holescope/holes.hpp"

using namespace holescope;

namespace {

long long binom4(int n) {
  return 1LL * n * (n - 1) * (n - 2) * (n - 3) / 24;
}

}  // namespace

TEST_CASE("convex crossings are the interleaved quadruples") {
  for (int n = 4; n <= 9; ++n) {
    Drawing d = convex_gon(n);
    CHECK(d.label() == "C_" + std::to_string(n));
    CHECK((long long)d.crossings().size() == binom4(n));
    CHECK(validate(d).empty());
    REQUIRE(d.has_rotations());
    CHECK(rotation_consistency_violations(d).empty());
  }
  // the rule itself: {i,l} x {j,m} exactly when i<j<l<m
  Drawing c7 = convex_gon(7);
  for (int i = 1; i <= 7; ++i)
    for (int l = i + 1; l <= 7; ++l)
      for (int j = 1; j <= 7; ++j)
        for (int m = j + 1; m <= 7; ++m) {
          if (i == j || i == m || l == j || l == m) continue;
          // endpoints must alternate around the polygon, in either role
          bool want = (i < j && j < l && l < m) || (j < i && i < m && m < l);
          CHECK(c7.crosses_raw(make_edge(i, l), make_edge(j, m)) == want);
        }
  CHECK(convex_gon(3).crossings().empty());
  CHECK_THROWS_AS(convex_gon(2), std::invalid_argument);
}

TEST_CASE("twisted crossings are the nested quadruples") {
  Drawing t5 = twisted(5);
  std::vector<CrossingPair> want = {
      {{1, 4}, {2, 3}},
      {{1, 5}, {2, 3}},
      {{1, 5}, {2, 4}},
      {{1, 5}, {3, 4}},
      {{2, 5}, {3, 4}},
  };
  CHECK(t5.crossings() == want);

  for (int n = 4; n <= 9; ++n) {
    Drawing d = twisted(n);
    CHECK(d.label() == "T_" + std::to_string(n));
    // one crossing per 4-subset: the nested pair
    CHECK((long long)d.crossings().size() == binom4(n));
    CHECK(validate(d).empty());
    REQUIRE(d.has_rotations());
    CHECK(rotation_consistency_violations(d).empty());
  }
}

TEST_CASE("twisted uncrossed edges hug the ends") {
  // {a,b} is uncrossed iff b-a <= 2 and the edge touches an extreme block
  Drawing t8 = twisted(8);
  std::vector<Edge> uncrossed;
  for (VertexId a = 1; a <= 8; ++a)
    for (VertexId b = a + 1; b <= 8; ++b)
      if (t8.crossing_degree(make_edge(a, b)) == 0)
        uncrossed.push_back(make_edge(a, b));
  std::vector<Edge> want = {{1, 2}, {1, 3}, {6, 8}, {7, 8}};
  CHECK(uncrossed == want);
}

TEST_CASE("rerouted twisted drawings are crossing-maximal without rotations") {
  for (int k = 6; k <= 10; ++k) {
    Drawing d = twisted_prime(k);
    CHECK(d.label() == "T'_" + std::to_string(k));
    CHECK((long long)d.crossings().size() == binom4(k));
    CHECK(!d.has_rotations());
    CHECK(validate(d).empty());
  }
  CHECK_THROWS_AS(twisted_prime(5), std::invalid_argument);
}

TEST_CASE("recursive family: odd sizes only, crossing-maximal") {
  CHECK_THROWS_AS(dn_family(4), std::invalid_argument);
  CHECK_THROWS_AS(dn_family(6), std::invalid_argument);
  CHECK_THROWS_AS(dn_family(8), std::invalid_argument);
  for (int k : {5, 7, 9, 11}) {
    Drawing d = dn_family(k);
    CHECK(d.label() == "D_" + std::to_string(k));
    CHECK((long long)d.crossings().size() == binom4(k));
    CHECK(validate(d).empty());
    REQUIRE(d.has_rotations());
  }
}

TEST_CASE("recursive family: insertion steps follow the parity pattern") {
  std::vector<DnStep> steps;
  dn_family(11, &steps);
  REQUIRE(steps.size() == 6);  // vertices 6..11
  for (size_t i = 0; i < steps.size(); ++i) {
    const DnStep& s = steps[i];
    CHECK(s.v == (VertexId)(6 + i));
    VertexId anchor = (s.v % 2 == 0) ? s.v - 3 : s.v - 2;
    CHECK(s.base_edge == make_edge(anchor, s.v - 1));
  }
}

TEST_CASE("recursive family: empty-4-cycle census is exact") {
  const std::vector<std::pair<int, size_t>> counts = {
      {5, 5}, {7, 11}, {9, 18}, {11, 26}};
  for (auto [k, want] : counts) {
    auto expected = dn_expected_empty_4cycles(k);
    CHECK(expected.size() == want);

    std::set<std::array<VertexId, 4>> expect_set(expected.begin(),
                                                 expected.end());
    std::set<std::array<VertexId, 4>> got;
    for (const CycleWitness& w : enumerate_empty_cycles(dn_family(k), 4)) {
      std::array<VertexId, 4> s{w.cycle[0], w.cycle[1], w.cycle[2], w.cycle[3]};
      std::sort(s.begin(), s.end());
      got.insert(s);
    }
    CHECK(got == expect_set);
  }
}

TEST_CASE("recursive family: block pairs dominate the census") {
  // quadruples of the shape {2i-1,2i,2j-1,2j} number C(floor(k/2), 2)
  for (int k : {7, 9, 11}) {
    long long blocks = 0;
    for (const auto& s : dn_expected_empty_4cycles(k))
      if (s[0] % 2 == 1 && s[1] == s[0] + 1 && s[2] % 2 == 1 &&
          s[3] == s[2] + 1)
        ++blocks;
    long long half = k / 2;
    CHECK(blocks == half * (half - 1) / 2);
  }
}

TEST_CASE("random geometric instances are seed-deterministic") {
  Drawing a = random_convex_instance(12, 1);
  Drawing b = random_convex_instance(12, 1);
  CHECK(a.label() == "R_12_s1");
  CHECK(a.crossings() == b.crossings());
  REQUIRE(a.has_rotations());
  CHECK(a.rotations() == b.rotations());

  Drawing c = random_convex_instance(12, 2);
  CHECK(a.crossings() != c.crossings());

  // geometric, hence convex
  CHECK(is_convex_drawing(a).convex);
  CHECK(validate(a).empty());
}
