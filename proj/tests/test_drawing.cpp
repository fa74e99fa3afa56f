// Crossing-pair data model: canonicalization, structural validation,
// side classification, induced subdrawings, and the K_4 rotation catalog.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "holescope/drawing.hpp"
#include "holescope/generators.hpp"
#include "holescope/geometry.hpp"

using namespace holescope;

namespace {

CrossingPair cp(VertexId a, VertexId b, VertexId c, VertexId d) {
  return make_crossing_pair(make_edge(a, b), make_edge(c, d));
}

bool mentions(const std::vector<std::string>& msgs, const std::string& frag) {
  return std::any_of(msgs.begin(), msgs.end(), [&](const std::string& m) {
    return m.find(frag) != std::string::npos;
  });
}

}  // namespace

TEST_CASE("edges canonicalize and reject degenerate input") {
  CHECK(make_edge(5, 2) == Edge{2, 5});
  CHECK(make_edge(2, 5) == Edge{2, 5});
  CHECK_THROWS_AS(make_edge(3, 3), std::invalid_argument);

  // pair ordering is lexicographic on the canonical edges
  CrossingPair p = make_crossing_pair(make_edge(4, 2), make_edge(3, 1));
  CHECK(p.e == Edge{1, 3});
  CHECK(p.f == Edge{2, 4});
  CHECK(adjacent(Edge{1, 2}, Edge{2, 3}));
  CHECK(!adjacent(Edge{1, 2}, Edge{3, 4}));
}

TEST_CASE("construction sorts, deduplicates, and range-checks crossings") {
  // same pair twice, given in scrambled order
  Drawing d(4, {cp(2, 4, 1, 3), cp(1, 3, 2, 4)});
  REQUIRE(d.crossings().size() == 1);
  CHECK(d.crossings()[0] == cp(1, 3, 2, 4));
  CHECK(d.edge_count() == 6);
  CHECK(validate(d).empty());

  CHECK_THROWS_AS(Drawing(4, {cp(1, 3, 2, 5)}), std::invalid_argument);
  CHECK_THROWS_AS(Drawing(0, {}), std::invalid_argument);
}

TEST_CASE("rotations are re-anchored to the smallest neighbor") {
  RotationSystem rot = {{3, 4, 2}, {3, 4, 1}, {4, 1, 2}, {1, 2, 3}};
  Drawing d(4, {cp(1, 3, 2, 4)}, rot);
  CHECK(d.rotation_of(1) == Rotation{2, 3, 4});   // rotated from (3,4,2)
  CHECK(d.rotation_of(2) == Rotation{1, 3, 4});
  CHECK(d.rotation_of(3) == Rotation{1, 2, 4});

  // wrong shape is a construction error, not a validate() finding
  CHECK_THROWS_WITH(Drawing(4, {}, RotationSystem{{2, 3, 4}}),
                    "malformed rotation system: wrong count");
  CHECK_THROWS_WITH(Drawing(4, {}, RotationSystem{{2, 3}, {1, 3, 4}, {1, 2, 4}, {1, 2, 3}}),
                    "malformed rotation system: wrong length");
}

TEST_CASE("validate reports adjacent pairs, K_4 violations, bad rotations") {
  // {1,2} and {1,3} share vertex 1 — construction accepts, validate objects
  Drawing adj(4, {cp(1, 2, 1, 3)});
  CHECK(mentions(validate(adj), "adjacent edges cross"));

  // two crossings inside one 4-subset
  Drawing k4(4, {cp(1, 3, 2, 4), cp(1, 4, 2, 3)});
  CHECK(mentions(validate(k4), "K_4 rule violated on {1,2,3,4}"));

  // rotation that repeats a neighbor
  Drawing rep(4, {cp(1, 3, 2, 4)},
              RotationSystem{{2, 2, 3}, {1, 3, 4}, {1, 2, 4}, {1, 2, 3}});
  CHECK(mentions(validate(rep), "not a permutation"));

  CHECK(validate(convex_gon(7)).empty());
  CHECK(validate(twisted(7)).empty());
  CHECK(validate(twisted_prime(7)).empty());
}

TEST_CASE("crossing queries") {
  Drawing d = convex_gon(5);
  CHECK(crosses(d, make_edge(1, 3), make_edge(2, 4)));
  CHECK(!crosses(d, make_edge(1, 3), make_edge(4, 5)));
  CHECK_THROWS_WITH(crosses(d, make_edge(1, 2), make_edge(2, 3)),
                    "not independent");

  // {1,3} is crossed by {2,4} and {2,5} in the convex pentagon
  CHECK(d.crossing_degree(make_edge(1, 3)) == 2);
  std::vector<Edge> want = {{2, 4}, {2, 5}};
  CHECK(d.edges_crossing(make_edge(1, 3)) == want);
  CHECK(d.crossing_degree(make_edge(1, 2)) == 0);
  CHECK(d.crosses_raw(make_edge(1, 3), make_edge(2, 4)));
  CHECK(!d.crosses_raw(make_edge(1, 2), make_edge(2, 3)));
}

TEST_CASE("separation by triangle follows crossing parity") {
  // convex position: no vertex is inside any triangle
  Drawing c5 = convex_gon(5);
  CHECK(!separated_by_triangle(c5, {1, 2, 3}, 4, 5));

  // twisted: vertex 1 and 5 fall on opposite sides of {2,3,4}
  Drawing t5 = twisted(5);
  CHECK(separated_by_triangle(t5, {2, 3, 4}, 1, 5));
  SideClassification sc = classify_sides(t5, {2, 3, 4});
  CHECK(sc.class_a == std::vector<VertexId>{1});
  CHECK(sc.class_b == std::vector<VertexId>{5});

  CHECK_THROWS_AS(separated_by_triangle(t5, {2, 3, 4}, 1, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(separated_by_triangle(t5, {2, 3, 4}, 3, 5),
                  std::invalid_argument);
}

TEST_CASE("classify_sides rejects non-plane cycles") {
  Drawing t6 = twisted(6);
  // {2,5} crosses {1,6}, so (1,2,5,6) is not a plane cycle
  CHECK_THROWS_WITH(classify_sides(t6, {1, 2, 5, 6}), "cycle not plane");
  SideClassification sc = classify_sides(t6, {1, 2, 6, 5});
  CHECK(sc.class_a == std::vector<VertexId>{3, 4});
  CHECK(sc.class_b.empty());
}

TEST_CASE("induced subdrawings relabel order-preservingly") {
  // convex stays convex: {2,4,5,7} of C_7 is C_4 after relabeling
  Drawing sub = induced_subdrawing(convex_gon(7), {2, 4, 5, 7});
  Drawing c4 = convex_gon(4);
  CHECK(sub.n() == 4);
  CHECK(sub.crossings() == c4.crossings());
  REQUIRE(sub.has_rotations());
  for (VertexId v = 1; v <= 4; ++v)
    CHECK(sub.rotation_of(v) == c4.rotation_of(v));

  // dropping the rerouted vertex of T'_k recovers the twisted drawing
  for (int k = 6; k <= 9; ++k) {
    std::vector<VertexId> keep;
    for (VertexId v = 1; v <= k; ++v)
      if (v != 2) keep.push_back(v);
    Drawing tp = induced_subdrawing(twisted_prime(k), keep);
    CHECK(tp.crossings() == twisted(k - 1).crossings());
  }
}

TEST_CASE("K_4 crossing index matches the drawing") {
  CHECK(k4_crossing_index(convex_gon(4), {1, 2, 3, 4}) == 1);   // {1,3}x{2,4}
  CHECK(k4_crossing_index(twisted(4), {1, 2, 3, 4}) == 2);      // {1,4}x{2,3}
  CHECK(k4_crossing_index(Drawing(4, {}), {1, 2, 3, 4}) == -1);
}

TEST_CASE("exactly eight sign vectors are realizable") {
  int realizable = 0;
  for (unsigned mask = 0; mask < 16; ++mask)
    if (k4_status_from_signs(mask)) ++realizable;
  CHECK(realizable == 8);

  // the all-ascending vector is the convex K_4
  REQUIRE(k4_status_from_signs(0b1111));
  CHECK(*k4_status_from_signs(0b1111) == 1);
}

TEST_CASE("rotation consistency holds across the generator families") {
  CHECK(rotation_consistency_violations(convex_gon(9)).empty());
  CHECK(rotation_consistency_violations(twisted(9)).empty());
  CHECK(rotation_consistency_violations(dn_family(9)).empty());
  CHECK(rotation_consistency_violations(random_convex_instance(10, 3)).empty());
  // no rotations, nothing to check
  CHECK(rotation_consistency_violations(twisted_prime(8)).empty());
}

TEST_CASE("labels travel with the drawing") {
  Drawing d = convex_gon(5).with_label("pentagon");
  CHECK(d.label() == "pentagon");
  CHECK(d.crossings() == convex_gon(5).crossings());
}
