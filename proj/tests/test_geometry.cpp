// Exact predicates, point-file parsing, and compilation of point sets
// to drawings.

#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "holescope/geometry.hpp"
#include "holescope/holes.hpp"

using namespace holescope;

namespace {

// unit square plus one interior point near the bottom edge
PointConfig square5() {
  return PointConfig{{{0, 0}, {4, 0}, {4, 4}, {0, 4}, {2, 1}}};
}

}  // namespace

TEST_CASE("orientation determinant signs") {
  CHECK(orient({0, 0}, {1, 0}, {0, 1}) == 1);
  CHECK(orient({0, 0}, {0, 1}, {1, 0}) == -1);
  CHECK(orient({0, 0}, {1, 1}, {2, 2}) == 0);
  CHECK(orient({-5, 3}, {7, 3}, {1, 3}) == 0);
  // extreme but in-bounds coordinates stay exact
  CHECK(orient({-kMaxCoord, -kMaxCoord}, {kMaxCoord, -kMaxCoord},
               {0, kMaxCoord}) == 1);
}

TEST_CASE("proper segment crossing") {
  CHECK(segments_cross({0, 0}, {4, 4}, {0, 4}, {4, 0}));
  CHECK(!segments_cross({0, 0}, {1, 1}, {3, 0}, {4, 1}));
  // meeting would be at an endpoint region; disjoint open segments
  CHECK(!segments_cross({0, 0}, {2, 2}, {2, 3}, {4, 0}));
}

TEST_CASE("point files: comments, blanks, and malformed lines") {
  PointConfig p = parse_points_text("# header\n0 0\n\n4 0\n  4 4\n0 4\n");
  REQUIRE(p.points.size() == 4);
  CHECK(p.points[0] == Point{0, 0});
  CHECK(p.points[3] == Point{0, 4});

  CHECK_THROWS_WITH(parse_points_text("0 0\n1\n"), "bad point line 2");
  CHECK_THROWS_WITH(parse_points_text("0 0\n1 2\nx y\n"), "bad point line 3");
  CHECK_THROWS_WITH(parse_points_text("0 0\n1 2 3\n"), "bad point line 2");
  CHECK_THROWS_AS(parse_points_text("2000000 0\n"), std::invalid_argument);

  std::istringstream in("1 2\n3 4\n5 7\n");
  CHECK(parse_points(in).points.size() == 3);
}

TEST_CASE("coordinate hash is order-sensitive and stable") {
  CHECK(points_hash(square5()) == 0x79f28c348e8e8dc6ULL);
  PointConfig swapped{{{4, 0}, {0, 0}, {4, 4}, {0, 4}, {2, 1}}};
  CHECK(points_hash(swapped) != points_hash(square5()));
}

TEST_CASE("compiling the square-plus-center configuration") {
  Drawing d = from_points(square5());
  CHECK(d.n() == 5);
  CHECK(d.label() == "points:79f28c348e8e8dc6");

  std::vector<CrossingPair> want = {
      {{1, 3}, {2, 4}},
      {{1, 3}, {4, 5}},
      {{2, 4}, {3, 5}},
  };
  CHECK(d.crossings() == want);

  REQUIRE(d.has_rotations());
  CHECK(d.rotation_of(1) == Rotation{2, 5, 3, 4});
  CHECK(d.rotation_of(5) == Rotation{1, 2, 3, 4});
  CHECK(validate(d).empty());
  CHECK(rotation_consistency_violations(d).empty());
}

TEST_CASE("degenerate point sets are rejected") {
  CHECK_THROWS_WITH(from_points(PointConfig{{{0, 0}, {1, 0}}}),
                    "need at least 3 points");
  CHECK_THROWS_WITH(from_points(PointConfig{{{0, 0}, {1, 0}, {0, 0}}}),
                    "duplicate point");
  CHECK_THROWS_WITH(from_points(PointConfig{{{0, 0}, {2, 2}, {4, 4}, {1, 9}}}),
                    "not in general position");
}

TEST_CASE("random point sets are reproducible and in general position") {
  PointConfig a = random_points(15, 42);
  PointConfig b = random_points(15, 42);
  REQUIRE(a.points.size() == 15);
  CHECK(a.points == b.points);
  CHECK(random_points(15, 43).points != a.points);
  CHECK_NOTHROW(from_points(a));  // general position enforced by sampling
}

TEST_CASE("instances agree with their point sets") {
  Drawing d = random_convex_instance(10, 7);
  CHECK(d.label() == "R_10_s7");
  Drawing recompiled = from_points(random_points(10, 7));
  CHECK(d.crossings() == recompiled.crossings());
  CHECK(d.rotations() == recompiled.rotations());
  CHECK(is_convex_drawing(d).convex);
}
