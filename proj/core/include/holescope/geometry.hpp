#pragma once
// Integer point sets in general position and their compilation to Drawings
// (crossings from exact segment intersection, rotations from counterclockwise
// angular order). All predicates use exact 64-bit arithmetic; coordinates are
// bounded so that no intermediate value can overflow.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "holescope/drawing.hpp"

namespace holescope {

struct Point {
  long long x{}, y{};
  auto operator<=>(const Point&) const = default;
};

/// Largest coordinate magnitude accepted anywhere in this module.
inline constexpr long long kMaxCoord = 1'000'000;

struct PointConfig {
  std::vector<Point> points;
};

/// Sign of the orientation determinant of (p, q, r): +1 counterclockwise,
/// -1 clockwise, 0 collinear. Throws std::overflow_error if an intermediate
/// product would overflow (impossible within kMaxCoord, checked anyway).
int orient(Point p, Point q, Point r);

/// True iff open segments pq and rs cross properly. Pre: all four points
/// distinct, no three collinear.
bool segments_cross(Point p, Point q, Point r, Point s);

/// Parse "x y" integer pairs, one per line; '#' starts a comment, blank lines
/// ignored. Throws std::invalid_argument on malformed lines or coordinates
/// exceeding kMaxCoord.
PointConfig parse_points(std::istream& in);
PointConfig parse_points_text(const std::string& text);

/// 64-bit FNV-1a hash of the coordinate sequence; stable across runs.
std::uint64_t points_hash(const PointConfig& p);

/// Compile a point set to a Drawing: crossings from proper segment
/// intersections, rotations in counterclockwise angular order, label
/// "points:<hash>". Throws on fewer than 3 points, duplicate points
/// ("duplicate point"), or collinear triples ("not in general position").
Drawing from_points(const PointConfig& p);

/// Deterministic general-position point set: n points sampled from the seed
/// by rejection (duplicates and collinear triples are re-drawn).
PointConfig random_points(int n, std::uint64_t seed);

/// from_points over random_points, labeled "R_<n>_s<seed>". Geometric, hence
/// convex. Identical (n, seed) yields an identical Drawing.
Drawing random_convex_instance(int n, std::uint64_t seed);

}  // namespace holescope
