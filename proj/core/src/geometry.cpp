#include "holescope/geometry.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace holescope {

namespace {

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("coordinate product overflow");
  return r;
}

int sign(long long v) { return (v > 0) - (v < 0); }

void check_bounds(Point p) {
  if (std::llabs(p.x) > kMaxCoord || std::llabs(p.y) > kMaxCoord)
    throw std::invalid_argument("coordinate exceeds bound");
}

// splitmix64: tiny, portable, identical output on every platform
struct Rng {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  long long coord() {
    // uniform in [-kMaxCoord, kMaxCoord] via rejection
    const std::uint64_t span = 2 * kMaxCoord + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do v = next();
    while (v >= limit);
    return static_cast<long long>(v % span) - kMaxCoord;
  }
};

}  // namespace

int orient(Point p, Point q, Point r) {
  check_bounds(p);
  check_bounds(q);
  check_bounds(r);
  long long d = checked_mul(q.x - p.x, r.y - p.y) -
                checked_mul(q.y - p.y, r.x - p.x);
  return sign(d);
}

bool segments_cross(Point p, Point q, Point r, Point s) {
  int o1 = orient(p, q, r), o2 = orient(p, q, s);
  int o3 = orient(r, s, p), o4 = orient(r, s, q);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

PointConfig parse_points(std::istream& in) {
  PointConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    long long x, y;
    if (!(ls >> x)) {
      std::string rest;
      if (ls.clear(), ls >> rest)
        throw std::invalid_argument("bad point line " + std::to_string(lineno));
      continue;  // blank / comment-only line
    }
    std::string trailing;
    if (!(ls >> y) || (ls >> trailing))
      throw std::invalid_argument("bad point line " + std::to_string(lineno));
    Point p{x, y};
    check_bounds(p);
    cfg.points.push_back(p);
  }
  return cfg;
}

PointConfig parse_points_text(const std::string& text) {
  std::istringstream in(text);
  return parse_points(in);
}

std::uint64_t points_hash(const PointConfig& p) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](long long v) {
    for (int i = 0; i < 8; ++i) {
      h ^= static_cast<std::uint64_t>(v >> (8 * i)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  for (const Point& q : p.points) {
    mix(q.x);
    mix(q.y);
  }
  return h;
}

Drawing from_points(const PointConfig& p) {
  const int n = static_cast<int>(p.points.size());
  if (n < 3) throw std::invalid_argument("need at least 3 points");
  const auto& pts = p.points;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (pts[i] == pts[j]) throw std::invalid_argument("duplicate point");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (orient(pts[i], pts[j], pts[k]) == 0)
          throw std::invalid_argument("not in general position");

  std::vector<CrossingPair> cs;
  for (VertexId a = 1; a <= n; ++a)
    for (VertexId b = a + 1; b <= n; ++b)
      for (VertexId c = a; c <= n; ++c)
        for (VertexId d = c + 1; d <= n; ++d) {
          Edge e{a, b}, f{c, d};
          if (!(e < f) || adjacent(e, f)) continue;
          if (segments_cross(pts[a - 1], pts[b - 1], pts[c - 1], pts[d - 1]))
            cs.push_back({e, f});
        }

  RotationSystem rot(n);
  for (VertexId v = 1; v <= n; ++v) {
    Point c = pts[v - 1];
    Rotation& r = rot[v - 1];
    for (VertexId w = 1; w <= n; ++w)
      if (w != v) r.push_back(w);
    // counterclockwise from the positive x direction: split into the upper
    // half-plane [0,pi) and the lower [pi,2pi), then order by orientation
    auto half = [&](VertexId w) {
      Point q = pts[w - 1];
      if (q.y != c.y) return q.y > c.y ? 0 : 1;
      return q.x > c.x ? 0 : 1;
    };
    std::sort(r.begin(), r.end(), [&](VertexId u, VertexId w) {
      int hu = half(u), hw = half(w);
      if (hu != hw) return hu < hw;
      return orient(c, pts[u - 1], pts[w - 1]) > 0;
    });
  }

  std::ostringstream label;
  label << "points:" << std::hex << points_hash(p);
  return Drawing(n, std::move(cs), std::move(rot), label.str());
}

PointConfig random_points(int n, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("need at least 3 points");
  Rng rng{seed};
  PointConfig cfg;
  while (static_cast<int>(cfg.points.size()) < n) {
    Point cand{rng.coord(), rng.coord()};
    bool ok = true;
    for (const Point& q : cfg.points)
      if (q == cand) ok = false;
    const int m = static_cast<int>(cfg.points.size());
    for (int i = 0; ok && i < m; ++i)
      for (int j = i + 1; ok && j < m; ++j)
        if (orient(cfg.points[i], cfg.points[j], cand) == 0) ok = false;
    if (ok) cfg.points.push_back(cand);
  }
  return cfg;
}

Drawing random_convex_instance(int n, std::uint64_t seed) {
  Drawing d = from_points(random_points(n, seed));
  std::ostringstream label;
  label << "R_" << n << "_s" << seed;
  return d.with_label(label.str());
}

}  // namespace holescope
