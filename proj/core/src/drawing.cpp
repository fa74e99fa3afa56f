#include "holescope/drawing.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

namespace holescope {

namespace {

constexpr int kMaxVertices = 128;  // keeps the edge-pair bitmatrix small

std::string edge_str(Edge e) {
  std::ostringstream os;
  os << '{' << e.a << ',' << e.b << '}';
  return os.str();
}

std::string pair_str(const CrossingPair& p) {
  return "(" + edge_str(p.e) + "," + edge_str(p.f) + ")";
}

void check_vertex_range(VertexId v, int n, const char* what) {
  if (v < 1 || v > n)
    throw std::invalid_argument(std::string(what) + ": vertex out of range");
}

}  // namespace

Edge make_edge(VertexId u, VertexId v) {
  if (u == v) throw std::invalid_argument("degenerate edge");
  return u < v ? Edge{u, v} : Edge{v, u};
}

CrossingPair make_crossing_pair(Edge e, Edge f) {
  return e < f ? CrossingPair{e, f} : CrossingPair{f, e};
}

// ── Drawing ─────────────────────────────────────────────────────────────

Drawing::Drawing(int n, std::vector<CrossingPair> crossings,
                 std::optional<RotationSystem> rotations, std::string label)
    : n_(n), label_(std::move(label)) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (n > kMaxVertices) throw std::invalid_argument("n too large");

  for (auto& p : crossings) {
    check_vertex_range(p.e.a, n, "crossing");
    check_vertex_range(p.e.b, n, "crossing");
    check_vertex_range(p.f.a, n, "crossing");
    check_vertex_range(p.f.b, n, "crossing");
    p = make_crossing_pair(make_edge(p.e.a, p.e.b), make_edge(p.f.a, p.f.b));
  }
  std::sort(crossings.begin(), crossings.end());
  crossings.erase(std::unique(crossings.begin(), crossings.end()),
                  crossings.end());
  crossings_ = std::move(crossings);

  if (rotations) {
    if (static_cast<int>(rotations->size()) != n)
      throw std::invalid_argument("malformed rotation system: wrong count");
    for (auto& rot : *rotations) {
      if (static_cast<int>(rot.size()) != n - 1)
        throw std::invalid_argument("malformed rotation system: wrong length");
      for (VertexId v : rot) check_vertex_range(v, n, "rotation");
      // canonical start: smallest entry first, direction preserved
      auto it = std::min_element(rot.begin(), rot.end());
      std::rotate(rot.begin(), it, rot.end());
    }
    rotations_ = std::move(*rotations);
  }

  const int e_cnt = edge_count();
  words_per_edge_ = (e_cnt + 63) / 64;
  bits_.assign(static_cast<std::size_t>(e_cnt) * words_per_edge_, 0);
  degree_.assign(e_cnt, 0);
  for (const auto& p : crossings_) {
    if (adjacent(p.e, p.f)) continue;  // invalid pair, reported by validate()
    int i = edge_index(p.e), j = edge_index(p.f);
    bits_[static_cast<std::size_t>(i) * words_per_edge_ + j / 64] |=
        std::uint64_t{1} << (j % 64);
    bits_[static_cast<std::size_t>(j) * words_per_edge_ + i / 64] |=
        std::uint64_t{1} << (i % 64);
    ++degree_[i];
    ++degree_[j];
  }
}

int Drawing::edge_index(Edge e) const {
  return (e.a - 1) * (2 * n_ - e.a) / 2 + (e.b - e.a - 1);
}

bool Drawing::crosses_raw(Edge e, Edge f) const {
  if (adjacent(e, f)) return false;
  int i = edge_index(e), j = edge_index(f);
  return (bits_[static_cast<std::size_t>(i) * words_per_edge_ + j / 64] >>
          (j % 64)) &
         1;
}

int Drawing::crossing_degree(Edge e) const { return degree_[edge_index(e)]; }

std::vector<Edge> Drawing::edges_crossing(Edge e) const {
  std::vector<Edge> out;
  out.reserve(degree_[edge_index(e)]);
  for (VertexId a = 1; a <= n_; ++a)
    for (VertexId b = a + 1; b <= n_; ++b) {
      Edge f{a, b};
      if (!adjacent(e, f) && crosses_raw(e, f)) out.push_back(f);
    }
  return out;
}

Drawing Drawing::with_label(std::string label) const {
  Drawing d = *this;
  d.label_ = std::move(label);
  return d;
}

// ── validate ────────────────────────────────────────────────────────────

std::vector<std::string> validate(const Drawing& d) {
  std::vector<std::string> out;
  for (const auto& p : d.crossings())
    if (adjacent(p.e, p.f))
      out.push_back("adjacent edges cross: " + pair_str(p));

  const int n = d.n();
  for (VertexId a = 1; a <= n; ++a)
    for (VertexId b = a + 1; b <= n; ++b)
      for (VertexId c = b + 1; c <= n; ++c)
        for (VertexId dd = c + 1; dd <= n; ++dd) {
          int cnt = d.crosses_raw({a, b}, {c, dd}) +
                    d.crosses_raw({a, c}, {b, dd}) +
                    d.crosses_raw({a, dd}, {b, c});
          if (cnt > 1) {
            std::ostringstream os;
            os << "K_4 rule violated on {" << a << ',' << b << ',' << c << ','
               << dd << "}: " << cnt << " crossing pairs";
            out.push_back(os.str());
          }
        }

  if (d.has_rotations()) {
    for (VertexId v = 1; v <= n; ++v) {
      std::set<VertexId> seen(d.rotation_of(v).begin(), d.rotation_of(v).end());
      bool ok = static_cast<int>(seen.size()) == n - 1 && !seen.count(v);
      if (!ok) {
        std::ostringstream os;
        os << "rotation of vertex " << v
           << " is not a permutation of the other vertices";
        out.push_back(os.str());
      }
    }
  }
  return out;
}

bool crosses(const Drawing& d, Edge e, Edge f) {
  check_vertex_range(e.a, d.n(), "crosses");
  check_vertex_range(e.b, d.n(), "crosses");
  check_vertex_range(f.a, d.n(), "crosses");
  check_vertex_range(f.b, d.n(), "crosses");
  Edge ce = make_edge(e.a, e.b), cf = make_edge(f.a, f.b);
  if (adjacent(ce, cf)) throw std::invalid_argument("not independent");
  return d.crosses_raw(ce, cf);
}

bool separated_by_triangle(const Drawing& d, const std::array<VertexId, 3>& t,
                           VertexId v, VertexId w) {
  for (VertexId x : t) check_vertex_range(x, d.n(), "separated_by_triangle");
  if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2])
    throw std::invalid_argument("degenerate triangle");
  check_vertex_range(v, d.n(), "separated_by_triangle");
  check_vertex_range(w, d.n(), "separated_by_triangle");
  if (v == w) throw std::invalid_argument("identical vertices");
  for (VertexId x : t)
    if (v == x || w == x) throw std::invalid_argument("vertex on triangle");
  Edge vw = make_edge(v, w);
  int parity = d.crosses_raw(vw, make_edge(t[0], t[1])) +
               d.crosses_raw(vw, make_edge(t[1], t[2])) +
               d.crosses_raw(vw, make_edge(t[0], t[2]));
  return parity % 2 == 1;
}

// ── classify_sides ──────────────────────────────────────────────────────

namespace {

std::vector<Edge> cycle_edges_checked(const Drawing& d,
                                      const std::vector<VertexId>& cycle) {
  const int k = static_cast<int>(cycle.size());
  if (k < 3) throw std::invalid_argument("cycle too short");
  std::set<VertexId> seen;
  for (VertexId v : cycle) {
    check_vertex_range(v, d.n(), "cycle");
    if (!seen.insert(v).second)
      throw std::invalid_argument("repeated vertex in cycle");
  }
  std::vector<Edge> edges;
  edges.reserve(k);
  for (int i = 0; i < k; ++i)
    edges.push_back(make_edge(cycle[i], cycle[(i + 1) % k]));
  return edges;
}

bool edges_pairwise_noncrossing(const Drawing& d,
                                const std::vector<Edge>& edges) {
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (!adjacent(edges[i], edges[j]) && d.crosses_raw(edges[i], edges[j]))
        return false;
  return true;
}

}  // namespace

SideClassification classify_sides(const Drawing& d,
                                  const std::vector<VertexId>& cycle) {
  auto edges = cycle_edges_checked(d, cycle);
  if (!edges_pairwise_noncrossing(d, edges))
    throw std::invalid_argument("cycle not plane");

  std::vector<VertexId> rest;
  std::vector<char> on_cycle(d.n() + 1, 0);
  for (VertexId v : cycle) on_cycle[v] = 1;
  for (VertexId v = 1; v <= d.n(); ++v)
    if (!on_cycle[v]) rest.push_back(v);

  SideClassification out;
  out.cycle = cycle;
  if (rest.empty()) return out;  // Hamiltonian: both classes empty

  auto parity = [&](VertexId u, VertexId w) {
    Edge uw = make_edge(u, w);
    int c = 0;
    for (const Edge& e : edges) c += d.crosses_raw(uw, e);
    return c % 2;
  };

  VertexId ref = rest.front();
  std::vector<int> side(d.n() + 1, -1);
  side[ref] = 0;
  for (std::size_t i = 1; i < rest.size(); ++i)
    side[rest[i]] = parity(ref, rest[i]);
  // the parity relation must be transitive, otherwise the crossing data does
  // not describe a simple drawing
  for (std::size_t i = 0; i < rest.size(); ++i)
    for (std::size_t j = i + 1; j < rest.size(); ++j)
      if (parity(rest[i], rest[j]) != (side[rest[i]] ^ side[rest[j]]))
        throw std::invalid_argument("invalid drawing data");

  for (VertexId v : rest)
    (side[v] == 0 ? out.class_a : out.class_b).push_back(v);
  return out;
}

// ── induced_subdrawing ──────────────────────────────────────────────────

Drawing induced_subdrawing(const Drawing& d, std::vector<VertexId> s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (s.empty()) throw std::invalid_argument("empty vertex subset");
  for (VertexId v : s) check_vertex_range(v, d.n(), "induced_subdrawing");

  std::vector<int> relabel(d.n() + 1, 0);
  for (std::size_t i = 0; i < s.size(); ++i)
    relabel[s[i]] = static_cast<int>(i) + 1;

  std::vector<CrossingPair> kept;
  for (const auto& p : d.crossings()) {
    if (relabel[p.e.a] && relabel[p.e.b] && relabel[p.f.a] && relabel[p.f.b])
      kept.push_back(make_crossing_pair(
          make_edge(relabel[p.e.a], relabel[p.e.b]),
          make_edge(relabel[p.f.a], relabel[p.f.b])));
  }

  std::optional<RotationSystem> rot;
  if (d.has_rotations()) {
    RotationSystem rs;
    rs.reserve(s.size());
    for (VertexId v : s) {
      Rotation r;
      for (VertexId w : d.rotation_of(v))
        if (relabel[w]) r.push_back(relabel[w]);
      rs.push_back(std::move(r));
    }
    rot = std::move(rs);
  }
  return Drawing(static_cast<int>(s.size()), std::move(kept), std::move(rot),
                 d.label());
}

// ── K_4 catalog ─────────────────────────────────────────────────────────

namespace {

long long orient(const std::array<long long, 2>& p,
                 const std::array<long long, 2>& q,
                 const std::array<long long, 2>& r) {
  return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]);
}

bool proper_cross(const std::array<long long, 2>& a,
                  const std::array<long long, 2>& b,
                  const std::array<long long, 2>& c,
                  const std::array<long long, 2>& d) {
  long long o1 = orient(a, b, c), o2 = orient(a, b, d);
  long long o3 = orient(c, d, a), o4 = orient(c, d, b);
  return ((o1 > 0) != (o2 > 0)) && ((o3 > 0) != (o4 > 0)) && o1 != 0 &&
         o2 != 0 && o3 != 0 && o4 != 0;
}

// orientation sign of one vertex: does p see (u,v,w) in counter-clockwise
// cyclic order? (u,v,w are the other three points, sorted by label)
bool ccw_sign(const std::array<long long, 2>& p,
              const std::array<long long, 2>& u,
              const std::array<long long, 2>& v,
              const std::array<long long, 2>& w) {
  int pos = (orient(p, u, v) > 0) + (orient(p, v, w) > 0) +
            (orient(p, w, u) > 0);
  return pos >= 2;
}

// catalog[mask] = crossing status for that sign vector, or -2 if no labeled
// general-position 4-point configuration realizes it
struct K4Catalog {
  std::array<int, 16> status{};
  K4Catalog() {
    status.fill(-2);
    std::vector<std::array<long long, 2>> grid;
    for (long long x = 0; x < 4; ++x)
      for (long long y = 0; y < 4; ++y) grid.push_back({x, y});
    const int m = static_cast<int>(grid.size());
    std::array<int, 4> idx{};
    for (idx[0] = 0; idx[0] < m; ++idx[0])
      for (idx[1] = 0; idx[1] < m; ++idx[1])
        for (idx[2] = 0; idx[2] < m; ++idx[2])
          for (idx[3] = 0; idx[3] < m; ++idx[3]) {
            if (idx[0] == idx[1] || idx[0] == idx[2] || idx[0] == idx[3] ||
                idx[1] == idx[2] || idx[1] == idx[3] || idx[2] == idx[3])
              continue;
            std::array<std::array<long long, 2>, 4> p;
            for (int i = 0; i < 4; ++i) p[i] = grid[idx[i]];
            bool degenerate = false;
            for (int i = 0; i < 4 && !degenerate; ++i)
              for (int j = i + 1; j < 4 && !degenerate; ++j)
                for (int k = j + 1; k < 4; ++k)
                  if (orient(p[i], p[j], p[k]) == 0) {
                    degenerate = true;
                    break;
                  }
            if (degenerate) continue;

            unsigned mask = 0;
            if (ccw_sign(p[0], p[1], p[2], p[3])) mask |= 1u;
            if (ccw_sign(p[1], p[0], p[2], p[3])) mask |= 2u;
            if (ccw_sign(p[2], p[0], p[1], p[3])) mask |= 4u;
            if (ccw_sign(p[3], p[0], p[1], p[2])) mask |= 8u;

            int cross = -1, cnt = 0;
            if (proper_cross(p[0], p[1], p[2], p[3])) cross = 0, ++cnt;
            if (proper_cross(p[0], p[2], p[1], p[3])) cross = 1, ++cnt;
            if (proper_cross(p[0], p[3], p[1], p[2])) cross = 2, ++cnt;
            if (cnt > 1) std::abort();  // a K_4 never has two crossings

            if (status[mask] == -2)
              status[mask] = cross;
            else if (status[mask] != cross)
              std::abort();  // rotation system must determine the crossing
          }
  }
};

const K4Catalog& catalog() {
  static const K4Catalog c;
  return c;
}

// appearance order of {b,c,d} within the rotation of a; true iff it is an
// ascending cyclic shift of (b,c,d)
bool rotation_sign(const Rotation& rot, VertexId b, VertexId c, VertexId d) {
  std::array<VertexId, 3> ord{};
  int k = 0;
  for (VertexId v : rot)
    if (v == b || v == c || v == d) {
      if (k == 3) return false;  // malformed rotation, caught elsewhere
      ord[k++] = v;
    }
  if (k != 3) return false;
  return (ord[0] == b && ord[1] == c && ord[2] == d) ||
         (ord[0] == c && ord[1] == d && ord[2] == b) ||
         (ord[0] == d && ord[1] == b && ord[2] == c);
}

}  // namespace

int k4_crossing_index(const Drawing& d, const std::array<VertexId, 4>& quad) {
  auto [a, b, c, e] = quad;
  int cross = -1, cnt = 0;
  if (d.crosses_raw({a, b}, {c, e})) cross = 0, ++cnt;
  if (d.crosses_raw({a, c}, {b, e})) cross = 1, ++cnt;
  if (d.crosses_raw({a, e}, {b, c})) cross = 2, ++cnt;
  return cnt > 1 ? -2 : cross;
}

std::optional<int> k4_status_from_signs(unsigned mask) {
  int s = catalog().status[mask & 15u];
  if (s == -2) return std::nullopt;
  return s;
}

std::vector<std::string> rotation_consistency_violations(const Drawing& d) {
  std::vector<std::string> out;
  if (!d.has_rotations()) return out;
  const int n = d.n();
  for (VertexId a = 1; a <= n; ++a)
    for (VertexId b = a + 1; b <= n; ++b)
      for (VertexId c = b + 1; c <= n; ++c)
        for (VertexId e = c + 1; e <= n; ++e) {
          unsigned mask = 0;
          if (rotation_sign(d.rotation_of(a), b, c, e)) mask |= 1u;
          if (rotation_sign(d.rotation_of(b), a, c, e)) mask |= 2u;
          if (rotation_sign(d.rotation_of(c), a, b, e)) mask |= 4u;
          if (rotation_sign(d.rotation_of(e), a, b, c)) mask |= 8u;
          std::ostringstream quad;
          quad << '{' << a << ',' << b << ',' << c << ',' << e << '}';
          auto expect = k4_status_from_signs(mask);
          if (!expect) {
            out.push_back("rotation system not realizable on " + quad.str());
            continue;
          }
          int actual = k4_crossing_index(d, {a, b, c, e});
          if (actual != *expect)
            out.push_back("rotations disagree with crossings on " + quad.str());
        }
  return out;
}

}  // namespace holescope
