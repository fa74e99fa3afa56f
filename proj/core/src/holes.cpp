#include "holescope/holes.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace holescope {

namespace {

// sorted k-subset iteration over 1..n; returns false when exhausted
bool first_subset(std::vector<VertexId>& s, int k, int n) {
  if (k > n) return false;
  s.resize(k);
  for (int i = 0; i < k; ++i) s[i] = i + 1;
  return true;
}

bool next_subset(std::vector<VertexId>& s, int n) {
  const int k = static_cast<int>(s.size());
  int i = k - 1;
  while (i >= 0 && s[i] == n - (k - 1 - i)) --i;
  if (i < 0) return false;
  ++s[i];
  for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  return true;
}

// same, over positions into an arbitrary sorted pool
bool first_pick(std::vector<int>& idx, int k, int pool) {
  if (k > pool) return false;
  idx.resize(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  return true;
}

bool next_pick(std::vector<int>& idx, int pool) {
  const int k = static_cast<int>(idx.size());
  int i = k - 1;
  while (i >= 0 && idx[i] == pool - (k - i)) --i;
  if (i < 0) return false;
  ++idx[i];
  for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

EmptySideTag tag_of(const SideClassification& cl) {
  const bool ea = cl.class_a.empty(), eb = cl.class_b.empty();
  if (ea && eb) return EmptySideTag::both;
  if (ea) return EmptySideTag::class_a;
  if (eb) return EmptySideTag::class_b;
  return EmptySideTag::none;
}

void check_cycle_vertices(const Drawing& d,
                          const std::vector<VertexId>& cycle) {
  if (cycle.size() < 3) throw std::invalid_argument("cycle too short");
  for (VertexId v : cycle)
    if (v < 1 || v > d.n()) throw std::invalid_argument("vertex out of range");
  std::vector<VertexId> s(cycle);
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw std::invalid_argument("repeated vertex in cycle");
}

std::vector<VertexId> sorted_copy(std::vector<VertexId> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

const char* to_string(EmptySideTag t) {
  switch (t) {
    case EmptySideTag::none: return "none";
    case EmptySideTag::class_a: return "class_a";
    case EmptySideTag::class_b: return "class_b";
    case EmptySideTag::both: return "both";
  }
  return "?";
}

// ── Cycles ──────────────────────────────────────────────────────────────

std::vector<VertexId> canonical_cycle(std::vector<VertexId> cycle) {
  const int k = static_cast<int>(cycle.size());
  if (k < 3) return cycle;
  const int at = static_cast<int>(
      std::min_element(cycle.begin(), cycle.end()) - cycle.begin());
  std::rotate(cycle.begin(), cycle.begin() + at, cycle.end());
  if (cycle[1] > cycle[k - 1])
    std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

bool is_plane_cycle(const Drawing& d, const std::vector<VertexId>& cycle) {
  check_cycle_vertices(d, cycle);
  const int k = static_cast<int>(cycle.size());
  for (int i = 0; i < k; ++i) {
    Edge e = make_edge(cycle[i], cycle[(i + 1) % k]);
    for (int j = i + 1; j < k; ++j)
      if (d.crosses_raw(e, make_edge(cycle[j], cycle[(j + 1) % k])))
        return false;
  }
  return true;
}

CycleWitness is_empty_cycle(const Drawing& d,
                            const std::vector<VertexId>& cycle) {
  CycleWitness w;
  w.cycle = cycle;
  w.plane = is_plane_cycle(d, cycle);
  if (!w.plane) return w;
  w.sides = classify_sides(d, cycle);
  w.empty_side_tag = tag_of(w.sides);
  w.empty = w.empty_side_tag != EmptySideTag::none;
  return w;
}

std::vector<CycleWitness> enumerate_empty_cycles(const Drawing& d, int k) {
  if (k < 3) throw std::invalid_argument("cycle length must be at least 3");
  std::vector<CycleWitness> out;
  std::vector<VertexId> s;
  if (!first_subset(s, k, d.n())) return out;
  do {
    // canonical arrangements: fix the smallest vertex first, orientation by
    // second < last
    std::vector<VertexId> rest(s.begin() + 1, s.end());
    std::vector<VertexId> cycle(k);
    cycle[0] = s[0];
    do {
      if (rest.front() > rest.back()) continue;
      std::copy(rest.begin(), rest.end(), cycle.begin() + 1);
      CycleWitness w = is_empty_cycle(d, cycle);
      if (w.plane && w.empty) out.push_back(std::move(w));
    } while (std::next_permutation(rest.begin(), rest.end()));
  } while (next_subset(s, d.n()));
  return out;
}

std::vector<TriangleRecord> empty_triangles(const Drawing& d) {
  std::vector<TriangleRecord> out;
  std::vector<VertexId> s;
  if (!first_subset(s, 3, d.n())) return out;
  do {
    SideClassification cl = classify_sides(d, s);
    EmptySideTag t = tag_of(cl);
    if (t != EmptySideTag::none)
      out.push_back({{s[0], s[1], s[2]}, t});
  } while (next_subset(s, d.n()));
  return out;
}

// ── Gons and holes ──────────────────────────────────────────────────────

std::optional<GonCertificate> is_k_gon(const Drawing& d,
                                       std::vector<VertexId> s) {
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw std::invalid_argument("repeated vertex");
  const int k = static_cast<int>(s.size());
  if (k < 3) throw std::invalid_argument("gon needs at least 3 vertices");
  for (VertexId v : s)
    if (v < 1 || v > d.n()) throw std::invalid_argument("vertex out of range");

  // edges uncrossed within the subset must form a Hamiltonian cycle
  std::vector<Edge> within;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) within.push_back({s[i], s[j]});
  auto crossed_within = [&](Edge e) {
    for (Edge f : within)
      if (!adjacent(e, f) && d.crosses_raw(e, f)) return true;
    return false;
  };
  std::map<VertexId, std::vector<VertexId>> adj;
  int uncrossed = 0;
  for (Edge e : within)
    if (!crossed_within(e)) {
      ++uncrossed;
      adj[e.a].push_back(e.b);
      adj[e.b].push_back(e.a);
    }
  if (uncrossed != k) return std::nullopt;
  for (VertexId v : s)
    if (adj[v].size() != 2) return std::nullopt;

  std::vector<VertexId> order{s[0]};
  VertexId prev = s[0], cur = adj[s[0]][0];
  while (cur != s[0]) {
    order.push_back(cur);
    VertexId nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = nxt;
  }
  if (static_cast<int>(order.size()) != k) return std::nullopt;  // two cycles

  // full pattern: independent pairs cross exactly when interleaved
  std::map<VertexId, int> pos;
  for (int i = 0; i < k; ++i) pos[order[i]] = i;
  auto between = [&](int lo, int hi, int x) {
    // strictly inside the cyclic arc lo -> hi
    int len = (hi - lo + k) % k, off = (x - lo + k) % k;
    return 0 < off && off < len;
  };
  for (Edge e : within)
    for (Edge f : within) {
      if (!(e < f) || adjacent(e, f)) continue;
      bool inter = between(pos[e.a], pos[e.b], pos[f.a]) !=
                   between(pos[e.a], pos[e.b], pos[f.b]);
      if (d.crosses_raw(e, f) != inter) return std::nullopt;
    }

  GonCertificate cert;
  cert.order = canonical_cycle(order);
  for (int i = 0; i < k; ++i)
    cert.boundary.push_back(
        make_edge(cert.order[i], cert.order[(i + 1) % k]));
  cert.diagonals_verified = true;
  return cert;
}

std::vector<VertexId> interior_vertices(const Drawing& d,
                                        const GonCertificate& g) {
  const int k = static_cast<int>(g.order.size());
  if (k == 3) throw std::invalid_argument("undefined for triangles");
  std::vector<VertexId> gon = sorted_copy(g.order);
  std::vector<VertexId> out;
  for (VertexId v = 1; v <= d.n(); ++v) {
    if (std::binary_search(gon.begin(), gon.end(), v)) continue;
    bool inside = false;
    std::vector<int> idx;
    first_pick(idx, 3, k);
    do {
      std::array<VertexId, 3> t{gon[idx[0]], gon[idx[1]], gon[idx[2]]};
      bool separated_from_all = true;
      for (VertexId w : gon) {
        if (w == t[0] || w == t[1] || w == t[2]) continue;
        if (!separated_by_triangle(d, t, v, w)) {
          separated_from_all = false;
          break;
        }
      }
      if (separated_from_all) {
        inside = true;
        break;
      }
    } while (next_pick(idx, k));
    if (inside) out.push_back(v);
  }
  return out;
}

bool interior_rotation_consistent(const Drawing& d, const GonCertificate& g,
                                  VertexId u) {
  if (!d.has_rotations())
    throw std::invalid_argument("rotations required");
  const int k = static_cast<int>(g.order.size());
  std::vector<VertexId> gon = sorted_copy(g.order);
  std::vector<VertexId> seen;
  for (VertexId x : d.rotation_of(u))
    if (std::binary_search(gon.begin(), gon.end(), x)) seen.push_back(x);
  if (static_cast<int>(seen.size()) != k) return false;
  const int at = static_cast<int>(
      std::find(seen.begin(), seen.end(), g.order[0]) - seen.begin());
  bool fwd = true, rev = true;
  for (int i = 0; i < k; ++i) {
    if (seen[(at + i) % k] != g.order[i]) fwd = false;
    if (seen[(at - i + k) % k] != g.order[i]) rev = false;
  }
  return fwd || rev;
}

std::vector<HoleRecord> enumerate_k_holes(const Drawing& d, int k) {
  if (k < 4 || k > d.n())
    throw std::invalid_argument("hole size out of range");
  std::vector<HoleRecord> out;
  std::vector<VertexId> s;
  first_subset(s, k, d.n());
  do {
    auto gon = is_k_gon(d, s);
    if (!gon) continue;
    if (interior_vertices(d, *gon).empty())
      out.push_back({std::move(*gon), {}});
  } while (next_subset(s, d.n()));
  return out;
}

std::optional<HoleRecord> first_k_hole(const Drawing& d, int k) {
  if (k < 4 || k > d.n())
    throw std::invalid_argument("hole size out of range");
  std::vector<VertexId> s;
  first_subset(s, k, d.n());
  do {
    auto gon = is_k_gon(d, s);
    if (!gon) continue;
    if (interior_vertices(d, *gon).empty()) return HoleRecord{*gon, {}};
  } while (next_subset(s, d.n()));
  return std::nullopt;
}

// ── Convexity ───────────────────────────────────────────────────────────

bool triangle_side_convex(const Drawing& d, const std::array<VertexId, 3>& t,
                          const std::vector<VertexId>& side_class) {
  std::vector<VertexId> cyc{t[0], t[1], t[2]};
  SideClassification cl = classify_sides(d, cyc);
  std::vector<VertexId> side = sorted_copy(side_class);
  if (side != cl.class_a && side != cl.class_b)
    throw std::invalid_argument("mismatched side class");
  const Edge te[3] = {make_edge(t[0], t[1]), make_edge(t[0], t[2]),
                      make_edge(t[1], t[2])};
  for (size_t i = 0; i < side.size(); ++i)
    for (size_t j = i + 1; j < side.size(); ++j) {
      Edge e = make_edge(side[i], side[j]);
      for (Edge f : te)
        if (d.crosses_raw(e, f)) return false;
    }
  for (VertexId u : side)
    for (int x = 0; x < 3; ++x) {
      Edge opp = make_edge(t[(x + 1) % 3], t[(x + 2) % 3]);
      if (d.crosses_raw(make_edge(u, t[x]), opp)) return false;
    }
  return true;
}

ConvexityVerdict is_convex_drawing(const Drawing& d) {
  std::vector<VertexId> s;
  if (!first_subset(s, 3, d.n())) return {true, std::nullopt};
  do {
    SideClassification cl = classify_sides(d, s);
    std::array<VertexId, 3> t{s[0], s[1], s[2]};
    if (!triangle_side_convex(d, t, cl.class_a) &&
        !triangle_side_convex(d, t, cl.class_b))
      return {false, t};
  } while (next_subset(s, d.n()));
  return {true, std::nullopt};
}

// ── Generalized holes ───────────────────────────────────────────────────

namespace {

struct ChordFrame {
  VertexId u;         // chord endpoint the wedge test runs at
  VertexId opposite;  // the other chord endpoint
  VertexId prev, next;  // cycle neighbors of u
  Edge far1, far2;      // the two cycle edges not incident to u
};

ChordFrame chord_frame(const std::vector<VertexId>& cycle, Edge chord) {
  if (cycle.size() != 4) throw std::invalid_argument("cycle of length 4 expected");
  for (int i = 0; i < 4; ++i) {
    VertexId u = cycle[i], opp = cycle[(i + 2) % 4];
    if (make_edge(u, opp) == chord && u == chord.a) {
      VertexId p = cycle[(i + 3) % 4], nx = cycle[(i + 1) % 4];
      return {u, opp, p, nx, make_edge(nx, opp), make_edge(opp, p)};
    }
  }
  throw std::invalid_argument("chord is not a diagonal of the cycle");
}

}  // namespace

bool chord_in_empty_side(const Drawing& d, const std::vector<VertexId>& cycle,
                         Edge chord) {
  if (!d.has_rotations()) throw std::invalid_argument("rotations required");
  CycleWitness w = is_empty_cycle(d, cycle);
  if (!w.plane) throw std::invalid_argument("cycle not plane");
  if (!w.empty) throw std::invalid_argument("cycle not empty");
  ChordFrame fr = chord_frame(cycle, chord);
  if (d.n() == 4) return w.empty_side_tag == EmptySideTag::both;

  VertexId wit = 0;
  for (VertexId v = 1; v <= d.n() && wit == 0; ++v)
    if (std::find(cycle.begin(), cycle.end(), v) == cycle.end()) wit = v;

  const Rotation& rot = d.rotation_of(fr.u);
  const int m = static_cast<int>(rot.size());
  auto posof = [&](VertexId x) {
    return static_cast<int>(std::find(rot.begin(), rot.end(), x) -
                            rot.begin());
  };
  const int pp = posof(fr.prev), pn = posof(fr.next);
  const int len = (pn - pp + m) % m;
  auto in_arc_a = [&](VertexId z) {
    int off = (posof(z) - pp + m) % m;
    return 0 < off && off < len;
  };
  Edge ew = make_edge(fr.u, wit);
  const bool odd = d.crosses_raw(ew, fr.far1) != d.crosses_raw(ew, fr.far2);
  // the wedge holding {u,wit} is the empty-side wedge exactly when the edge
  // crosses the far cycle edges an odd number of times
  const bool empty_is_a = odd ? in_arc_a(wit) : !in_arc_a(wit);
  return in_arc_a(fr.opposite) == empty_is_a;
}

bool chord_splits_empty_side(const Drawing& d,
                             const std::vector<VertexId>& cycle, Edge chord) {
  ChordFrame fr = chord_frame(cycle, chord);
  // chord {u,opposite}: both cut-off triangles need a vertex-free side away
  // from the remaining cycle vertex
  const std::array<VertexId, 3> t1{fr.u, fr.prev, fr.opposite};
  const std::array<VertexId, 3> t2{fr.u, fr.next, fr.opposite};
  for (VertexId v = 1; v <= d.n(); ++v) {
    if (std::find(cycle.begin(), cycle.end(), v) != cycle.end()) continue;
    if (separated_by_triangle(d, t1, v, fr.next)) return false;
    if (separated_by_triangle(d, t2, v, fr.prev)) return false;
  }
  return true;
}

bool is_empty_4_triangulation(const Drawing& d,
                              const std::vector<VertexId>& cycle) {
  if (cycle.size() != 4)
    throw std::invalid_argument("cycle of length 4 expected");
  CycleWitness w = is_empty_cycle(d, cycle);
  if (!w.plane || !w.empty) return false;
  const Edge c1 = make_edge(cycle[0], cycle[2]);
  const Edge c2 = make_edge(cycle[1], cycle[3]);
  if (d.has_rotations())
    return chord_in_empty_side(d, cycle, c1) ||
           chord_in_empty_side(d, cycle, c2);
  return chord_splits_empty_side(d, cycle, c1) ||
         chord_splits_empty_side(d, cycle, c2);
}

std::vector<Mono4Witness> monochromatic_4_triangulations(const Drawing& d,
                                                         const Coloring& c) {
  if (static_cast<int>(c.color.size()) != d.n())
    throw std::invalid_argument("coloring size mismatch");
  std::vector<Mono4Witness> out;
  std::vector<VertexId> s;
  if (!first_subset(s, 4, d.n())) return out;
  do {
    const int col = c.of(s[0]);
    if (c.of(s[1]) != col || c.of(s[2]) != col || c.of(s[3]) != col) continue;
    const std::vector<std::vector<VertexId>> arrangements{
        {s[0], s[1], s[2], s[3]},
        {s[0], s[1], s[3], s[2]},
        {s[0], s[2], s[1], s[3]}};
    for (const auto& cyc : arrangements)
      if (is_empty_4_triangulation(d, cyc)) out.push_back({cyc, col});
  } while (next_subset(s, d.n()));
  return out;
}

// ── Minimal gons ────────────────────────────────────────────────────────

std::optional<GonCertificate> minimal_k_gon(const Drawing& d, int k) {
  if (k < 4) throw std::invalid_argument("gon size must be at least 4");
  ConvexityVerdict cv = is_convex_drawing(d);
  if (!cv.convex) throw std::invalid_argument("requires convex drawing");
  if (k > d.n()) return std::nullopt;

  std::optional<GonCertificate> g;
  std::vector<VertexId> s;
  first_subset(s, k, d.n());
  do {
    if ((g = is_k_gon(d, s))) break;
  } while (next_subset(s, d.n()));
  if (!g) return std::nullopt;

  std::vector<VertexId> interior = interior_vertices(d, *g);
  for (;;) {
    std::vector<VertexId> gon = sorted_copy(g->order);
    std::vector<VertexId> closed = gon;
    closed.insert(closed.end(), interior.begin(), interior.end());
    std::sort(closed.begin(), closed.end());

    std::optional<GonCertificate> better;
    std::vector<int> idx;
    first_pick(idx, k, static_cast<int>(closed.size()));
    do {
      std::vector<VertexId> cand(k);
      for (int i = 0; i < k; ++i) cand[i] = closed[idx[i]];
      if (cand == gon) continue;
      if ((better = is_k_gon(d, cand))) break;
    } while (next_pick(idx, static_cast<int>(closed.size())));
    if (!better) return g;

    std::vector<VertexId> next_interior = interior_vertices(d, *better);
    if (next_interior.size() >= interior.size())
      throw std::runtime_error("minimal-gon descent did not progress");
    g = std::move(better);
    interior = std::move(next_interior);
  }
}

std::vector<SideConvexityViolation> check_inner_side_convexity(
    const Drawing& d, const GonCertificate& g) {
  const int k = static_cast<int>(g.order.size());
  if (k < 5) throw std::invalid_argument("requires a gon of size at least 5");
  if (!is_convex_drawing(d).convex)
    throw std::invalid_argument("requires convex drawing");

  std::vector<VertexId> gon = sorted_copy(g.order);
  std::vector<VertexId> closed = gon;
  {
    std::vector<VertexId> interior = interior_vertices(d, g);
    closed.insert(closed.end(), interior.begin(), interior.end());
    std::sort(closed.begin(), closed.end());
  }

  std::vector<SideConvexityViolation> out;
  std::vector<int> idx;
  first_pick(idx, 3, static_cast<int>(closed.size()));
  do {
    const std::array<VertexId, 3> t{closed[idx[0]], closed[idx[1]],
                                    closed[idx[2]]};
    SideClassification cl =
        classify_sides(d, {t[0], t[1], t[2]});
    auto contains_gon_vertex = [&](const std::vector<VertexId>& cls) {
      for (VertexId v : cls)
        if (std::binary_search(gon.begin(), gon.end(), v)) return true;
      return false;
    };
    const bool in_a = contains_gon_vertex(cl.class_a);
    const bool in_b = contains_gon_vertex(cl.class_b);
    if (in_a && in_b) {
      out.push_back({t, "outside gon vertices split across sides"});
      continue;
    }
    // the side away from the gon vertices is the one Lemma-style convexity
    // must hold on
    const std::vector<VertexId>& inner = in_a ? cl.class_b : cl.class_a;
    if (!triangle_side_convex(d, t, inner))
      out.push_back({t, "inner side not convex"});
  } while (next_pick(idx, static_cast<int>(closed.size())));
  return out;
}

HoleRecord chord_4hole_for_edge(const Drawing& d, Edge e) {
  e = make_edge(e.a, e.b);
  if (e.b > d.n()) throw std::invalid_argument("vertex out of range");
  if (d.crossing_degree(e) == 0) throw std::invalid_argument("uncrossed edge");
  for (Edge f : d.edges_crossing(e)) {
    auto gon = is_k_gon(d, {e.a, e.b, f.a, f.b});
    if (!gon) continue;
    if (interior_vertices(d, *gon).empty()) return {std::move(*gon), {}};
  }
  throw std::runtime_error("no 4-hole found on a crossed edge");
}

}  // namespace holescope
