#include "holescope/generators.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace holescope {

namespace {

long long binom4(long long n) {
  return n < 4 ? 0 : n * (n - 1) * (n - 2) * (n - 3) / 24;
}

std::string numbered(const char* stem, int k) {
  std::ostringstream os;
  os << stem << k;
  return os.str();
}

}  // namespace

// ── convex ──────────────────────────────────────────────────────────────

Drawing convex_gon(int k) {
  if (k < 3) throw std::invalid_argument("convex_gon requires k >= 3");
  std::vector<CrossingPair> cs;
  cs.reserve(binom4(k));
  for (VertexId a = 1; a <= k; ++a)
    for (VertexId b = a + 1; b <= k; ++b)
      for (VertexId c = b + 1; c <= k; ++c)
        for (VertexId d = c + 1; d <= k; ++d)
          cs.push_back({{a, c}, {b, d}});
  RotationSystem rot(k);
  for (VertexId v = 1; v <= k; ++v) {
    for (int s = 1; s < k; ++s) rot[v - 1].push_back((v - 1 + s) % k + 1);
  }
  return Drawing(k, std::move(cs), std::move(rot), numbered("C_", k));
}

// ── twisted ─────────────────────────────────────────────────────────────

Drawing twisted(int k) {
  if (k < 3) throw std::invalid_argument("twisted requires k >= 3");
  std::vector<CrossingPair> cs;
  cs.reserve(binom4(k));
  for (VertexId a = 1; a <= k; ++a)
    for (VertexId b = a + 1; b <= k; ++b)
      for (VertexId c = b + 1; c <= k; ++c)
        for (VertexId d = c + 1; d <= k; ++d)
          cs.push_back({{a, d}, {b, c}});
  RotationSystem rot(k);
  for (VertexId v = 1; v <= k; ++v) {
    for (VertexId w = v + 1; w <= k; ++w) rot[v - 1].push_back(w);
    for (VertexId w = v - 1; w >= 1; --w) rot[v - 1].push_back(w);
  }
  Drawing d(k, cs, std::move(rot), numbered("T_", k));
  if (!rotation_consistency_violations(d).empty())
    d = Drawing(k, std::move(cs), std::nullopt, numbered("T_", k));
  return d;
}

// ── twisted_prime ───────────────────────────────────────────────────────

Drawing twisted_prime(int k) {
  if (k < 6) throw std::invalid_argument("twisted_prime requires k >= 6");
  std::vector<CrossingPair> cs;
  cs.reserve(binom4(k));

  // twisted drawing induced on [k] \ {2}
  std::vector<VertexId> rest;
  for (VertexId v = 1; v <= k; ++v)
    if (v != 2) rest.push_back(v);
  const int m = static_cast<int>(rest.size());
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      for (int c = b + 1; c < m; ++c)
        for (int d = c + 1; d < m; ++d)
          cs.push_back(make_crossing_pair({rest[a], rest[d]},
                                          {rest[b], rest[c]}));

  // rerouted edges at vertex 2
  cs.push_back(make_crossing_pair({1, 2}, {3, k}));
  cs.push_back(make_crossing_pair({1, 2}, {3, 4}));
  for (VertexId i = 5; i <= k; ++i)
    cs.push_back(make_crossing_pair({1, 2}, {4, i}));
  // {2,3} stays uncrossed
  cs.push_back(make_crossing_pair({2, 4}, {3, k}));
  for (VertexId j = 5; j <= k - 1; ++j) {
    cs.push_back(make_crossing_pair({2, j}, {1, 3}));
    cs.push_back(make_crossing_pair({2, j}, {3, k}));
    for (VertexId w = j + 1; w <= k; ++w)
      cs.push_back(make_crossing_pair({2, j}, {1, w}));
    for (VertexId i = 3; i < j; ++i)
      for (VertexId w = i + 1; w < j; ++w)
        cs.push_back(make_crossing_pair({2, j}, {i, w}));
  }
  for (VertexId i = 4; i <= k - 1; ++i)
    for (VertexId j = i + 1; j <= k - 1; ++j)
      cs.push_back(make_crossing_pair({2, k}, {i, j}));

  Drawing d(k, std::move(cs), std::nullopt, numbered("T'_", k));
  if (static_cast<long long>(d.crossings().size()) != binom4(k))
    throw std::runtime_error("twisted_prime: crossing count mismatch");
  if (!validate(d).empty())
    throw std::runtime_error("twisted_prime: structural validation failed");
  return d;
}

// ── recursive crossing-maximal family ───────────────────────────────────

namespace {

// insert vertex m next to p = m-1, per the wedge choice encoded in step
Drawing dn_insert(const Drawing& prev, DnStep* step_out) {
  const int m = prev.n() + 1;
  const VertexId p = m - 1;
  const VertexId anchor = (m % 2 == 0) ? m - 3 : m - 2;  // i_m
  const VertexId excluded = (m % 2 == 0) ? m - 2 : m - 4;

  const Rotation& rp = prev.rotation_of(p);
  const int sz = static_cast<int>(rp.size());  // m - 2 neighbors
  int pos = -1;
  for (int i = 0; i < sz; ++i)
    if (rp[i] == anchor) pos = i;
  if (pos < 0) throw std::runtime_error("dn_family: anchor missing");
  const VertexId succ = rp[(pos + 1) % sz];
  const VertexId pred = rp[(pos + sz - 1) % sz];

  bool after;
  if (succ == excluded)
    after = false;  // wedge on the predecessor side
  else if (pred == excluded)
    after = true;
  else
    throw std::runtime_error("dn_family: wedge precondition failed");

  // winding order: the neighbors of p crossed by the new edges, nearest first;
  // the anchor edge is never crossed and comes last
  std::vector<VertexId> w(sz - 1);
  for (int j = 1; j < sz; ++j)
    w[j - 1] = after ? rp[(pos + j) % sz] : rp[(pos + sz - j) % sz];

  std::vector<CrossingPair> cs = prev.crossings();
  auto add_edge_for = [&](VertexId x, int wind_count) {
    Edge nx = make_edge(m, x);
    for (int l = 0; l < wind_count; ++l)
      cs.push_back(make_crossing_pair(nx, make_edge(p, w[l])));
    for (const Edge& f : prev.edges_crossing(make_edge(p, x)))
      cs.push_back(make_crossing_pair(nx, f));
  };
  for (int j = 1; j < sz; ++j) add_edge_for(w[j - 1], j - 1);
  add_edge_for(anchor, sz - 1);
  // {p,m} crosses nothing

  RotationSystem rot(m);
  for (VertexId x = 1; x <= p; ++x) {
    Rotation r = prev.rotation_of(x);
    if (x == p) {
      // new vertex sits in the wedge at the anchor edge
      auto it = std::find(r.begin(), r.end(), anchor);
      r.insert(after ? it + 1 : it, m);
    } else {
      // the new edge lands just beside {x,p}, on the winding-approach side
      auto it = std::find(r.begin(), r.end(), p);
      r.insert(after ? it + 1 : it, m);
    }
    rot[x - 1] = std::move(r);
  }
  Rotation& rm = rot[m - 1];
  rm.push_back(anchor);
  if (after) {
    rm.push_back(p);
    for (int j = 1; j < sz; ++j) rm.push_back(w[j - 1]);
  } else {
    for (int j = sz - 1; j >= 1; --j) rm.push_back(w[j - 1]);
    rm.push_back(p);
  }

  if (step_out) *step_out = DnStep{m, make_edge(anchor, p), after};
  return Drawing(m, std::move(cs), std::move(rot), numbered("D_", m));
}

// exhaustive empty-4-cycle census of a crossing-maximal drawing, as sorted
// 4-subsets (each 4-subset admits exactly one plane 4-cycle: the one whose
// diagonals are the subset's crossing pair)
std::vector<std::array<VertexId, 4>> crossing_maximal_empty_4cycles(
    const Drawing& d) {
  std::vector<std::array<VertexId, 4>> out;
  const int n = d.n();
  for (VertexId a = 1; a <= n; ++a)
    for (VertexId b = a + 1; b <= n; ++b)
      for (VertexId c = b + 1; c <= n; ++c)
        for (VertexId e = c + 1; e <= n; ++e) {
          int which = k4_crossing_index(d, {a, b, c, e});
          std::vector<VertexId> cycle;
          switch (which) {
            case 0: cycle = {a, c, b, e}; break;  // diagonals {a,b},{c,e}
            case 1: cycle = {a, b, c, e}; break;  // diagonals {a,c},{b,e}
            case 2: cycle = {a, b, e, c}; break;  // diagonals {a,e},{b,c}
            default:
              throw std::runtime_error("not crossing-maximal");
          }
          auto cl = classify_sides(d, cycle);
          if (cl.class_a.empty() || cl.class_b.empty())
            out.push_back({a, b, c, e});
        }
  return out;
}

}  // namespace

std::vector<std::array<VertexId, 4>> dn_expected_empty_4cycles(int k) {
  if (k < 5 || k % 2 == 0)
    throw std::invalid_argument("dn_family requires odd k >= 5");
  std::vector<std::array<VertexId, 4>> out;
  const int blocks = (k - 1) / 2;  // vertex pairs {2i-1,2i}
  for (int i = 1; i <= blocks; ++i)
    for (int j = i + 1; j <= blocks; ++j)
      out.push_back({2 * i - 1, 2 * i, 2 * j - 1, 2 * j});
  for (VertexId i = 1; i <= k - 3; ++i)
    out.push_back({i, k - 2, k - 1, k});
  for (int t = 1; t <= (k - 3) / 2; ++t)
    for (VertexId x = k - 2; x <= k - 1; ++x) {
      std::array<VertexId, 4> q{2 * t - 1, 2 * t, x, k};
      std::sort(q.begin(), q.end());
      out.push_back(q);
    }
  std::sort(out.begin(), out.end());
  return out;
}

Drawing dn_family(int k, std::vector<DnStep>* steps_out) {
  if (k < 5 || k % 2 == 0)
    throw std::invalid_argument("dn_family requires odd k >= 5");
  if (steps_out) steps_out->clear();

  Drawing d = convex_gon(5).with_label("D_5");
  for (int m = 6; m <= k; ++m) {
    DnStep step{};
    d = dn_insert(d, &step);
    if (steps_out) steps_out->push_back(step);
  }

  // oracle 1: crossing-maximality (count + K_4 rule + rotation consistency)
  if (static_cast<long long>(d.crossings().size()) != binom4(k))
    throw std::runtime_error("dn_family: crossing count mismatch");
  if (!validate(d).empty())
    throw std::runtime_error("dn_family: structural validation failed");
  if (!rotation_consistency_violations(d).empty())
    throw std::runtime_error("dn_family: rotation consistency failed");
  // oracle 2: exact empty-4-cycle census
  if (crossing_maximal_empty_4cycles(d) != dn_expected_empty_4cycles(k))
    throw std::runtime_error("dn_family: empty-4-cycle census mismatch");
  return d;
}

}  // namespace holescope
