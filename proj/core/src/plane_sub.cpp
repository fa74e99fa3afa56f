#include "holescope/plane_sub.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace holescope {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

// tree search over candidate edges: repeatedly branch on the
// component-joining candidate that conflicts with the fewest live candidates
bool grow_tree(const std::vector<Edge>& cand,
               const std::vector<std::vector<int>>& conflicts,
               std::vector<char> alive, Dsu dsu, int missing,
               std::vector<int>& picked) {
  if (missing == 0) return true;
  const int m = static_cast<int>(cand.size());
  int best = -1, best_score = -1;
  for (int i = 0; i < m; ++i) {
    if (!alive[i]) continue;
    if (dsu.find(cand[i].a) == dsu.find(cand[i].b)) continue;
    int score = 0;
    for (int j : conflicts[i])
      if (alive[j]) ++score;
    if (best < 0 || score < best_score) {
      best = i;
      best_score = score;
    }
  }
  if (best < 0) return false;

  {  // include branch
    std::vector<char> next_alive = alive;
    Dsu next_dsu = dsu;
    next_alive[best] = 0;
    for (int j : conflicts[best]) next_alive[j] = 0;
    next_dsu.unite(cand[best].a, cand[best].b);
    picked.push_back(best);
    if (grow_tree(cand, conflicts, std::move(next_alive), std::move(next_dsu),
                  missing - 1, picked))
      return true;
    picked.pop_back();
  }
  alive[best] = 0;  // exclude branch
  return grow_tree(cand, conflicts, std::move(alive), std::move(dsu), missing,
                   picked);
}

bool face_is_simple(const std::vector<VertexId>& face) {
  std::vector<VertexId> s(face);
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

}  // namespace

std::vector<std::vector<VertexId>> trace_faces(const PlaneSubdrawing& p,
                                               const Drawing& d) {
  if (!d.has_rotations()) throw std::invalid_argument("rotations required");
  const int n = d.n();
  std::set<Edge> sub(p.star_edges.begin(), p.star_edges.end());
  sub.insert(p.tree_edges.begin(), p.tree_edges.end());

  // rotations restricted to the subdrawing
  std::vector<Rotation> rot(n + 1);
  for (VertexId x = 1; x <= n; ++x)
    for (VertexId y : d.rotation_of(x))
      if (sub.count(make_edge(x, y))) rot[x].push_back(y);

  auto succ = [&](VertexId at, VertexId from) {
    const Rotation& r = rot[at];
    const int m = static_cast<int>(r.size());
    for (int i = 0; i < m; ++i)
      if (r[i] == from) return r[(i + 1) % m];
    throw std::runtime_error("rotation data inconsistent");
  };

  std::set<std::pair<VertexId, VertexId>> unused;
  for (const Edge& e : sub) {
    unused.insert({e.a, e.b});
    unused.insert({e.b, e.a});
  }
  std::vector<std::vector<VertexId>> faces;
  while (!unused.empty()) {
    auto start = *unused.begin();
    std::vector<VertexId> face;
    auto cur = start;
    do {
      unused.erase(cur);
      face.push_back(cur.first);
      cur = {cur.second, succ(cur.second, cur.first)};
    } while (cur != start);
    faces.push_back(canonical_cycle(std::move(face)));
  }
  if (static_cast<int>(faces.size()) != n - 1)
    throw std::runtime_error("rotation data inconsistent");
  std::sort(faces.begin(), faces.end());
  return faces;
}

PlaneSubdrawing find_plane_star_tree(const Drawing& d, VertexId v) {
  if (!d.has_rotations()) throw std::invalid_argument("rotations required");
  if (d.n() < 4) throw std::invalid_argument("n >= 4 required");
  if (v < 1 || v > d.n()) throw std::invalid_argument("vertex out of range");
  const int n = d.n();

  PlaneSubdrawing p;
  p.center = v;
  for (VertexId u = 1; u <= n; ++u)
    if (u != v) p.star_edges.push_back(make_edge(v, u));

  // tree candidates: edges avoiding v that cross no star edge
  std::vector<Edge> cand;
  for (VertexId a = 1; a <= n; ++a)
    for (VertexId b = a + 1; b <= n; ++b) {
      if (a == v || b == v) continue;
      Edge e = make_edge(a, b);
      bool ok = true;
      for (const Edge& s : p.star_edges)
        if (d.crosses_raw(e, s)) {
          ok = false;
          break;
        }
      if (ok) cand.push_back(e);
    }
  const int m = static_cast<int>(cand.size());
  std::vector<std::vector<int>> conflicts(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (d.crosses_raw(cand[i], cand[j])) {
        conflicts[i].push_back(j);
        conflicts[j].push_back(i);
      }

  std::vector<int> picked;
  if (!grow_tree(cand, conflicts, std::vector<char>(m, 1), Dsu(n + 1), n - 2,
                 picked))
    throw std::runtime_error("no plane star+tree found");
  for (int i : picked) p.tree_edges.push_back(cand[i]);
  std::sort(p.tree_edges.begin(), p.tree_edges.end());

  // full witness validation
  std::vector<Edge> all = p.star_edges;
  all.insert(all.end(), p.tree_edges.begin(), p.tree_edges.end());
  if (static_cast<int>(all.size()) != 2 * n - 3)
    throw std::runtime_error("star+tree edge count wrong");
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j)
      if (!adjacent(all[i], all[j]) && d.crosses_raw(all[i], all[j]))
        throw std::runtime_error("star+tree subdrawing not crossing-free");
  Dsu check(n + 1);
  for (const Edge& e : p.tree_edges)
    if (!check.unite(e.a, e.b))
      throw std::runtime_error("tree edges contain a cycle");
  int root = check.find(v == 1 ? 2 : 1);
  for (VertexId u = 1; u <= n; ++u)
    if (u != v && check.find(u) != root)
      throw std::runtime_error("tree edges do not span");

  p.faces = trace_faces(p, d);
  for (const auto& f : p.faces) {
    if (!face_is_simple(f))
      throw std::runtime_error("face boundary is not a simple cycle");
    if (std::find(f.begin(), f.end(), v) == f.end())
      throw std::runtime_error("face without the center on its boundary");
  }
  return p;
}

CycleWitness empty_4cycle_through(const Drawing& d, VertexId v) {
  if (d.n() < 4) throw std::invalid_argument("n >= 4 required");
  if (v < 1 || v > d.n()) throw std::invalid_argument("vertex out of range");

  if (d.has_rotations()) {
    PlaneSubdrawing p = find_plane_star_tree(d, v);
    std::vector<VertexId> cycle;
    for (const auto& f : p.faces)
      if (f.size() == 4) {
        cycle = f;
        break;
      }
    if (cycle.empty()) {
      // merge two triangular faces sharing an edge
      auto edge_set = [](const std::vector<VertexId>& f) {
        std::set<Edge> es;
        const int k = static_cast<int>(f.size());
        for (int i = 0; i < k; ++i)
          es.insert(make_edge(f[i], f[(i + 1) % k]));
        return es;
      };
      for (size_t i = 0; i < p.faces.size() && cycle.empty(); ++i) {
        if (p.faces[i].size() != 3) continue;
        std::set<Edge> ei = edge_set(p.faces[i]);
        for (size_t j = i + 1; j < p.faces.size() && cycle.empty(); ++j) {
          if (p.faces[j].size() != 3) continue;
          std::set<Edge> ej = edge_set(p.faces[j]);
          std::vector<Edge> merged;
          for (const Edge& e : ei)
            if (!ej.count(e)) merged.push_back(e);
          for (const Edge& e : ej)
            if (!ei.count(e)) merged.push_back(e);
          if (merged.size() != 4) continue;
          // stitch the boundary of the union into a vertex cycle
          std::map<VertexId, std::vector<VertexId>> adj;
          for (const Edge& e : merged) {
            adj[e.a].push_back(e.b);
            adj[e.b].push_back(e.a);
          }
          if (adj.size() != 4) continue;
          std::vector<VertexId> walk{adj.begin()->first};
          VertexId prev = 0;
          while (walk.size() < 4) {
            auto& nb = adj[walk.back()];
            VertexId nxt = nb[0] == prev ? nb[1] : nb[0];
            prev = walk.back();
            walk.push_back(nxt);
          }
          cycle = std::move(walk);
        }
      }
    }
    if (cycle.empty())
      throw std::runtime_error(
          "no 4-face and no adjacent triangle pair in star+tree subdrawing");
    CycleWitness w = is_empty_cycle(d, canonical_cycle(cycle));
    if (!w.plane || !w.empty ||
        std::find(w.cycle.begin(), w.cycle.end(), v) == w.cycle.end())
      throw std::runtime_error("empty-4-cycle witness failed validation");
    return w;
  }

  // no rotations: exhaustive scan over 4-cycles through v
  std::vector<VertexId> others;
  for (VertexId u = 1; u <= d.n(); ++u)
    if (u != v) others.push_back(u);
  const int m = static_cast<int>(others.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k) {
        const VertexId a = others[i], b = others[j], c = others[k];
        for (const auto& cyc : {std::vector<VertexId>{v, a, b, c},
                                std::vector<VertexId>{v, a, c, b},
                                std::vector<VertexId>{v, b, a, c}}) {
          CycleWitness w = is_empty_cycle(d, canonical_cycle(cyc));
          if (w.plane && w.empty) return w;
        }
      }
  throw std::runtime_error("no empty 4-cycle through vertex");
}

}  // namespace holescope
