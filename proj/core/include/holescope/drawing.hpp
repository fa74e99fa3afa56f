#pragma once
// Data model for simple drawings of the complete graph K_n, encoded by the
// set of crossing edge pairs, optionally carrying a rotation system.
// Vertices are 1-based. All operations are pure; a Drawing never mutates
// after construction.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace holescope {

using VertexId = int;

struct Edge {
  VertexId a{}, b{};  // invariant a < b (enforced by make_edge / Drawing)
  auto operator<=>(const Edge&) const = default;
};

/// Canonical edge: endpoints sorted. Throws std::invalid_argument on u == v.
Edge make_edge(VertexId u, VertexId v);

inline bool adjacent(Edge e, Edge f) {
  return e.a == f.a || e.a == f.b || e.b == f.a || e.b == f.b;
}

struct CrossingPair {
  Edge e, f;  // invariant e < f lexicographically
  auto operator<=>(const CrossingPair&) const = default;
};

CrossingPair make_crossing_pair(Edge e, Edge f);

using Rotation = std::vector<VertexId>;        // cyclic order of the other vertices
using RotationSystem = std::vector<Rotation>;  // index v-1 -> rotation at v

/// Outcome of classify_sides: the two vertex classes separated by a plane
/// cycle. class_a holds the smallest non-cycle vertex; either class may be
/// empty.
struct SideClassification {
  std::vector<VertexId> cycle;
  std::vector<VertexId> class_a;
  std::vector<VertexId> class_b;
};

class Drawing {
 public:
  /// Construction canonicalizes: edges sorted within pairs, pairs sorted and
  /// de-duplicated, rotations rotated to start at the smallest neighbor.
  /// Throws std::invalid_argument on out-of-range vertices, degenerate edges,
  /// or a rotation system of the wrong shape. Semantic problems (adjacent
  /// pairs crossing, K_4 rule violations, non-permutation rotations) are
  /// reported by validate(), not here.
  Drawing(int n, std::vector<CrossingPair> crossings,
          std::optional<RotationSystem> rotations = std::nullopt,
          std::string label = {});

  int n() const { return n_; }
  const std::string& label() const { return label_; }
  const std::vector<CrossingPair>& crossings() const { return crossings_; }
  bool has_rotations() const { return rotations_.has_value(); }
  const RotationSystem& rotations() const { return *rotations_; }
  const Rotation& rotation_of(VertexId v) const { return (*rotations_)[v - 1]; }

  int edge_count() const { return n_ * (n_ - 1) / 2; }
  int edge_index(Edge e) const;

  /// Raw crossing lookup; false for adjacent pairs, no precondition checks.
  bool crosses_raw(Edge e, Edge f) const;
  /// Number of edges crossing e.
  int crossing_degree(Edge e) const;
  std::vector<Edge> edges_crossing(Edge e) const;

  Drawing with_label(std::string label) const;

 private:
  int n_;
  std::string label_;
  std::vector<CrossingPair> crossings_;
  std::optional<RotationSystem> rotations_;
  // dense edge-by-edge crossing bitmatrix + per-edge degree
  int words_per_edge_;
  std::vector<std::uint64_t> bits_;
  std::vector<int> degree_;
};

// ── Operations ──────────────────────────────────────────────────────────

/// Structural invariant check. Returns human-readable violations, each naming
/// the offending subset: non-independent crossing pairs, K_4 rule violations
/// (more than one crossing pair inside a 4-subset), rotations that are not
/// permutations of the remaining vertices. Empty result == structurally valid.
std::vector<std::string> validate(const Drawing& d);

/// True iff independent edges e, f cross. Throws std::invalid_argument
/// ("not independent") when e and f share a vertex, or on out-of-range edges.
bool crosses(const Drawing& d, Edge e, Edge f);

/// Crossing-parity separation test: v and w lie on opposite sides of the
/// triangle spanned by t iff edge {v,w} crosses an odd number of the three
/// triangle edges. Pre: v != w, neither inside t.
bool separated_by_triangle(const Drawing& d, const std::array<VertexId, 3>& t,
                           VertexId v, VertexId w);

/// Two-class partition of the non-cycle vertices by crossing parity with the
/// plane cycle. Throws on non-plane cycles ("cycle not plane") and on a
/// non-transitive parity relation ("invalid drawing data").
SideClassification classify_sides(const Drawing& d,
                                  const std::vector<VertexId>& cycle);

/// Subdrawing induced by the vertex subset, relabeled 1..|s| preserving
/// order. Crossings keep pairs with both edges inside; rotations (when
/// present) drop absent vertices.
Drawing induced_subdrawing(const Drawing& d, std::vector<VertexId> s);

// ── Rotation-consistency (K_4 catalog) ──────────────────────────────────
//
// Every simple drawing of K_4 realizes one of 8 rotation systems, identified
// here by four orientation signs (one per vertex: does the vertex see the
// other three in ascending cyclic order?). The catalog, built by brute force
// over labeled general-position 4-point grid configurations, maps each
// realizable sign vector to its crossing status. The remaining 8 sign vectors
// are not realizable by any simple drawing and are reported as violations.

/// Crossing status of a 4-subset {a<b<c<d}: 0 = {a,b}x{c,d}, 1 = {a,c}x{b,d},
/// 2 = {a,d}x{b,c}, -1 = no crossing. From the crossing set.
int k4_crossing_index(const Drawing& d, const std::array<VertexId, 4>& quad);

/// Catalog lookup: sign mask bit i set iff vertex #i of the sorted quad sees
/// the other three in ascending cyclic order. nullopt = unrealizable.
std::optional<int> k4_status_from_signs(unsigned mask);

/// Deep rotation-vs-crossing check over all 4-subsets via the catalog.
/// Empty when rotations are absent or fully consistent.
std::vector<std::string> rotation_consistency_violations(const Drawing& d);

}  // namespace holescope
