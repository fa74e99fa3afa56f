#pragma once
// Gon / hole / empty-cycle predicates and enumerators. Everything here is
// derived from crossing data alone unless an operation explicitly requires
// rotations (the chord wedge test). Enumerations are deterministic:
// lexicographically smallest first, cycles canonicalized to start at their
// smallest vertex heading toward its smaller neighbor.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "holescope/drawing.hpp"

namespace holescope {

// ── Witness types ───────────────────────────────────────────────────────

struct GonCertificate {
  std::vector<VertexId> order;  // canonical cyclic order
  std::vector<Edge> boundary;   // k consecutive edges of order
  bool diagonals_verified{};    // full interleaving pattern re-checked
};

enum class EmptySideTag { none, class_a, class_b, both };
const char* to_string(EmptySideTag t);

struct CycleWitness {
  std::vector<VertexId> cycle;
  bool plane{};
  SideClassification sides;  // meaningful only when plane
  bool empty{};
  EmptySideTag empty_side_tag{EmptySideTag::none};
};

struct TriangleRecord {
  std::array<VertexId, 3> vertices;
  EmptySideTag empty_side_tag{};
};

struct HoleRecord {
  GonCertificate gon;
  std::vector<VertexId> interior;  // empty for holes
};

/// Total two-coloring of 1..n; color(v) is 0 or 1.
struct Coloring {
  std::vector<int> color;  // index v-1
  int of(VertexId v) const { return color[v - 1]; }
};

struct ConvexityVerdict {
  bool convex{};
  std::optional<std::array<VertexId, 3>> counterexample;
};

struct SideConvexityViolation {
  std::array<VertexId, 3> triangle;
  std::string reason;
};

struct Mono4Witness {
  std::vector<VertexId> cycle;
  int color{};
};

// ── Cycles ──────────────────────────────────────────────────────────────

/// Rotate to start at the smallest vertex, orient toward its smaller
/// neighbor.
std::vector<VertexId> canonical_cycle(std::vector<VertexId> cycle);

/// True iff no two cycle edges cross. Throws on repeated vertices or length
/// below 3.
bool is_plane_cycle(const Drawing& d, const std::vector<VertexId>& cycle);

/// Full witness: planarity, side classes, emptiness verdict. Hamiltonian
/// plane cycles are empty with tag "both".
CycleWitness is_empty_cycle(const Drawing& d,
                            const std::vector<VertexId>& cycle);

/// All k-subsets admitting an empty plane k-cycle, one witness per distinct
/// canonical cycle, lexicographic order.
std::vector<CycleWitness> enumerate_empty_cycles(const Drawing& d, int k);

/// All 3-subsets with an empty side.
std::vector<TriangleRecord> empty_triangles(const Drawing& d);

// ── Gons and holes ──────────────────────────────────────────────────────

/// Certificate iff the within-subset uncrossed edges form a Hamiltonian
/// cycle on s and every edge pair crosses exactly when interleaved in that
/// cyclic order.
std::optional<GonCertificate> is_k_gon(const Drawing& d,
                                       std::vector<VertexId> s);

/// Vertices lying in the gon-vertex-free side of some triangle of g.
/// Throws "undefined for triangles" when k = 3 (use empty_triangles).
std::vector<VertexId> interior_vertices(const Drawing& d,
                                        const GonCertificate& g);

/// True iff the gon vertices appear in g's cyclic order (or its mirror) in
/// the rotation around u, ignoring non-gon vertices. Pre: d has rotations.
bool interior_rotation_consistent(const Drawing& d, const GonCertificate& g,
                                  VertexId u);

/// All k-gons with empty interior, subsets in lexicographic order.
std::vector<HoleRecord> enumerate_k_holes(const Drawing& d, int k);

/// First k-hole in subset-lexicographic order, if any.
std::optional<HoleRecord> first_k_hole(const Drawing& d, int k);

// ── Convexity ───────────────────────────────────────────────────────────

/// True iff no side-class edge crosses a triangle edge and no edge from the
/// side class to a triangle vertex crosses the opposite triangle edge.
/// side_class must be exactly one class of classify_sides(d, t).
bool triangle_side_convex(const Drawing& d, const std::array<VertexId, 3>& t,
                          const std::vector<VertexId>& side_class);

/// Every triangle must have at least one convex side; reports the first
/// counterexample triangle otherwise.
ConvexityVerdict is_convex_drawing(const Drawing& d);

// ── Generalized holes ───────────────────────────────────────────────────

/// Wedge test: does the chord leave its endpoints into the empty side of the
/// plane 4-cycle? Requires rotations ("rotations required") and an empty
/// cycle ("cycle not empty"); chord must be one of the two diagonals.
bool chord_in_empty_side(const Drawing& d, const std::vector<VertexId>& cycle,
                         Edge chord);

/// Rotation-free sufficient test for the same chord question: both triangles
/// cut off by the chord have a vertex-free side opposite the remaining cycle
/// vertex.
bool chord_splits_empty_side(const Drawing& d,
                             const std::vector<VertexId>& cycle, Edge chord);

/// Empty 4-cycle whose empty side splits along a diagonal into two empty
/// triangles. Uses the wedge route when rotations exist, the rotation-free
/// sufficient test otherwise.
bool is_empty_4_triangulation(const Drawing& d,
                              const std::vector<VertexId>& cycle);

/// All empty 4-triangulations whose four vertices share a color.
std::vector<Mono4Witness> monochromatic_4_triangulations(const Drawing& d,
                                                         const Coloring& c);

// ── Minimal gons ────────────────────────────────────────────────────────

/// A k-gon such that no other k-gon lives entirely inside its closed convex
/// side (gon plus interior vertices). Starts from the lexicographically
/// first k-gon and descends; each replacement strictly shrinks the interior.
/// Throws "requires convex drawing" on non-convex input; nullopt when the
/// drawing has no k-gon at all.
std::optional<GonCertificate> minimal_k_gon(const Drawing& d, int k);

/// For every triangle inside g's closed convex side, the side away from the
/// outside gon vertices must be convex. Returns all failures (expected
/// none); a triangle whose outside gon vertices split across sides is itself
/// reported. Pre: d convex, g minimal, k >= 5.
std::vector<SideConvexityViolation> check_inner_side_convexity(
    const Drawing& d, const GonCertificate& g);

/// A 4-hole having e as one of its crossing edges, located by scanning the
/// edges crossing e for one whose 4-gon has no interior vertices. Pre: d
/// convex. Throws "uncrossed edge" when e has no crossing, and a hard error
/// if no witness exists (impossible for convex drawings).
HoleRecord chord_4hole_for_edge(const Drawing& d, Edge e);

}  // namespace holescope
