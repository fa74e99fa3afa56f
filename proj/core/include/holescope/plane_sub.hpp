#pragma once
// Crossing-free star+spanning-tree subdrawings, combinatorial face tracing,
// and the empty-4-cycle-through-a-vertex search built on top of them.

#include <vector>

#include "holescope/drawing.hpp"
#include "holescope/holes.hpp"

namespace holescope {

struct PlaneSubdrawing {
  VertexId center{};
  std::vector<Edge> star_edges;  // n-1 edges at the center
  std::vector<Edge> tree_edges;  // n-2 edges spanning the rest
  std::vector<std::vector<VertexId>> faces;  // simple cycles, each through center
};

/// Crossing-free subdrawing made of the full star at v plus a spanning tree
/// on the remaining vertices, found by fail-first backtracking over the
/// candidate edges. The witness is fully re-validated (pairwise
/// crossing-freeness, spanning acyclicity, 2n-3 edges, n-1 faces, every face
/// a simple cycle through v). Pre: rotations present, n >= 4. Throws
/// "no plane star+tree found" if the search exhausts — which certifies the
/// input is not a simple drawing of K_n.
PlaneSubdrawing find_plane_star_tree(const Drawing& d, VertexId v);

/// Faces of the crossing-free subdrawing on the sphere via
/// next-edge-in-rotation traversal, canonicalized and sorted. Throws
/// "rotation data inconsistent" if the Euler count n-1 fails.
std::vector<std::vector<VertexId>> trace_faces(const PlaneSubdrawing& p,
                                               const Drawing& d);

/// An empty 4-cycle passing through v: a 4-face of the star+tree subdrawing
/// or two adjacent triangular faces merged along their shared edge; without
/// rotations, an exhaustive scan over 4-cycles through v. The result is
/// re-validated by is_empty_cycle. Pre: n >= 4.
CycleWitness empty_4cycle_through(const Drawing& d, VertexId v);

}  // namespace holescope
