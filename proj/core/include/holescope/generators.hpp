#pragma once
// Closed-form drawing families. All generators return structurally valid
// drawings; the recursive family additionally self-checks its construction
// against independent oracles and throws std::runtime_error on any mismatch.

#include <vector>

#include "holescope/drawing.hpp"

namespace holescope {

/// Convex polygon drawing C_k (label "C_k"): edges {v_i,v_l} and {v_j,v_m}
/// cross iff i<j<l<m. Rotations: at v_i the cyclic order v_{i+1},...,v_{i-1}.
/// Pre: k >= 3.
Drawing convex_gon(int k);

/// Twisted drawing T_k (label "T_k"): edges {v_i,v_m} and {v_j,v_l} cross iff
/// i<j<l<m (nested pairs cross). Rotations attached from the cylindrical
/// realization (at i: i+1,...,k,i-1,...,1) and validated against the crossing
/// rule via the K_4 catalog; dropped if the validation ever fails.
/// Pre: k >= 3.
Drawing twisted(int k);

/// Crossing-maximal drawing T'_k without 4-holes (label "T'_k"): a twisted
/// drawing on [k] \ {2} with vertex 2 rerouted edge by edge. No rotations.
/// Pre: k >= 6. Construction asserts crossing count C(k,4) and the K_4 rule.
Drawing twisted_prime(int k);

/// One insertion of the recursive family: vertex v placed next to vertex v-1
/// in the wedge at base_edge = {i_v, v-1}; wedge_after tells on which side of
/// i_v (in the rotation of v-1) the wedge lies. i_v = v-3 for even v,
/// v-2 for odd v; v >= 6.
struct DnStep {
  VertexId v;
  Edge base_edge;
  bool wedge_after;
};

/// Crossing-maximal drawings D_k with quadratically few empty 4-cycles
/// (label "D_k"), built recursively from convex_gon(5). Pre: k >= 5 odd.
/// Construction self-checks: crossing-maximality, rotation consistency, and
/// the exact empty-4-cycle census; any failure throws std::runtime_error.
/// When steps_out is non-null the insertion steps are recorded there.
Drawing dn_family(int k, std::vector<DnStep>* steps_out = nullptr);

/// The closed-form empty-4-cycle census of dn_family(k), as sorted 4-subsets:
/// block pairs {2i-1,2i,2j-1,2j}, the tail family {i,k-2,k-1,k}, and block-
/// tail combinations {2t-1,2t,x,k} for x in {k-2,k-1}.
std::vector<std::array<VertexId, 4>> dn_expected_empty_4cycles(int k);

}  // namespace holescope
