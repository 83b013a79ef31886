#pragma once

#include "dupont/report.hpp"
#include "dupont/slot_tensor.hpp"

namespace dupont {

using VertexSet = std::vector<Vertex>;  // sorted

// All [J] and [*, J] with J not containing I; I = {0..n} is the full star.
SimplicialComplex star_complex(int n, const VertexSet& I);
std::string to_string(const VertexSet& I);
VertexSet parse_vertex_set(const std::string& text);  // "0,1,2"
// Every nonempty subset of {0..n}, in lexicographic order of bitmasks.
std::vector<VertexSet> all_faces(int n);

using SimplicialDR = DeformationRetraction<Simplex>;
using CubicalDR = DeformationRetraction<CubeCell>;

// Chains: i_*, p_*, a_* as defined cell by cell. Cochains: the dual triple.
SimplicialDR welding_dr(int n, const VertexSet& I, Side side);
// Cochain maps i^*, p^*, a^* transcribed from their own cell formulas.
SimplicialDR welding_cochain_formulas(int n, const VertexSet& I);

// Subdivides slots 0..k-1 of the n-cube.
CubicalComplex cubical_star_complex(int n, int k);
// A graded map on the cells of Delta^1 or *Delta^1 as an operator on one slot.
SlotOp slot_op(const GradedLinearMap<Simplex>& m);
// Tensor triple on the given side: i^{(x)k} (x) 1, p^{(x)k} (x) 1 and the
// S_k-symmetrized homotopy, each built from the 1-d welding maps of that side.
CubicalDR cubical_welding_dr(int n, int k, Side side);
// The same homotopy without symmetrization.
GradedLinearMap<CubeCell> cubical_welding_homotopy_unsymmetrized(int n, int k, Side side);

struct StellarParams {
  int n = 2;
  std::vector<VertexSet> faces;  // empty: every nonempty I
  int k = -1;                    // cubical subdivision depth; -1: every 1 <= k <= n (n <= 3)
};

Report verify_stellar(const StellarParams& p);

}  // namespace dupont
