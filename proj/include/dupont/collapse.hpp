#pragma once

#include "dupont/stellar.hpp"

namespace dupont {

// sigma is a top cell whose only coface-free face is `face`; removing both
// leaves a subcomplex.
struct CollapsePair {
  Simplex sigma, face;
};

// Retraction of C(Y) onto C(Y \ {sigma, face}). Chains: i inclusion,
// p(face) = face - eps_face d(sigma), a(face) = eps_face sigma. Cochains: the dual.
// Throws std::domain_error if the pair is not free in Y.
SimplicialDR elementary_collapse_dr(const SimplicialComplex& Y, const CollapsePair& pair, Side side);
// The cochain maps written out cell by cell instead of transposed.
SimplicialDR elementary_collapse_cochain_formulas(const SimplicialComplex& Y, const CollapsePair& pair);

struct ExpansionStep {
  SimplicialComplex complex;  // after adding the pair
  CollapsePair pair;
};

// Delta^n (inside the vertex set {*, 0..n}) grown to the full simplex
// [*, 0..n]: first [*, j], then [*, j, K] with face [*, K] for every K not
// containing j, by |K| and then lexicographically.
std::vector<ExpansionStep> expansion_sequence(int n, Vertex j);
// Composite retraction of C([*, 0..n]) onto C(Delta^n) along the sequence.
SimplicialDR expansion_dr(int n, Vertex j, Side side);
// Collapses taking the full simplex [*, 0..n] down to *_I Delta^n: first
// ([*, 0..n], [0..n]), then ([*, J], [J]) for I in J, largest J first.
std::vector<CollapsePair> collapse_sequence(int n, const VertexSet& I);
// Composite collapse retraction of C([*, 0..n]) onto C(*_I Delta^n).
SimplicialDR collapse_dr(int n, const VertexSet& I, Side side);

// Cochain triple C(Delta^n) <-> C(*_I Delta^n) through pivot j:
// iota_j = p_c i_j, p_j = p_j i_c, a_j = p_c a_j i_c.
SimplicialDR zigzag_retraction(int n, Vertex j, const VertexSet& I);
// Average of the zigzags over the pivots j in I.
SimplicialDR averaged_retraction(int n, const VertexSet& I);

// Zigzag maps for I = {0..n} from their cell-by-cell closed forms.
SimplicialDR zigzag_formulas(int n, Vertex j);

Report verify_collapse_equality(int n);
// Claim: the averaged construction for a proper face equals the welding retraction.
Report verify_general_I(int n, const VertexSet& I);

struct CollapseParams {
  int n = 2;
  std::vector<VertexSet> faces;  // extra faces for the general-I claim
};

Report verify_collapse(const CollapseParams& p);

}  // namespace dupont
