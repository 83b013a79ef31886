#pragma once

#include "dupont/cube_dupont.hpp"
#include "dupont/dupont_homotopy.hpp"
#include "dupont/stellar.hpp"

namespace dupont {

// Barycentric chart of the m-th top simplex [*, 0..(no i_m)..n] of *_I Delta^n.
// Forward: t'_* = (k+1) t_{i_m}, t'_i = t_i - t_{i_m} (i in I \ i_m), t'_j = t_j.
class StarChart {
 public:
  StarChart(int n, VertexSet I, int m);

  int n() const { return n_; }
  const VertexSet& face() const { return I_; }
  int piece() const { return m_; }
  Vertex pivot() const { return I_[m_]; }
  Simplex facet() const;
  // Position in |Delta^n| of each facet vertex, in sorted facet order.
  std::vector<BaryPoint> vertex_positions() const;
  int position(Vertex v) const;  // index of v in the facet order

  // Global form on Delta^n -> form in the chart (the inverse substitution).
  SimplexForm to_chart(const SimplexForm& global) const;
  // Chart form -> its polynomial extension to Delta^n (the forward substitution).
  SimplexForm to_global(const SimplexForm& chart_form) const;
  bool contains(const BaryPoint& p) const;

 private:
  int n_;
  VertexSet I_;
  int m_;
};

PiecewiseForm restrict_to_star(const SimplexForm& a, const VertexSet& I);
// chi_{i_m} a: the restriction on piece m, zero on the other pieces.
PiecewiseForm supported_on_piece(const SimplexForm& a, const VertexSet& I, int m);

// (W* i^, p^ R*, s* + W* a^ R*) for C^(Delta^n) inside forms on *_I Delta^n.
class ComposedRetraction {
 public:
  ComposedRetraction(int n, VertexSet I);

  const SimplicialComplex& star() const { return star_; }
  PiecewiseForm inclusion(const Cochain<Simplex>& x) const;
  Cochain<Simplex> projection(const PiecewiseForm& a) const;
  PiecewiseForm homotopy(const PiecewiseForm& a) const;

 private:
  int n_;
  VertexSet I_;
  SimplicialComplex star_;
  SimplicialDR welding_;
};

// (s* + W* a^ R*)(restrict a) - restrict(s a)
PiecewiseForm defect_lhs(int n, const VertexSet& I, const SimplexForm& a);
// sum_{i_m in I} sum_{J not containing i_m} chi_{i_m} wbar_{i_m,J} T_J(a)
PiecewiseForm defect_rhs(int n, const VertexSet& I, const SimplexForm& a);
// T_J = (-1)^{l+1} ((1 - eps*) sum_{alpha in I\J} h^alpha - (k+1) h^*) h^{j_l}..h^{j_0}
SimplexForm t_operator(int n, const VertexSet& I, const std::vector<Vertex>& J, const SimplexForm& a);

Report primed_whitney_check(int n, const VertexSet& I);

struct CompatParams {
  int n = 2;
  VertexSet face;  // empty: {0..n}
  int probes = 25;
  int degree = 3;
  std::uint64_t seed = 1;
};

Report verify_compat(const CompatParams& p);

// ---------------------------------------------------------------------------
// Cubical: slots 0..k-1 subdivided at 1/2.

// 1-d operators on the subdivided interval, acting on piecewise slot forms.
SlotOp star_whitney_op();
SlotOp star_integration_op();
SlotOp star_s_op();
SlotOp restrict_op();  // whole-interval form -> both halves
SlotOp piecewise_d_op();

class CubicalComposedRetraction {
 public:
  CubicalComposedRetraction(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  SlotTensor restrict(const CubeForm& a) const;
  SlotTensor inclusion(const Cochain<CubeCell>& x) const;
  Cochain<CubeCell> projection(const SlotTensor& a) const;
  SlotTensor homotopy(const SlotTensor& a) const;
  SlotTensor lifted_whitney(const Cochain<CubeCell>& x) const;
  Cochain<CubeCell> lifted_integration(const SlotTensor& a) const;
  SlotTensor lifted_s(const SlotTensor& a) const;
  SlotTensor d(const SlotTensor& a) const;

 private:
  int n_, k_;
  CubicalDR welding_;
};

SlotTensor cubical_defect(const CubicalComposedRetraction& r, const CubeForm& a);
// k = n: the two symmetrized sums the defect rearranges into, reading
// X^{(x)m} - Y^{(x)m} for the bracketed tensor powers and including 1/n!.
SlotTensor cubical_defect_rearranged(const CubicalComposedRetraction& r, const CubeForm& a);
// Variant with tensor powers (X - Y)^{(x)m} and no 1/n!.
SlotTensor cubical_defect_rearranged_literal(const CubicalComposedRetraction& r, const CubeForm& a);

struct CubicalCompatParams {
  int n = 2;
  int k = 2;
  int probes = 25;
  int degree = 3;
  std::uint64_t seed = 1;
};

Report verify_cubical_compat(const CubicalCompatParams& p);

}  // namespace dupont
