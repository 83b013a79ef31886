#pragma once

#include "dupont/report.hpp"
#include "dupont/simplex_forms.hpp"

#include <cstdint>
#include <functional>

namespace dupont {

// W(sigma^) = barred Whitney form of sigma.
SimplexForm whitney_map(int n, const Cochain<Simplex>& x);
// R = sum over faces sigma of sigma^ * integral over sigma.
Cochain<Simplex> integration_map(const SimplexForm& a);
// s = -sum_k sum_{i_0<..<i_k} wbar_{i_0..i_k} h^{i_k}..h^{i_0}
SimplexForm dupont_s(const SimplexForm& a);

// Vertex map of tau_sigma (tau^* t_j = t_{sigma(j)}): i -> sigma^{-1}(i).
std::map<Vertex, Vertex> permutation_vertex_map(const std::vector<int>& sigma);
// Vertex map of the i-th face inclusion Delta^{n-1} -> Delta^n.
std::map<Vertex, Vertex> face_vertex_map(int n, int i);

// Lifting to a simplicial complex: each facet uses the chart whose vertex
// order follows `rank` (smaller rank first; sorted order when empty).
using VertexRank = std::map<Vertex, int>;
std::vector<Vertex> chart_order(const Simplex& facet, const VertexRank& rank);
PiecewiseForm lift_whitney(const SimplicialComplex& complex, const Cochain<Simplex>& x,
                           const VertexRank& rank = {});
Cochain<Simplex> lift_integration(const PiecewiseForm& a);
PiecewiseForm lift_dupont(const PiecewiseForm& a);

// Whitney forms of all faces, all monomial forms up to `degree`, and `probes`
// seeded random forms per form degree.
std::vector<SimplexForm> probe_family(int n, int probes, int degree, std::uint64_t seed,
                                      bool with_monomials = true);

struct DupontParams {
  int n = 2;
  int probes = 25;
  int degree = 3;
  std::uint64_t seed = 1;
  bool mutate = false;  // test mode: perturb s
};

Report verify_dupont(const DupontParams& p);

}  // namespace dupont
