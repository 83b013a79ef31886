#pragma once

#include "dupont/report.hpp"
#include "dupont/slot_tensor.hpp"
#include "dupont/poly_form.hpp"

#include <cstdint>
#include <string_view>

namespace dupont {

// Polynomial form on [0,1]^n in coordinates x_1..x_n (stored 0-based).
class CubeForm {
 public:
  explicit CubeForm(int n = 1) : poly_(n) {}
  CubeForm(int n, PolyForm p);

  static CubeForm constant(int n, const Scalar& c) { return {n, PolyForm::constant(n, c)}; }
  static CubeForm coordinate(int n, int i) { return {n, PolyForm::coordinate(n, i)}; }
  static CubeForm differential(int n, int i) { return {n, PolyForm::differential(n, i)}; }

  int dim() const { return poly_.num_vars(); }
  const PolyForm& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }
  int degree() const { return poly_.degree(); }
  CubeForm homogeneous_part(int p) const { return {dim(), poly_.homogeneous_part(p)}; }

  CubeForm& operator+=(const CubeForm& o) {
    poly_ += o.poly_;
    return *this;
  }
  CubeForm& operator-=(const CubeForm& o) {
    poly_ -= o.poly_;
    return *this;
  }
  friend CubeForm operator+(CubeForm a, const CubeForm& b) { return a += b; }
  friend CubeForm operator-(CubeForm a, const CubeForm& b) { return a -= b; }
  friend CubeForm operator*(const Scalar& k, const CubeForm& a) { return {a.dim(), k * a.poly_}; }
  friend bool operator==(const CubeForm& a, const CubeForm& b) = default;

 private:
  PolyForm poly_;
};

std::string to_string(const CubeForm& a);  // "1/2*x1^2*dx2"
CubeForm parse_cube_form(std::string_view text, int n);
CubeForm exterior_derivative(const CubeForm& a);
CubeForm wedge(const CubeForm& a, const CubeForm& b);

// Interval operators acting on one slot (forms on the whole interval,
// cochains of Delta^1).
SlotOp interval_whitney_op();
SlotOp interval_integration_op();
SlotOp interval_s_op(bool mutate = false);
SlotOp interval_d_op();
// Coboundary on the cochains of a 1-d simplicial complex.
SlotOp slot_coboundary_op(const SimplicialComplex& slot_complex);

SlotTensor to_tensor(const CubeForm& a);
SlotTensor to_tensor(const Cochain<CubeCell>& x);
CubeForm cube_form_from_tensor(int n, const SlotTensor& t);
Cochain<CubeCell> cochain_from_tensor(const SlotTensor& t);

CubeForm cube_whitney(int n, const Cochain<CubeCell>& x);
Cochain<CubeCell> cube_integration(const CubeForm& a);

enum class CubeVariant { S0, Symmetrized };

// C_{e,n} = e! (n-1-e)!
Scalar symmetrization_weight(int e, int n);
// (1/n!) sum_eps C_{|eps|,n} psi_eps with slot-dependent s and WR, as used on
// products of plain and subdivided intervals.
SlotTensor symmetrized_homotopy(const std::vector<SlotOp>& s, const std::vector<SlotOp>& wr, const SlotTensor& t);
SlotTensor psi_tensor(const std::vector<int>& eps, const std::vector<SlotOp>& s, const std::vector<SlotOp>& wr,
                      const SlotTensor& t);

// psi_eps = sum_j (WR)^{eps_1} (x) .. (x) s (x) (WR)^{eps_j} (x) .. with s in slot j
// and eps indexing the other n-1 slots in order.
CubeForm psi(const std::vector<int>& eps, const CubeForm& a, bool mutate = false);
// s0, or the symmetrized s through the C_{e,n} expansion.
CubeForm cube_dupont_s(const CubeForm& a, CubeVariant v, bool mutate = false);
// (1/n!) sum_sigma tau_sigma s0 tau_sigma^{-1}, computed literally.
CubeForm cube_dupont_s_average(const CubeForm& a);
// Pullback along the coordinate permutation moving slot i to sigma[i].
CubeForm permute_coordinates(const CubeForm& a, const std::vector<int>& sigma);

CubeForm random_cube_form(int n, int p, int d, std::uint64_t seed);
// Whitney forms of every cell plus `probes` random forms per form degree.
std::vector<CubeForm> cube_probes(int n, int probes, int degree, std::uint64_t seed);

struct CubicalParams {
  int n = 2;
  int probes = 25;
  int degree = 3;
  std::uint64_t seed = 1;
  bool mutate = false;
};

Report verify_cubical(const CubicalParams& p);

}  // namespace dupont
