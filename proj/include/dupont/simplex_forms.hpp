#pragma once

#include "dupont/complexes.hpp"
#include "dupont/poly_form.hpp"

#include <cstdint>
#include <optional>
#include <span>

namespace dupont {

// Point of |Delta^n| in barycentric coordinates t_0..t_n.
class BaryPoint {
 public:
  explicit BaryPoint(std::vector<Scalar> coords);
  static BaryPoint vertex(int n, int i);
  static BaryPoint barycenter(int n, const std::vector<int>& face);

  int dim() const { return static_cast<int>(t_.size()) - 1; }
  const std::vector<Scalar>& coords() const { return t_; }
  const Scalar& operator[](int i) const { return t_.at(i); }
  bool operator==(const BaryPoint&) const = default;

 private:
  std::vector<Scalar> t_;
};

// Polynomial form on |Delta^n|, stored with t_n and dt_n eliminated. The
// underlying PolyForm has variables t_0..t_{n-1}.
class SimplexForm {
 public:
  explicit SimplexForm(int dim = 0);
  // ambient: a PolyForm in all n+1 barycentric coordinates.
  static SimplexForm canonicalize(int dim, const PolyForm& ambient);
  static SimplexForm from_canonical(int dim, PolyForm canonical);
  static SimplexForm constant(int dim, const Scalar& c);
  static SimplexForm coordinate(int dim, int i);    // t_i, 0 <= i <= dim
  static SimplexForm differential(int dim, int i);  // dt_i

  int dim() const { return n_; }
  const PolyForm& poly() const { return poly_; }
  PolyForm ambient() const { return extend_vars(poly_, n_ + 1); }

  bool is_zero() const { return poly_.is_zero(); }
  int degree() const { return poly_.degree(); }
  SimplexForm homogeneous_part(int p) const { return {n_, poly_.homogeneous_part(p)}; }

  SimplexForm& operator+=(const SimplexForm& o);
  SimplexForm& operator-=(const SimplexForm& o);
  SimplexForm& operator*=(const Scalar& k);
  friend SimplexForm operator+(SimplexForm a, const SimplexForm& b) { return a += b; }
  friend SimplexForm operator-(SimplexForm a, const SimplexForm& b) { return a -= b; }
  friend SimplexForm operator-(SimplexForm a) { return a *= Scalar(-1); }
  friend SimplexForm operator*(const Scalar& k, SimplexForm a) { return a *= k; }
  friend bool operator==(const SimplexForm& a, const SimplexForm& b) {
    return a.n_ == b.n_ && a.poly_ == b.poly_;
  }

 private:
  SimplexForm(int n, PolyForm p) : n_(n), poly_(std::move(p)) {}
  void check_same(const SimplexForm& o) const;

  int n_;
  PolyForm poly_;
};

std::string to_string(const SimplexForm& a);
SimplexForm parse_simplex_form(std::string_view text, int dim);

SimplexForm wedge(const SimplexForm& a, const SimplexForm& b);
SimplexForm exterior_derivative(const SimplexForm& a);

// omega_{i_0..i_p} = sum_l (-1)^l t_{i_l} dt_{i_0}..(omit i_l)..dt_{i_p}; the
// barred version is scaled by p!. Indices need only be distinct.
SimplexForm whitney_form(int n, std::span<const int> indices, bool barred);
SimplexForm whitney_form(int n, std::initializer_list<int> indices, bool barred);

// Interior product with E_i = sum_j (delta_ij - t_j) d/dt_j.
SimplexForm contract_E(int i, const SimplexForm& a);

// Fiber integration along the straight-line contraction onto q.
SimplexForm cone_homotopy(const BaryPoint& q, const SimplexForm& a);
SimplexForm cone_homotopy(int vertex, const SimplexForm& a);

// Degree-0 part evaluated at q, as a constant form.
SimplexForm eval_at(const BaryPoint& q, const SimplexForm& a);
Scalar eval_scalar(const BaryPoint& q, const SimplexForm& a);

// Pullback along the affine map |Delta^m| -> |Delta^n| sending source vertex k
// to the point with barycentric coordinates column k of `columns` ((n+1) x (m+1)).
SimplexForm pullback_linear(const SimplexForm& a, int source_dim, const DenseMatrix<Scalar>& columns);
// tau_sigma^*(t_j) = t_{sigma(j)}.
SimplexForm permute(const SimplexForm& a, const std::vector<int>& sigma);
// Pullback along the i-th face inclusion Delta^{n-1} -> Delta^n.
SimplexForm face_pullback(int i, const SimplexForm& a);
// Pullback to the face spanned by `face` (in the given vertex order).
SimplexForm restrict_to_face(const std::vector<int>& face, const SimplexForm& a);

enum class IntegrationMethod { Homotopy, Dirichlet };
Scalar integrate_face(const std::vector<int>& face, const SimplexForm& a, IntegrationMethod method);

// Deterministic probe form with integer coefficients in [-3,3]\{0}, form degree
// p, polynomial degree <= d. Uses its own 64-bit LCG so results do not depend
// on the standard library's distributions.
SimplexForm random_form(int n, int p, int d, std::uint64_t seed);
// Every monomial t^a dt_S with |a| <= d, |S| = p.
std::vector<SimplexForm> monomial_forms(int n, int p, int d);

class ProbeRng {
 public:
  explicit ProbeRng(std::uint64_t seed) : state_(seed * 2 + 0x9E3779B97F4A7C15ull) { next(); }
  std::uint64_t next() {
    state_ = state_ * 6364136223846793005ull + 1442695040888963407ull;
    return state_ >> 33;
  }
  int below(int bound) { return static_cast<int>(next() % static_cast<std::uint64_t>(bound)); }

 private:
  std::uint64_t state_;
};

// ---------------------------------------------------------------------------
// Piecewise forms on a simplicial complex: one form per facet, each in its
// own barycentric chart whose vertex order is stored with it.

class CompatibilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PiecewiseForm {
 public:
  struct Piece {
    std::vector<Vertex> order;
    SimplexForm form;
  };

  PiecewiseForm() = default;
  // Validates face compatibility; throws CompatibilityError naming the face.
  static PiecewiseForm make(SimplicialComplex complex, std::map<Simplex, Piece> pieces);
  // Skips validation, for sums of pieces supported on single facets.
  static PiecewiseForm unchecked(SimplicialComplex complex, std::map<Simplex, Piece> pieces);

  const SimplicialComplex& complex() const { return complex_; }
  const std::map<Simplex, Piece>& pieces() const { return pieces_; }
  const Piece& piece(const Simplex& facet) const { return pieces_.at(facet); }

  std::optional<std::string> compatibility_error() const;
  // All charts re-expressed in sorted vertex order.
  PiecewiseForm normalized() const;
  bool is_zero() const;

  PiecewiseForm& operator+=(const PiecewiseForm& o);
  PiecewiseForm& operator-=(const PiecewiseForm& o);
  friend PiecewiseForm operator+(PiecewiseForm a, const PiecewiseForm& b) { return a += b; }
  friend PiecewiseForm operator-(PiecewiseForm a, const PiecewiseForm& b) { return a -= b; }
  friend bool operator==(const PiecewiseForm& a, const PiecewiseForm& b);

  template <class F>
  PiecewiseForm map_pieces(F f) const {
    PiecewiseForm out = *this;
    for (auto& [facet, piece] : out.pieces_) piece.form = f(facet, piece);
    return out;
  }

 private:
  SimplicialComplex complex_;
  std::map<Simplex, Piece> pieces_;
};

std::string to_string(const PiecewiseForm& a);
PiecewiseForm exterior_derivative(const PiecewiseForm& a);

// Re-express a chart form in another ordering of the same vertices.
SimplexForm reorder_chart(const SimplexForm& a, const std::vector<Vertex>& from,
                          const std::vector<Vertex>& to);

// Restriction of a global form on Delta^n: for each facet, `charts` gives the
// position in |Delta^n| of each chart vertex, in chart order.
PiecewiseForm restrict_global(const SimplexForm& a, const SimplicialComplex& complex,
                              const std::map<Simplex, std::vector<BaryPoint>>& charts);

}  // namespace dupont
