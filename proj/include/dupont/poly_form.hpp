#pragma once

#include "dupont/scalar.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace dupont {

// Polynomial differential forms in affine coordinates y_0..y_{m-1}. Shared
// backend of SimplexForm and CubeForm; knows nothing about simplices.
inline constexpr int kMaxVars = 8;

using Exponents = std::array<std::uint8_t, kMaxVars>;

struct TermKey {
  std::uint32_t wedge = 0;  // bit i set: dy_i present, factors in increasing order
  Exponents exps{};

  int form_degree() const;
  int poly_degree() const;
  bool operator==(const TermKey&) const = default;
};

// Canonical order: form degree, then wedge set lexicographically, then monomial.
struct TermKeyLess {
  bool operator()(const TermKey& a, const TermKey& b) const;
};

class PolyForm {
 public:
  using Terms = std::map<TermKey, Scalar, TermKeyLess>;

  explicit PolyForm(int num_vars = 0);
  static PolyForm constant(int num_vars, const Scalar& c);
  static PolyForm coordinate(int num_vars, int i);
  static PolyForm differential(int num_vars, int i);
  static PolyForm monomial(int num_vars, const Scalar& c, const Exponents& e, std::uint32_t wedge);

  int num_vars() const { return nv_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const TermKey& k, const Scalar& c);

  // Form degree if homogeneous; -1 for zero or mixed.
  int degree() const;
  int max_poly_degree() const;
  PolyForm homogeneous_part(int p) const;

  PolyForm& operator+=(const PolyForm& o);
  PolyForm& operator-=(const PolyForm& o);
  PolyForm& operator*=(const Scalar& k);
  friend PolyForm operator+(PolyForm a, const PolyForm& b) { return a += b; }
  friend PolyForm operator-(PolyForm a, const PolyForm& b) { return a -= b; }
  friend PolyForm operator-(PolyForm a) { return a *= Scalar(-1); }
  friend PolyForm operator*(const Scalar& k, PolyForm a) { return a *= k; }
  friend bool operator==(const PolyForm& a, const PolyForm& b) {
    return a.nv_ == b.nv_ && a.terms_ == b.terms_;
  }

 private:
  void check_same(const PolyForm& o) const;

  int nv_;
  Terms terms_;
};

PolyForm wedge(const PolyForm& a, const PolyForm& b);
PolyForm exterior_derivative(const PolyForm& a);
// Interior product with the vector field sum_j field[j] d/dy_j (0-form components).
PolyForm interior_product(const std::vector<PolyForm>& field, const PolyForm& a);

// y_i (old) = offset[i] + sum_j linear(i, j) z_j (new).
struct AffineMap {
  int new_vars = 0;
  DenseMatrix<Scalar> linear;  // old x new
  std::vector<Scalar> offset;  // old

  static AffineMap linear_only(const DenseMatrix<Scalar>& m);
};

PolyForm pullback(const PolyForm& a, const AffineMap& f);
Scalar evaluate(const PolyForm& a, const std::vector<Scalar>& point);
// Same terms, more variables appended.
PolyForm extend_vars(const PolyForm& a, int num_vars);

// Grammar: terms joined by " + ", each "coef*y0^2*y1*dy0^dy2"; var names are
// prefix + (index + index_base).
std::string to_string(const PolyForm& a, std::string_view var = "t", int index_base = 0);
PolyForm parse_poly_form(std::string_view text, int num_vars, std::string_view var = "t",
                         int index_base = 0);

int wedge_sign(std::uint32_t a, std::uint32_t b);  // 0 if they overlap
int popcount(std::uint32_t x);

}  // namespace dupont
