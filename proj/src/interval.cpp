#include "dupont/interval.hpp"

namespace dupont {

namespace {

Simplex S(std::vector<Vertex> v) { return Simplex::from_sorted(std::move(v)); }

void require_1d(const PolyForm& a) {
  if (a.num_vars() != 1) throw std::invalid_argument("interval operator on a non-interval form");
}

// Coefficient function g of g dx, as a 0-form.
PolyForm dx_coefficient(const PolyForm& a) {
  PolyForm g(1);
  for (const auto& [k, c] : a.terms())
    if (k.wedge) g.add_term(TermKey{0, k.exps}, c);
  return g;
}

}  // namespace

Scalar integrate_poly(const PolyForm& g, const Scalar& lo, const Scalar& hi) {
  require_1d(g);
  Scalar acc = 0;
  for (const auto& [k, c] : g.terms()) {
    if (k.wedge) continue;
    const int e = k.exps[0] + 1;
    Scalar ph = 1, pl = 1;
    for (int i = 0; i < e; ++i) {
      ph *= hi;
      pl *= lo;
    }
    acc += c * (ph - pl) / e;
  }
  return acc;
}

PolyForm antiderivative(const PolyForm& g, const Scalar& base) {
  require_1d(g);
  PolyForm out(1);
  for (const auto& [k, c] : g.terms()) {
    if (k.wedge) continue;
    TermKey nk = k;
    nk.exps[0] += 1;
    out.add_term(nk, c / nk.exps[0]);
  }
  out -= PolyForm::constant(1, evaluate(out, {base}));
  return out;
}

PolyForm interval_whitney(const Cochain<Simplex>& x) {
  const PolyForm one = PolyForm::constant(1, 1), t = PolyForm::coordinate(1, 0);
  PolyForm out(1);
  for (const auto& [cell, c] : x.terms()) {
    if (cell == S({0})) {
      out += c * (one - t);
    } else if (cell == S({1})) {
      out += c * t;
    } else if (cell == S({0, 1})) {
      out += c * PolyForm::differential(1, 0);
    } else {
      throw std::domain_error("cell not in Delta^1: " + to_string(cell));
    }
  }
  return out;
}

Cochain<Simplex> interval_integration(const PolyForm& a) {
  require_1d(a);
  PolyForm f = a.homogeneous_part(0);
  Cochain<Simplex> out;
  out.add(S({0}), evaluate(f, {Scalar(0)}));
  out.add(S({1}), evaluate(f, {Scalar(1)}));
  out.add(S({0, 1}), integrate_poly(dx_coefficient(a), 0, 1));
  return out;
}

PolyForm interval_dupont(const PolyForm& a) {
  require_1d(a);
  const PolyForm g = dx_coefficient(a);
  return antiderivative(g, 0) - integrate_poly(g, 0, 1) * PolyForm::coordinate(1, 0);
}

PolyForm to_interval_coordinate(const SimplexForm& a) {
  if (a.dim() != 1) throw std::invalid_argument("not a form on Delta^1");
  // canonical variable t_0 = 1 - x
  AffineMap f;
  f.new_vars = 1;
  f.linear = DenseMatrix<Scalar>::Constant(1, 1, Scalar(-1));
  f.offset = {Scalar(1)};
  return pullback(a.poly(), f);
}

SimplexForm from_interval_coordinate(const PolyForm& a) {
  require_1d(a);
  AffineMap f;
  f.new_vars = 2;
  f.linear = DenseMatrix<Scalar>::Zero(1, 2);
  f.linear(0, 1) = 1;
  f.offset = {Scalar(0)};
  return SimplexForm::canonicalize(1, pullback(a, f));
}

}  // namespace dupont
