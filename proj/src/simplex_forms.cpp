#include "dupont/simplex_forms.hpp"

#include <numeric>
#include <stdexcept>

namespace dupont {

BaryPoint::BaryPoint(std::vector<Scalar> coords) : t_(std::move(coords)) {
  if (t_.empty()) throw std::invalid_argument("empty barycentric point");
  Scalar sum = 0;
  for (const auto& x : t_) {
    if (x < 0) throw std::invalid_argument("negative barycentric coordinate");
    sum += x;
  }
  if (sum != 1) throw std::invalid_argument("barycentric coordinates do not sum to 1");
}

BaryPoint BaryPoint::vertex(int n, int i) {
  std::vector<Scalar> t(n + 1, Scalar(0));
  t.at(i) = 1;
  return BaryPoint(std::move(t));
}

BaryPoint BaryPoint::barycenter(int n, const std::vector<int>& face) {
  if (face.empty()) throw std::invalid_argument("barycenter of empty face");
  std::vector<Scalar> t(n + 1, Scalar(0));
  for (int i : face) t.at(i) += Scalar(1, static_cast<int>(face.size()));
  return BaryPoint(std::move(t));
}

// ---------------------------------------------------------------------------

SimplexForm::SimplexForm(int dim) : n_(dim), poly_(dim) {
  if (dim < 0) throw std::invalid_argument("negative simplex dimension");
}

SimplexForm SimplexForm::canonicalize(int dim, const PolyForm& ambient) {
  if (ambient.num_vars() != dim + 1) throw std::invalid_argument("canonicalize: wrong variable count");
  AffineMap f;
  f.new_vars = dim;
  f.linear = DenseMatrix<Scalar>::Zero(dim + 1, dim);
  f.offset.assign(dim + 1, Scalar(0));
  for (int i = 0; i < dim; ++i) {
    f.linear(i, i) = 1;
    f.linear(dim, i) = -1;
  }
  f.offset[dim] = 1;
  return {dim, pullback(ambient, f)};
}

SimplexForm SimplexForm::from_canonical(int dim, PolyForm canonical) {
  if (canonical.num_vars() != dim) throw std::invalid_argument("from_canonical: wrong variable count");
  return {dim, std::move(canonical)};
}

SimplexForm SimplexForm::constant(int dim, const Scalar& c) {
  return {dim, PolyForm::constant(dim, c)};
}

SimplexForm SimplexForm::coordinate(int dim, int i) {
  return canonicalize(dim, PolyForm::coordinate(dim + 1, i));
}

SimplexForm SimplexForm::differential(int dim, int i) {
  return canonicalize(dim, PolyForm::differential(dim + 1, i));
}

void SimplexForm::check_same(const SimplexForm& o) const {
  if (n_ != o.n_) throw std::invalid_argument("forms on simplices of different dimension");
}

SimplexForm& SimplexForm::operator+=(const SimplexForm& o) {
  check_same(o);
  poly_ += o.poly_;
  return *this;
}

SimplexForm& SimplexForm::operator-=(const SimplexForm& o) {
  check_same(o);
  poly_ -= o.poly_;
  return *this;
}

SimplexForm& SimplexForm::operator*=(const Scalar& k) {
  poly_ *= k;
  return *this;
}

std::string to_string(const SimplexForm& a) { return to_string(a.poly(), "t", 0); }

SimplexForm parse_simplex_form(std::string_view text, int dim) {
  return SimplexForm::canonicalize(dim, parse_poly_form(text, dim + 1, "t", 0));
}

SimplexForm wedge(const SimplexForm& a, const SimplexForm& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("wedge: dimension mismatch");
  return SimplexForm::from_canonical(a.dim(), wedge(a.poly(), b.poly()));
}

SimplexForm exterior_derivative(const SimplexForm& a) {
  return SimplexForm::from_canonical(a.dim(), exterior_derivative(a.poly()));
}

SimplexForm whitney_form(int n, std::span<const int> indices, bool barred) {
  const int m = static_cast<int>(indices.size());
  if (m == 0) throw std::invalid_argument("whitney form needs at least one index");
  for (int a = 0; a < m; ++a) {
    if (indices[a] < 0 || indices[a] > n) throw std::out_of_range("whitney index out of range");
    for (int b = 0; b < a; ++b)
      if (indices[a] == indices[b]) throw std::invalid_argument("repeated whitney index");
  }
  PolyForm amb(n + 1);
  for (int l = 0; l < m; ++l) {
    PolyForm term = PolyForm::coordinate(n + 1, indices[l]);
    for (int r = 0; r < m; ++r)
      if (r != l) term = wedge(term, PolyForm::differential(n + 1, indices[r]));
    if (l % 2) term *= Scalar(-1);
    amb += term;
  }
  if (barred) amb *= factorial(m - 1);
  return SimplexForm::canonicalize(n, amb);
}

SimplexForm whitney_form(int n, std::initializer_list<int> indices, bool barred) {
  std::vector<int> v(indices);
  return whitney_form(n, std::span<const int>(v), barred);
}

SimplexForm contract_E(int i, const SimplexForm& a) {
  const int n = a.dim();
  if (i < 0 || i > n) throw std::out_of_range("contract_E index");
  std::vector<PolyForm> field;
  for (int j = 0; j < n; ++j) {
    PolyForm v = -PolyForm::coordinate(n, j);
    if (j == i) v += PolyForm::constant(n, 1);
    field.push_back(std::move(v));
  }
  return SimplexForm::from_canonical(n, interior_product(field, a.poly()));
}

SimplexForm cone_homotopy(const BaryPoint& q, const SimplexForm& a) {
  const int n = a.dim();
  if (q.dim() != n) throw std::invalid_argument("cone point on a different simplex");
  PolyForm out(n);
  for (const auto& [key, c] : a.poly().terms()) {
    const int p = key.form_degree();
    if (p == 0) continue;
    std::vector<int> S;
    for (int j = 0; j < n; ++j)
      if (key.wedge & (1u << j)) S.push_back(j);
    // Enumerate b <= a componentwise.
    Exponents b{};
    while (true) {
      Scalar coef = c;
      int total_a = 0, total_b = 0;
      for (int j = 0; j < n && coef != 0; ++j) {
        total_a += key.exps[j];
        total_b += b[j];
        coef *= binomial(key.exps[j], b[j]);
        for (int e = b[j]; e < key.exps[j]; ++e) coef *= q[j];
      }
      if (coef != 0) {
        // int_0^1 s^m (1-s)^r ds with m = |a|-|b| and r = |b| + p - 1
        const int m = total_a - total_b, r = total_b + p - 1;
        coef *= factorial(m) * factorial(r) / factorial(m + r + 1);
        for (int k = 0; k < p; ++k) {
          const int sk = S[k];
          const std::uint32_t rest = key.wedge & ~(1u << sk);
          const Scalar sgn = k % 2 ? -1 : 1;
          out.add_term(TermKey{rest, b}, sgn * coef * q[sk]);
          Exponents bb = b;
          bb[sk] += 1;
          out.add_term(TermKey{rest, bb}, -sgn * coef);
        }
      }
      int j = 0;
      while (j < n && b[j] == key.exps[j]) b[j++] = 0;
      if (j == n) break;
      ++b[j];
    }
  }
  return SimplexForm::from_canonical(n, std::move(out));
}

SimplexForm cone_homotopy(int vertex, const SimplexForm& a) {
  return cone_homotopy(BaryPoint::vertex(a.dim(), vertex), a);
}

Scalar eval_scalar(const BaryPoint& q, const SimplexForm& a) {
  if (q.dim() != a.dim()) throw std::invalid_argument("evaluation point on a different simplex");
  std::vector<Scalar> pt(q.coords().begin(), q.coords().end() - 1);
  return evaluate(a.poly(), pt);
}

SimplexForm eval_at(const BaryPoint& q, const SimplexForm& a) {
  return SimplexForm::constant(a.dim(), eval_scalar(q, a));
}

SimplexForm pullback_linear(const SimplexForm& a, int source_dim, const DenseMatrix<Scalar>& columns) {
  const int n = a.dim();
  if (columns.rows() != n + 1 || columns.cols() != source_dim + 1)
    throw std::invalid_argument("pullback_linear: matrix shape");
  AffineMap f = AffineMap::linear_only(columns.topRows(n));
  return SimplexForm::canonicalize(source_dim, pullback(a.poly(), f));
}

SimplexForm permute(const SimplexForm& a, const std::vector<int>& sigma) {
  const int n = a.dim();
  if (static_cast<int>(sigma.size()) != n + 1) throw std::invalid_argument("permutation size");
  DenseMatrix<Scalar> c = DenseMatrix<Scalar>::Zero(n + 1, n + 1);
  for (int j = 0; j <= n; ++j) c(j, sigma[j]) = 1;
  return pullback_linear(a, n, c);
}

SimplexForm face_pullback(int i, const SimplexForm& a) {
  const int n = a.dim();
  if (n < 1 || i < 0 || i > n) throw std::out_of_range("face index");
  DenseMatrix<Scalar> c = DenseMatrix<Scalar>::Zero(n + 1, n);
  for (int k = 0; k < n; ++k) c(k < i ? k : k + 1, k) = 1;
  return pullback_linear(a, n - 1, c);
}

SimplexForm restrict_to_face(const std::vector<int>& face, const SimplexForm& a) {
  const int n = a.dim(), m = static_cast<int>(face.size()) - 1;
  if (m < 0) throw std::invalid_argument("empty face");
  DenseMatrix<Scalar> c = DenseMatrix<Scalar>::Zero(n + 1, m + 1);
  for (int k = 0; k <= m; ++k) c(face[k], k) = 1;
  return pullback_linear(a, m, c);
}

Scalar integrate_face(const std::vector<int>& face, const SimplexForm& a, IntegrationMethod method) {
  const int p = static_cast<int>(face.size()) - 1;
  if (p < 0) throw std::invalid_argument("empty face");
  if (a.is_zero()) return 0;
  const int deg = a.degree();
  if (deg != -1 && deg != p) throw std::domain_error("integrand degree does not match face dimension");
  const SimplexForm w = a.homogeneous_part(p);
  if (method == IntegrationMethod::Homotopy) {
    SimplexForm x = w;
    for (int k = 0; k < p; ++k) x = cone_homotopy(face[k], x);
    Scalar v = eval_scalar(BaryPoint::vertex(a.dim(), face[p]), x);
    return p % 2 ? Scalar(-v) : v;
  }
  // Pull back to Delta^p; the chart (u_0..u_{p-1}) lists the vertices as
  // e_p, e_0, .., e_{p-1} in positive orientation, a cyclic shift of sign (-1)^p.
  const SimplexForm r = restrict_to_face(face, w);
  const std::uint32_t top = p == 0 ? 0u : ((1u << p) - 1);
  Scalar acc = 0;
  for (const auto& [key, c] : r.poly().terms()) {
    if (key.wedge != top) continue;
    Scalar v = c;
    int total = 0;
    for (int j = 0; j < p; ++j) {
      v *= factorial(key.exps[j]);
      total += key.exps[j];
    }
    acc += v / factorial(total + p);
  }
  return p % 2 ? Scalar(-acc) : acc;
}

SimplexForm random_form(int n, int p, int d, std::uint64_t seed) {
  if (p < 0 || p > n) throw std::invalid_argument("random_form: form degree out of range");
  if (d < 0) throw std::invalid_argument("random_form: negative polynomial degree");
  ProbeRng rng(seed ^ (static_cast<std::uint64_t>(n) << 40) ^ (static_cast<std::uint64_t>(p) << 48) ^
               (static_cast<std::uint64_t>(d) << 56));
  while (true) {
    PolyForm amb(n + 1);
    const int terms = 1 + rng.below(3);
    for (int t = 0; t < terms; ++t) {
      // p distinct wedge indices out of n+1
      std::vector<int> idx(n + 1);
      std::iota(idx.begin(), idx.end(), 0);
      std::uint32_t wedge = 0;
      for (int k = 0; k < p; ++k) {
        const int r = k + rng.below(n + 1 - k);
        std::swap(idx[k], idx[r]);
        wedge |= 1u << idx[k];
      }
      Exponents e{};
      const int total = rng.below(d + 1);
      for (int k = 0; k < total; ++k) e[rng.below(n + 1)] += 1;
      int c = rng.below(6) - 3;
      if (c >= 0) ++c;
      amb.add_term(TermKey{wedge, e}, c);
    }
    SimplexForm f = SimplexForm::canonicalize(n, amb);
    if (!f.is_zero()) return f;
  }
}

std::vector<SimplexForm> monomial_forms(int n, int p, int d) {
  std::vector<SimplexForm> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (popcount(mask) != p) continue;
    Exponents e{};
    while (true) {
      int total = 0;
      for (int j = 0; j < n; ++j) total += e[j];
      if (total <= d) out.push_back(SimplexForm::from_canonical(n, PolyForm::monomial(n, 1, e, mask)));
      int j = 0;
      while (j < n && e[j] == d) e[j++] = 0;
      if (j == n) break;
      ++e[j];
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

int position(const std::vector<Vertex>& order, Vertex v) {
  for (int i = 0; i < static_cast<int>(order.size()); ++i)
    if (order[i] == v) return i;
  throw std::out_of_range("vertex not in chart: " + vertex_name(v));
}

void check_pieces(const SimplicialComplex& complex, const std::map<Simplex, PiecewiseForm::Piece>& pieces) {
  const auto facets = complex.facets();
  if (facets.size() != pieces.size()) throw std::invalid_argument("one form per facet required");
  for (const Simplex& f : facets) {
    auto it = pieces.find(f);
    if (it == pieces.end()) throw std::invalid_argument("missing piece on " + to_string(f));
    auto sorted = it->second.order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != f.vertices()) throw std::invalid_argument("chart order does not match " + to_string(f));
    if (it->second.form.dim() != f.dim()) throw std::invalid_argument("piece form dimension on " + to_string(f));
  }
}

}  // namespace

SimplexForm reorder_chart(const SimplexForm& a, const std::vector<Vertex>& from, const std::vector<Vertex>& to) {
  if (from == to) return a;
  const int m = static_cast<int>(from.size()) - 1;
  DenseMatrix<Scalar> c = DenseMatrix<Scalar>::Zero(m + 1, m + 1);
  for (int k = 0; k <= m; ++k) c(position(from, to[k]), k) = 1;
  return pullback_linear(a, m, c);
}

PiecewiseForm PiecewiseForm::unchecked(SimplicialComplex complex, std::map<Simplex, Piece> pieces) {
  check_pieces(complex, pieces);
  PiecewiseForm f;
  f.complex_ = std::move(complex);
  f.pieces_ = std::move(pieces);
  return f;
}

PiecewiseForm PiecewiseForm::make(SimplicialComplex complex, std::map<Simplex, Piece> pieces) {
  PiecewiseForm f = unchecked(std::move(complex), std::move(pieces));
  if (auto err = f.compatibility_error()) throw CompatibilityError(*err);
  return f;
}

std::optional<std::string> PiecewiseForm::compatibility_error() const {
  for (auto a = pieces_.begin(); a != pieces_.end(); ++a) {
    for (auto b = std::next(a); b != pieces_.end(); ++b) {
      std::vector<Vertex> common;
      std::set_intersection(a->first.vertices().begin(), a->first.vertices().end(),
                            b->first.vertices().begin(), b->first.vertices().end(),
                            std::back_inserter(common));
      if (common.empty()) continue;
      std::vector<int> pa, pb;
      for (Vertex v : common) {
        pa.push_back(position(a->second.order, v));
        pb.push_back(position(b->second.order, v));
      }
      if (!(restrict_to_face(pa, a->second.form) == restrict_to_face(pb, b->second.form)))
        return "incompatible on face " + to_string(Simplex::from_sorted(common)) + " shared by " +
               to_string(a->first) + " and " + to_string(b->first);
    }
  }
  return std::nullopt;
}

PiecewiseForm PiecewiseForm::normalized() const {
  PiecewiseForm out = *this;
  for (auto& [facet, piece] : out.pieces_) {
    piece.form = reorder_chart(piece.form, piece.order, facet.vertices());
    piece.order = facet.vertices();
  }
  return out;
}

bool PiecewiseForm::is_zero() const {
  for (const auto& [f, p] : pieces_)
    if (!p.form.is_zero()) return false;
  return true;
}

PiecewiseForm& PiecewiseForm::operator+=(const PiecewiseForm& o) {
  if (!(complex_ == o.complex_)) throw std::invalid_argument("piecewise forms on different complexes");
  for (auto& [facet, piece] : pieces_) {
    const Piece& q = o.pieces_.at(facet);
    piece.form += reorder_chart(q.form, q.order, piece.order);
  }
  return *this;
}

PiecewiseForm& PiecewiseForm::operator-=(const PiecewiseForm& o) {
  if (!(complex_ == o.complex_)) throw std::invalid_argument("piecewise forms on different complexes");
  for (auto& [facet, piece] : pieces_) {
    const Piece& q = o.pieces_.at(facet);
    piece.form -= reorder_chart(q.form, q.order, piece.order);
  }
  return *this;
}

bool operator==(const PiecewiseForm& a, const PiecewiseForm& b) {
  if (!(a.complex_ == b.complex_)) return false;
  for (const auto& [facet, piece] : a.pieces_) {
    const auto& q = b.pieces_.at(facet);
    if (!(piece.form == reorder_chart(q.form, q.order, piece.order))) return false;
  }
  return true;
}

std::string to_string(const PiecewiseForm& a) {
  std::string out;
  for (const auto& [facet, piece] : a.pieces()) {
    if (!out.empty()) out += "; ";
    std::string order;
    for (Vertex v : piece.order) order += (order.empty() ? "" : ",") + vertex_name(v);
    out += to_string(facet) + "{" + order + "}: " + to_string(piece.form);
  }
  return out;
}

PiecewiseForm exterior_derivative(const PiecewiseForm& a) {
  return a.map_pieces([](const Simplex&, const PiecewiseForm::Piece& p) { return exterior_derivative(p.form); });
}

PiecewiseForm restrict_global(const SimplexForm& a, const SimplicialComplex& complex,
                              const std::map<Simplex, std::vector<BaryPoint>>& charts) {
  std::map<Simplex, PiecewiseForm::Piece> pieces;
  for (const Simplex& facet : complex.facets()) {
    const auto& pts = charts.at(facet);
    if (static_cast<int>(pts.size()) != facet.dim() + 1) throw std::invalid_argument("chart size");
    DenseMatrix<Scalar> c(a.dim() + 1, facet.dim() + 1);
    for (int k = 0; k <= facet.dim(); ++k)
      for (int j = 0; j <= a.dim(); ++j) c(j, k) = pts[k][j];
    pieces.emplace(facet, PiecewiseForm::Piece{facet.vertices(), pullback_linear(a, facet.dim(), c)});
  }
  return PiecewiseForm::make(complex, std::move(pieces));
}

}  // namespace dupont
