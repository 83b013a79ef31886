#pragma once

#include "dupont/scalar.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dupont {

using Vertex = int;
// The cone point of a stellar subdivision. Negative so it sorts first.
inline constexpr Vertex kStar = -1;

std::string vertex_name(Vertex v);

class Simplex {
 public:
  Simplex() = default;
  // Vertices must be strictly increasing.
  static Simplex from_sorted(std::vector<Vertex> vertices);

  const std::vector<Vertex>& vertices() const { return v_; }
  int dim() const { return static_cast<int>(v_.size()) - 1; }
  bool contains(Vertex x) const { return std::binary_search(v_.begin(), v_.end(), x); }
  bool is_face_of(const Simplex& other) const;

  auto operator<=>(const Simplex&) const = default;

 private:
  std::vector<Vertex> v_;
};

template <class Cell>
struct Oriented {
  Cell cell;
  int sign = 1;
};

// Sorts an ordered vertex list and records the permutation parity.
Oriented<Simplex> orient(std::vector<Vertex> vertices);

int dimension(const Simplex& s);
std::vector<std::pair<Simplex, int>> boundary_terms(const Simplex& s);
std::string to_string(const Simplex& s);
Simplex parse_simplex(const std::string& text);

// Product cell: one simplex of dimension <= 1 per coordinate slot.
class CubeCell {
 public:
  CubeCell() = default;
  explicit CubeCell(std::vector<Simplex> slots);

  const std::vector<Simplex>& slots() const { return slots_; }
  int num_slots() const { return static_cast<int>(slots_.size()); }
  int dim() const;

  auto operator<=>(const CubeCell&) const = default;

 private:
  std::vector<Simplex> slots_;
};

int dimension(const CubeCell& c);
std::vector<std::pair<CubeCell, int>> boundary_terms(const CubeCell& c);
std::string to_string(const CubeCell& c);

template <class Cell>
class CellComplex {
 public:
  CellComplex() = default;

  explicit CellComplex(std::set<Cell> cells) : all_(std::move(cells)) {
    for (const Cell& c : all_) {
      for (const auto& [face, coef] : boundary_terms(c)) {
        (void)coef;
        if (!all_.count(face)) {
          throw std::invalid_argument("complex not face-closed: " + to_string(face) +
                                      " missing below " + to_string(c));
        }
      }
      const int d = dimension(c);
      if (d >= static_cast<int>(by_dim_.size())) by_dim_.resize(d + 1);
      by_dim_[d].push_back(c);
    }
  }

  bool contains(const Cell& c) const { return all_.count(c) > 0; }
  int top_dim() const { return static_cast<int>(by_dim_.size()) - 1; }
  const std::set<Cell>& all() const { return all_; }

  const std::vector<Cell>& cells(int d) const {
    static const std::vector<Cell> kEmpty;
    if (d < 0 || d > top_dim()) return kEmpty;
    return by_dim_[d];
  }
  std::size_t count(int d) const { return cells(d).size(); }

  // Cells that are not a face of any other cell.
  std::vector<Cell> facets() const {
    std::set<Cell> covered;
    for (const Cell& c : all_)
      for (const auto& [face, coef] : boundary_terms(c)) covered.insert(face);
    std::vector<Cell> out;
    for (const Cell& c : all_)
      if (!covered.count(c)) out.push_back(c);
    return out;
  }

  bool operator==(const CellComplex& o) const { return all_ == o.all_; }

 private:
  std::set<Cell> all_;
  std::vector<std::vector<Cell>> by_dim_;
};

using SimplicialComplex = CellComplex<Simplex>;
using CubicalComplex = CellComplex<CubeCell>;

// Face closure of a list of simplices.
SimplicialComplex simplex_closure(const std::vector<Simplex>& generators);
SimplicialComplex standard_simplex(int n);
CubicalComplex standard_cube(int n);
CubicalComplex product_complex(const std::vector<SimplicialComplex>& slots);

// ---------------------------------------------------------------------------
// Formal sums of cells.

struct ChainTag {};
struct CochainTag {};

template <class Cell, class Tag, class S = Scalar>
class FormalSum {
 public:
  using Map = std::map<Cell, S>;

  FormalSum() = default;
  static FormalSum basis(const Cell& c, const S& coef = S(1)) {
    FormalSum f;
    f.add(c, coef);
    return f;
  }

  void add(const Cell& c, const S& coef) {
    if (coef == 0) return;
    auto [it, inserted] = terms_.try_emplace(c, coef);
    if (!inserted) {
      it->second += coef;
      if (it->second == 0) terms_.erase(it);
    }
  }
  void add(const Oriented<Cell>& c, const S& coef) {
    if (c.sign != 0) add(c.cell, c.sign > 0 ? S(coef) : S(-coef));
  }

  S coefficient(const Cell& c) const {
    auto it = terms_.find(c);
    return it == terms_.end() ? S(0) : it->second;
  }
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  FormalSum degree_part(int d) const {
    FormalSum out;
    for (const auto& [c, v] : terms_)
      if (dimension(c) == d) out.terms_.emplace(c, v);
    return out;
  }

  FormalSum& operator+=(const FormalSum& o) {
    for (const auto& [c, v] : o.terms_) add(c, v);
    return *this;
  }
  FormalSum& operator-=(const FormalSum& o) {
    for (const auto& [c, v] : o.terms_) add(c, -v);
    return *this;
  }
  FormalSum& operator*=(const S& k) {
    if (k == 0) {
      terms_.clear();
    } else {
      for (auto& [c, v] : terms_) v *= k;
    }
    return *this;
  }
  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
  friend FormalSum operator-(FormalSum a) { return a *= S(-1); }
  friend FormalSum operator*(const S& k, FormalSum a) { return a *= k; }
  friend bool operator==(const FormalSum& a, const FormalSum& b) { return a.terms_ == b.terms_; }

 private:
  Map terms_;
};

template <class Cell, class S = Scalar>
using Chain = FormalSum<Cell, ChainTag, S>;
template <class Cell, class S = Scalar>
using Cochain = FormalSum<Cell, CochainTag, S>;

// "c1*cell1 + c2*cell2"; cochains print cells with a trailing '^'.
template <class Cell, class Tag, class S>
std::string to_string(const FormalSum<Cell, Tag, S>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [c, v] : f.terms()) {
    if (!out.empty()) out += " + ";
    out += v.str() + "*" + to_string(c);
    if constexpr (std::is_same_v<Tag, CochainTag>) out += "^";
  }
  return out;
}

template <class Cell, class S>
Chain<Cell, S> boundary(const Chain<Cell, S>& c, const CellComplex<Cell>& complex) {
  Chain<Cell, S> out;
  for (const auto& [cell, v] : c.terms()) {
    if (!complex.contains(cell)) throw std::domain_error("cell not in complex: " + to_string(cell));
    for (const auto& [face, sign] : boundary_terms(cell)) out.add(face, sign > 0 ? S(v) : S(-v));
  }
  return out;
}

template <class Cell, class S>
Cochain<Cell, S> coboundary(const Cochain<Cell, S>& x, const CellComplex<Cell>& complex) {
  for (const auto& [cell, v] : x.terms())
    if (!complex.contains(cell)) throw std::domain_error("cell not in complex: " + to_string(cell));
  Cochain<Cell, S> out;
  if (x.is_zero()) return out;
  for (const Cell& tau : complex.all()) {
    S acc = 0;
    for (const auto& [face, sign] : boundary_terms(tau)) {
      S v = x.coefficient(face);
      if (v != 0) acc += sign > 0 ? v : S(-v);
    }
    out.add(tau, acc);
  }
  return out;
}

template <class Cell, class S>
S pair(const Cochain<Cell, S>& x, const Chain<Cell, S>& c) {
  S acc = 0;
  for (const auto& [cell, v] : c.terms()) acc += v * x.coefficient(cell);
  return acc;
}

// Pullback of a simplicial cochain along a vertex map f: (f^# x)(F) = x(f(F)),
// with degenerate images contributing zero.
template <class S>
Cochain<Simplex, S> pullback_cochain(const Cochain<Simplex, S>& x, const SimplicialComplex& source,
                                     const std::map<Vertex, Vertex>& f) {
  Cochain<Simplex, S> out;
  for (const Simplex& s : source.all()) {
    std::vector<Vertex> image;
    for (Vertex v : s.vertices()) image.push_back(f.at(v));
    std::vector<Vertex> sorted = image;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
    auto o = orient(image);
    S v = x.coefficient(o.cell);
    out.add(s, o.sign > 0 ? v : S(-v));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Graded bases and matrices.

template <class Cell>
class GradedBasis {
 public:
  GradedBasis() = default;
  explicit GradedBasis(const CellComplex<Cell>& complex) {
    for (int d = 0; d <= complex.top_dim(); ++d) cells_.push_back(complex.cells(d));
    reindex();
  }
  static GradedBasis from_cells(std::vector<std::vector<Cell>> cells) {
    GradedBasis b;
    b.cells_ = std::move(cells);
    for (auto& v : b.cells_) std::sort(v.begin(), v.end());
    b.reindex();
    return b;
  }

  int top_degree() const { return static_cast<int>(cells_.size()) - 1; }
  int size(int d) const {
    return (d < 0 || d > top_degree()) ? 0 : static_cast<int>(cells_[d].size());
  }
  const std::vector<Cell>& cells(int d) const { return cells_.at(d); }
  const Cell& cell(int d, int i) const { return cells_.at(d).at(i); }
  std::optional<int> index(const Cell& c) const {
    auto it = index_.find(c);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  int total_size() const {
    int t = 0;
    for (const auto& v : cells_) t += static_cast<int>(v.size());
    return t;
  }
  bool operator==(const GradedBasis& o) const { return cells_ == o.cells_; }

 private:
  void reindex() {
    index_.clear();
    for (const auto& v : cells_)
      for (int i = 0; i < static_cast<int>(v.size()); ++i) index_[v[i]] = i;
  }

  std::vector<std::vector<Cell>> cells_;
  std::map<Cell, int> index_;
};

template <class Cell, class S = Scalar>
class GradedLinearMap {
 public:
  using Matrix = DenseMatrix<S>;

  GradedLinearMap() = default;
  GradedLinearMap(GradedBasis<Cell> domain, GradedBasis<Cell> codomain, int shift)
      : domain_(std::move(domain)), codomain_(std::move(codomain)), shift_(shift) {
    for (int d = 0; d <= domain_.top_degree(); ++d)
      blocks_.push_back(Matrix::Zero(codomain_.size(d + shift_), domain_.size(d)));
  }

  // f maps a domain cell to a formal sum (either tag) over codomain cells.
  template <class F>
  static GradedLinearMap from_function(const GradedBasis<Cell>& domain,
                                       const GradedBasis<Cell>& codomain, int shift, F f) {
    GradedLinearMap m(domain, codomain, shift);
    for (int d = 0; d <= domain.top_degree(); ++d) {
      for (int j = 0; j < domain.size(d); ++j) {
        auto image = f(domain.cell(d, j));
        for (const auto& [c, v] : image.terms()) {
          auto i = codomain.index(c);
          if (!i || dimension(c) != d + shift)
            throw std::domain_error("image cell outside codomain: " + to_string(c));
          m.blocks_[d](*i, j) += v;
        }
      }
    }
    return m;
  }

  static GradedLinearMap identity(const GradedBasis<Cell>& basis) {
    GradedLinearMap m(basis, basis, 0);
    for (int d = 0; d <= basis.top_degree(); ++d) m.blocks_[d].setIdentity();
    return m;
  }

  const GradedBasis<Cell>& domain() const { return domain_; }
  const GradedBasis<Cell>& codomain() const { return codomain_; }
  int shift() const { return shift_; }
  const Matrix& block(int d) const { return blocks_.at(d); }
  Matrix& block(int d) { return blocks_.at(d); }

  template <class Tag>
  FormalSum<Cell, Tag, S> apply(const FormalSum<Cell, Tag, S>& x) const {
    FormalSum<Cell, Tag, S> out;
    for (const auto& [c, v] : x.terms()) {
      auto j = domain_.index(c);
      if (!j) throw std::domain_error("cell outside domain: " + to_string(c));
      const int d = dimension(c);
      const Matrix& b = blocks_[d];
      for (int i = 0; i < b.rows(); ++i)
        if (b(i, *j) != 0) out.add(codomain_.cell(d + shift_, i), b(i, *j) * v);
    }
    return out;
  }

  // Image of a single basis cell as a formal sum.
  template <class Tag = ChainTag>
  FormalSum<Cell, Tag, S> column(int d, int j) const {
    FormalSum<Cell, Tag, S> out;
    const Matrix& b = blocks_.at(d);
    for (int i = 0; i < b.rows(); ++i)
      if (b(i, j) != 0) out.add(codomain_.cell(d + shift_, i), b(i, j));
    return out;
  }

  GradedLinearMap transpose() const {
    GradedLinearMap t(codomain_, domain_, -shift_);
    for (int e = 0; e <= codomain_.top_degree(); ++e) {
      const int d = e - shift_;
      if (d >= 0 && d <= domain_.top_degree()) t.blocks_[e] = blocks_[d].transpose();
    }
    return t;
  }

  GradedLinearMap& operator*=(const S& k) {
    for (auto& b : blocks_) b *= k;
    return *this;
  }

  friend GradedLinearMap operator*(const GradedLinearMap& f, const GradedLinearMap& g) {
    if (!(f.domain_ == g.codomain_)) throw std::domain_error("composition of mismatched maps");
    GradedLinearMap out(g.domain_, f.codomain_, f.shift_ + g.shift_);
    for (int d = 0; d <= g.domain_.top_degree(); ++d) {
      const int mid = d + g.shift_;
      if (mid < 0 || mid > f.domain_.top_degree()) continue;
      out.blocks_[d] = f.blocks_[mid] * g.blocks_[d];
    }
    return out;
  }
  friend GradedLinearMap operator+(GradedLinearMap f, const GradedLinearMap& g) {
    f.check_compatible(g);
    for (std::size_t d = 0; d < f.blocks_.size(); ++d) f.blocks_[d] += g.blocks_[d];
    return f;
  }
  friend GradedLinearMap operator-(GradedLinearMap f, const GradedLinearMap& g) {
    f.check_compatible(g);
    for (std::size_t d = 0; d < f.blocks_.size(); ++d) f.blocks_[d] -= g.blocks_[d];
    return f;
  }
  friend GradedLinearMap operator*(const S& k, GradedLinearMap f) { return f *= k; }
  friend bool operator==(const GradedLinearMap& f, const GradedLinearMap& g) {
    if (!(f.domain_ == g.domain_) || !(f.codomain_ == g.codomain_) || f.shift_ != g.shift_)
      return false;
    for (std::size_t d = 0; d < f.blocks_.size(); ++d)
      if (f.blocks_[d] != g.blocks_[d]) return false;
    return true;
  }

 private:
  void check_compatible(const GradedLinearMap& g) const {
    if (!(domain_ == g.domain_) || !(codomain_ == g.codomain_) || shift_ != g.shift_)
      throw std::domain_error("sum of mismatched maps");
  }

  GradedBasis<Cell> domain_, codomain_;
  int shift_ = 0;
  std::vector<Matrix> blocks_;
};

template <class Cell, class S>
GradedLinearMap<Cell, S> dualize_map(const GradedLinearMap<Cell, S>& f) {
  return f.transpose();
}

template <class Cell, class S = Scalar>
GradedLinearMap<Cell, S> boundary_map(const CellComplex<Cell>& complex) {
  GradedBasis<Cell> b(complex);
  return GradedLinearMap<Cell, S>::from_function(b, b, -1, [&](const Cell& c) {
    return boundary(Chain<Cell, S>::basis(c), complex);
  });
}

template <class Cell, class S = Scalar>
GradedLinearMap<Cell, S> coboundary_map(const CellComplex<Cell>& complex) {
  return boundary_map<Cell, S>(complex).transpose();
}

// ---------------------------------------------------------------------------
// Deformation retractions.

enum class Side { Chains, Cochains };

template <class Cell, class S = Scalar>
struct GradedSpace {
  GradedBasis<Cell> basis;
  GradedLinearMap<Cell, S> differential;

  static GradedSpace of(const CellComplex<Cell>& complex, Side side) {
    auto bd = boundary_map<Cell, S>(complex);
    return {GradedBasis<Cell>(complex), side == Side::Chains ? bd : bd.transpose()};
  }
};

// Retraction of `big` onto `small`.
template <class Cell, class S = Scalar>
struct DeformationRetraction {
  GradedSpace<Cell, S> small, big;
  GradedLinearMap<Cell, S> inclusion;   // small -> big
  GradedLinearMap<Cell, S> projection;  // big -> small
  GradedLinearMap<Cell, S> homotopy;    // big -> big, opposite shift to the differential
};

template <class Cell, class S>
DeformationRetraction<Cell, S> identity_dr(const GradedSpace<Cell, S>& space) {
  auto one = GradedLinearMap<Cell, S>::identity(space.basis);
  return {space, space, one, one, GradedLinearMap<Cell, S>(space.basis, space.basis, -space.differential.shift())};
}

template <class Cell, class S>
DeformationRetraction<Cell, S> compose_dr(const DeformationRetraction<Cell, S>& outer,
                                          const DeformationRetraction<Cell, S>& inner) {
  if (!(outer.small.basis == inner.big.basis))
    throw std::domain_error("compose_dr: inner target does not match outer source");
  return {inner.small, outer.big, outer.inclusion * inner.inclusion,
          inner.projection * outer.projection,
          outer.homotopy + outer.inclusion * inner.homotopy * outer.projection};
}

// Chains to cochains: i^ = p^T, p^ = i^T, a^ = a^T.
template <class Cell, class S>
DeformationRetraction<Cell, S> dualize_dr(const DeformationRetraction<Cell, S>& r) {
  return {{r.small.basis, r.small.differential.transpose()},
          {r.big.basis, r.big.differential.transpose()},
          r.projection.transpose(),
          r.inclusion.transpose(),
          r.homotopy.transpose()};
}

struct IdentityCheck {
  std::string name;
  bool passed = true;
  std::string input, lhs, rhs;  // first failing basis element
};

struct DrReport {
  std::vector<IdentityCheck> identities;
  bool all_passed() const {
    return std::all_of(identities.begin(), identities.end(),
                       [](const IdentityCheck& c) { return c.passed; });
  }
  const IdentityCheck& get(const std::string& name) const {
    for (const auto& c : identities)
      if (c.name == name) return c;
    throw std::out_of_range(name);
  }
};

inline const char* const kDrIdentityNames[5] = {
    "p*i = 1", "d*a + a*d = 1 - i*p", "a*a = 0", "a*i = 0", "p*a = 0"};

template <class Cell, class S>
IdentityCheck compare_maps(const std::string& name, const GradedLinearMap<Cell, S>& lhs,
                           const GradedLinearMap<Cell, S>& rhs) {
  IdentityCheck out;
  out.name = name;
  const auto& dom = lhs.domain();
  for (int d = 0; d <= dom.top_degree(); ++d) {
    for (int j = 0; j < dom.size(d); ++j) {
      if (lhs.block(d).col(j) != rhs.block(d).col(j)) {
        out.passed = false;
        out.input = to_string(dom.cell(d, j));
        out.lhs = to_string(lhs.column(d, j));
        out.rhs = to_string(rhs.column(d, j));
        return out;
      }
    }
  }
  return out;
}

template <class Cell, class S>
DrReport check_dr(const DeformationRetraction<Cell, S>& r) {
  using Map = GradedLinearMap<Cell, S>;
  const Map one_small = Map::identity(r.small.basis);
  const Map one_big = Map::identity(r.big.basis);
  const Map zero_big(r.big.basis, r.big.basis, 2 * r.homotopy.shift());
  const Map zero_ai(r.small.basis, r.big.basis, r.homotopy.shift());
  const Map zero_pa(r.big.basis, r.small.basis, r.homotopy.shift());
  const Map& d = r.big.differential;
  DrReport rep;
  rep.identities.push_back(compare_maps(kDrIdentityNames[0], r.projection * r.inclusion, one_small));
  rep.identities.push_back(compare_maps(kDrIdentityNames[1], d * r.homotopy + r.homotopy * d,
                                        one_big - r.inclusion * r.projection));
  rep.identities.push_back(compare_maps(kDrIdentityNames[2], r.homotopy * r.homotopy, zero_big));
  rep.identities.push_back(compare_maps(kDrIdentityNames[3], r.homotopy * r.inclusion, zero_ai));
  rep.identities.push_back(compare_maps(kDrIdentityNames[4], r.projection * r.homotopy, zero_pa));
  return rep;
}

// i and p commute with the differentials.
template <class Cell, class S>
std::pair<IdentityCheck, IdentityCheck> check_chain_maps(const DeformationRetraction<Cell, S>& r) {
  return {compare_maps("d*i = i*d", r.big.differential * r.inclusion,
                       r.inclusion * r.small.differential),
          compare_maps("d*p = p*d", r.small.differential * r.projection,
                       r.projection * r.big.differential)};
}

}  // namespace dupont
