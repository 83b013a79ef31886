#include "dupont/complexes.hpp"

#include <sstream>

namespace dupont {

Scalar factorial(int n) {
  Scalar r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Scalar binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Scalar r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Scalar parse_scalar(const std::string& text) {
  try {
    return Scalar(text);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad scalar: " + text);
  }
}

std::string vertex_name(Vertex v) { return v == kStar ? "*" : std::to_string(v); }

Simplex Simplex::from_sorted(std::vector<Vertex> vertices) {
  if (vertices.empty()) throw std::invalid_argument("empty simplex");
  for (std::size_t i = 1; i < vertices.size(); ++i)
    if (vertices[i - 1] >= vertices[i])
      throw std::invalid_argument("simplex vertices not strictly increasing");
  for (Vertex v : vertices)
    if (v < kStar) throw std::invalid_argument("bad vertex id");
  Simplex s;
  s.v_ = std::move(vertices);
  return s;
}

bool Simplex::is_face_of(const Simplex& other) const {
  return std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end());
}

Oriented<Simplex> orient(std::vector<Vertex> vertices) {
  int sign = 1;
  // insertion sort counting transpositions
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    for (std::size_t j = i; j > 0 && vertices[j - 1] > vertices[j]; --j) {
      std::swap(vertices[j - 1], vertices[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < vertices.size(); ++i)
    if (vertices[i - 1] == vertices[i])
      throw std::invalid_argument("repeated vertex " + vertex_name(vertices[i]));
  return {Simplex::from_sorted(std::move(vertices)), sign};
}

int dimension(const Simplex& s) { return s.dim(); }

std::vector<std::pair<Simplex, int>> boundary_terms(const Simplex& s) {
  std::vector<std::pair<Simplex, int>> out;
  const auto& v = s.vertices();
  if (v.size() < 2) return out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::vector<Vertex> f;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (j != i) f.push_back(v[j]);
    out.emplace_back(Simplex::from_sorted(std::move(f)), i % 2 == 0 ? 1 : -1);
  }
  return out;
}

std::string to_string(const Simplex& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.vertices().size(); ++i) {
    if (i) out += ",";
    out += vertex_name(s.vertices()[i]);
  }
  return out + "]";
}

Simplex parse_simplex(const std::string& text) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw std::invalid_argument("bad cell: " + text);
  std::vector<Vertex> vs;
  std::stringstream ss(text.substr(1, text.size() - 2));
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok == "*") {
      vs.push_back(kStar);
    } else {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size() || v < 0) throw std::invalid_argument("bad vertex: " + tok);
      vs.push_back(v);
    }
  }
  auto o = orient(vs);
  if (o.sign != 1) throw std::invalid_argument("cell not in canonical order: " + text);
  return o.cell;
}

CubeCell::CubeCell(std::vector<Simplex> slots) : slots_(std::move(slots)) {
  for (const auto& s : slots_)
    if (s.dim() > 1) throw std::invalid_argument("cube slot cell of dimension > 1");
}

int CubeCell::dim() const {
  int d = 0;
  for (const auto& s : slots_) d += s.dim();
  return d;
}

int dimension(const CubeCell& c) { return c.dim(); }

std::vector<std::pair<CubeCell, int>> boundary_terms(const CubeCell& c) {
  std::vector<std::pair<CubeCell, int>> out;
  int left = 0;
  for (int j = 0; j < c.num_slots(); ++j) {
    const Simplex& slot = c.slots()[j];
    for (const auto& [face, sign] : boundary_terms(slot)) {
      auto slots = c.slots();
      slots[j] = face;
      out.emplace_back(CubeCell(std::move(slots)), left % 2 == 0 ? sign : -sign);
    }
    left += slot.dim();
  }
  return out;
}

std::string to_string(const CubeCell& c) {
  std::string out;
  for (int j = 0; j < c.num_slots(); ++j) {
    if (j) out += "x";
    out += to_string(c.slots()[j]);
  }
  return out;
}

SimplicialComplex simplex_closure(const std::vector<Simplex>& generators) {
  std::set<Simplex> cells;
  for (const Simplex& g : generators) {
    const auto& v = g.vertices();
    const int m = static_cast<int>(v.size());
    for (int mask = 1; mask < (1 << m); ++mask) {
      std::vector<Vertex> f;
      for (int i = 0; i < m; ++i)
        if (mask & (1 << i)) f.push_back(v[i]);
      cells.insert(Simplex::from_sorted(std::move(f)));
    }
  }
  return SimplicialComplex(std::move(cells));
}

SimplicialComplex standard_simplex(int n) {
  if (n < 0) throw std::invalid_argument("negative dimension");
  std::vector<Vertex> v(n + 1);
  for (int i = 0; i <= n; ++i) v[i] = i;
  return simplex_closure({Simplex::from_sorted(v)});
}

CubicalComplex product_complex(const std::vector<SimplicialComplex>& slots) {
  std::vector<std::vector<Simplex>> acc{{}};
  for (const auto& k : slots) {
    std::vector<std::vector<Simplex>> next;
    for (const auto& prefix : acc)
      for (const Simplex& s : k.all()) {
        auto p = prefix;
        p.push_back(s);
        next.push_back(std::move(p));
      }
    acc = std::move(next);
  }
  std::set<CubeCell> cells;
  for (auto& v : acc) cells.insert(CubeCell(std::move(v)));
  return CubicalComplex(std::move(cells));
}

CubicalComplex standard_cube(int n) {
  if (n < 0) throw std::invalid_argument("negative dimension");
  return product_complex(std::vector<SimplicialComplex>(n, standard_simplex(1)));
}

}  // namespace dupont
