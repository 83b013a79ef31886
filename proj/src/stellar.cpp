#include "dupont/stellar.hpp"

#include "dupont/cube_dupont.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dupont {

namespace {

Simplex S(std::vector<Vertex> v) { return Simplex::from_sorted(std::move(v)); }

void validate(int n, const VertexSet& I) {
  if (n < 1) throw std::invalid_argument("star: n must be positive");
  if (I.empty()) throw std::invalid_argument("star: I must be nonempty");
  for (std::size_t i = 0; i < I.size(); ++i) {
    if (I[i] < 0 || I[i] > n) throw std::invalid_argument("star: I not inside {0..n}: " + to_string(I));
    if (i && I[i] <= I[i - 1]) throw std::invalid_argument("star: I must be strictly increasing");
  }
}

bool contains_all(const std::vector<Vertex>& J, const VertexSet& I) {
  return std::includes(J.begin(), J.end(), I.begin(), I.end());
}

bool in(const VertexSet& I, Vertex v) { return std::binary_search(I.begin(), I.end(), v); }

std::vector<Vertex> without(const std::vector<Vertex>& J, std::size_t i) {
  auto out = J;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
  return out;
}

std::vector<Vertex> starred(std::vector<Vertex> J) {
  J.insert(J.begin(), kStar);
  return J;
}

// Vertices of a cell split into (has star, rest).
std::pair<bool, std::vector<Vertex>> split(const Simplex& c) {
  const auto& v = c.vertices();
  if (!v.empty() && v.front() == kStar) return {true, {v.begin() + 1, v.end()}};
  return {false, v};
}

template <class Sum>
void add_oriented(Sum& out, std::vector<Vertex> ordered, const Scalar& c) {
  auto o = orient(std::move(ordered));
  out.add(o.cell, o.sign > 0 ? c : Scalar(-c));
}

// sum_{j_i in I} (-1)^i [*, J \ j_i]
template <class Sum>
void add_star_faces(Sum& out, const std::vector<Vertex>& J, const VertexSet& I, const Scalar& w) {
  for (std::size_t i = 0; i < J.size(); ++i)
    if (in(I, J[i])) out.add(S(starred(without(J, i))), i % 2 ? Scalar(-w) : w);
}

std::vector<Vertex> set_minus(const VertexSet& I, const std::vector<Vertex>& J) {
  std::vector<Vertex> out;
  std::set_difference(I.begin(), I.end(), J.begin(), J.end(), std::back_inserter(out));
  return out;
}

std::string perm_string(const std::vector<int>& sigma) {
  std::string s = "sigma=(";
  for (std::size_t i = 0; i < sigma.size(); ++i) s += (i ? "," : "") + std::to_string(sigma[i]);
  return s + ")";
}

}  // namespace

std::string to_string(const VertexSet& I) {
  std::string s = "{";
  for (std::size_t i = 0; i < I.size(); ++i) s += (i ? "," : "") + std::to_string(I[i]);
  return s + "}";
}

VertexSet parse_vertex_set(const std::string& text) {
  VertexSet out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad vertex list: " + text);
    }
    if (used != item.size()) throw std::invalid_argument("bad vertex list: " + text);
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw std::invalid_argument("repeated vertex in " + text);
  return out;
}

std::vector<VertexSet> all_faces(int n) {
  std::vector<VertexSet> out;
  for (std::uint32_t mask = 1; mask < (1u << (n + 1)); ++mask) {
    VertexSet I;
    for (int v = 0; v <= n; ++v)
      if ((mask >> v) & 1u) I.push_back(v);
    out.push_back(I);
  }
  return out;
}

SimplicialComplex star_complex(int n, const VertexSet& I) {
  validate(n, I);
  std::set<Simplex> cells;
  for (std::uint32_t mask = 0; mask < (1u << (n + 1)); ++mask) {
    std::vector<Vertex> J;
    for (int v = 0; v <= n; ++v)
      if ((mask >> v) & 1u) J.push_back(v);
    if (contains_all(J, I)) continue;
    if (!J.empty()) cells.insert(S(J));
    cells.insert(S(starred(J)));
  }
  return SimplicialComplex(std::move(cells));
}

SimplicialDR welding_dr(int n, const VertexSet& I, Side side) {
  validate(n, I);
  const auto base = standard_simplex(n);
  const auto star = star_complex(n, I);
  const Scalar w(1, static_cast<int>(I.size()));
  using Map = GradedLinearMap<Simplex>;
  const GradedBasis<Simplex> small(base), big(star);

  auto inclusion = Map::from_function(small, big, 0, [&](const Simplex& c) {
    Chain<Simplex> out;
    const auto& J = c.vertices();
    if (!contains_all(J, I)) {
      out.add(c, 1);
    } else {
      add_star_faces(out, J, I, Scalar(1));
    }
    return out;
  });
  auto projection = Map::from_function(big, small, 0, [&](const Simplex& c) {
    Chain<Simplex> out;
    auto [has_star, J] = split(c);
    if (!has_star) {
      out.add(c, 1);
      return out;
    }
    for (Vertex alpha : set_minus(I, J)) {
      auto ordered = J;
      ordered.insert(ordered.begin(), alpha);
      add_oriented(out, ordered, w);
    }
    return out;
  });
  auto homotopy = Map::from_function(big, big, 1, [&](const Simplex& c) {
    Chain<Simplex> out;
    auto [has_star, J] = split(c);
    const auto rest = set_minus(I, J);
    if (!has_star || rest.size() == 1) return out;
    for (Vertex alpha : rest) {
      auto ordered = J;
      ordered.insert(ordered.begin(), alpha);
      add_oriented(out, starred(ordered), -w);
    }
    return out;
  });
  SimplicialDR chains{GradedSpace<Simplex>::of(base, Side::Chains), GradedSpace<Simplex>::of(star, Side::Chains),
                      inclusion, projection, homotopy};
  return side == Side::Chains ? chains : dualize_dr(chains);
}

SimplicialDR welding_cochain_formulas(int n, const VertexSet& I) {
  validate(n, I);
  const auto base = standard_simplex(n);
  const auto star = star_complex(n, I);
  const Scalar w(1, static_cast<int>(I.size()));
  using Map = GradedLinearMap<Simplex>;
  const GradedBasis<Simplex> small(base), big(star);

  auto inclusion = Map::from_function(small, big, 0, [&](const Simplex& c) {
    Cochain<Simplex> out;
    const auto& J = c.vertices();
    if (!contains_all(J, I)) out.add(c, 1);
    add_star_faces(out, J, I, w);
    return out;
  });
  auto projection = Map::from_function(big, small, 0, [&](const Simplex& c) {
    Cochain<Simplex> out;
    auto [has_star, J] = split(c);
    if (!has_star) {
      out.add(c, 1);
      return out;
    }
    const auto rest = set_minus(I, J);
    if (rest.size() == 1) {
      auto ordered = J;
      ordered.insert(ordered.begin(), rest.front());
      add_oriented(out, ordered, Scalar(1));
    }
    return out;
  });
  auto homotopy = Map::from_function(big, big, -1, [&](const Simplex& c) {
    Cochain<Simplex> out;
    auto [has_star, J] = split(c);
    if (has_star) add_star_faces(out, J, I, -w);
    return out;
  });
  return {GradedSpace<Simplex>::of(base, Side::Cochains), GradedSpace<Simplex>::of(star, Side::Cochains), inclusion,
          projection, homotopy};
}

CubicalComplex cubical_star_complex(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("cubical star: need 0 <= k <= n");
  std::vector<SimplicialComplex> slots;
  for (int i = 0; i < n; ++i) slots.push_back(i < k ? star_complex(1, {0, 1}) : standard_simplex(1));
  return product_complex(slots);
}

SlotOp slot_op(const GradedLinearMap<Simplex>& m) {
  return {m.shift(), [m](const SlotElem& e) {
            if (e.kind != SlotElem::Kind::Cell) throw std::domain_error("slot_op expects a cell");
            auto j = m.domain().index(e.cell);
            if (!j) throw std::domain_error("cell outside domain: " + to_string(e.cell));
            SlotSum out;
            const auto image = m.column(e.cell.dim(), *j);
            for (const auto& [c, v] : image.terms()) out.emplace_back(SlotElem::of_cell(c), v);
            return out;
          }};
}

namespace {

using CubeMap = GradedLinearMap<CubeCell>;

template <class F>
CubeMap tensor_map(const GradedBasis<CubeCell>& dom, const GradedBasis<CubeCell>& cod, int shift, F ops_apply) {
  return CubeMap::from_function(dom, cod, shift, [&](const CubeCell& c) {
    return cochain_from_tensor(ops_apply(to_tensor(Cochain<CubeCell>::basis(c))));
  });
}

SimplicialDR interval_welding(Side side) {
  return side == Side::Chains ? welding_dr(1, {0, 1}, Side::Chains) : welding_cochain_formulas(1, {0, 1});
}

}  // namespace

GradedLinearMap<CubeCell> cubical_welding_homotopy_unsymmetrized(int n, int k, Side side) {
  const auto w = interval_welding(side);
  const SlotOp a = slot_op(w.homotopy), ip = slot_op(w.inclusion * w.projection);
  const GradedBasis<CubeCell> big(cubical_star_complex(n, k));
  return tensor_map(big, big, w.homotopy.shift(), [&](const SlotTensor& t) {
    SlotTensor out;
    for (int j = 0; j < k; ++j) {
      std::vector<SlotOp> ops(n, identity_op());
      ops[j] = a;
      for (int i = j + 1; i < k; ++i) ops[i] = ip;
      out += apply_slots(ops, t);
    }
    return out;
  });
}

CubicalDR cubical_welding_dr(int n, int k, Side side) {
  const auto base = standard_cube(n);
  const auto star = cubical_star_complex(n, k);
  const GradedBasis<CubeCell> small(base), big(star);
  const auto w = interval_welding(side);
  const SlotOp i1 = slot_op(w.inclusion), p1 = slot_op(w.projection);

  auto first_k = [&](const SlotOp& op) {
    std::vector<SlotOp> ops(n, identity_op());
    for (int j = 0; j < k; ++j) ops[j] = op;
    return ops;
  };
  auto inclusion = tensor_map(small, big, 0, [&](const SlotTensor& t) { return apply_slots(first_k(i1), t); });
  auto projection = tensor_map(big, small, 0, [&](const SlotTensor& t) { return apply_slots(first_k(p1), t); });

  const auto a0 = cubical_welding_homotopy_unsymmetrized(n, k, side);
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  CubeMap homotopy(big, big, a0.shift());
  do {
    const auto sigma_inv = inverse_permutation(sigma);
    auto tau = tensor_map(big, big, 0, [&](const SlotTensor& t) { return permute_slots(t, sigma); });
    auto tau_inv = tensor_map(big, big, 0, [&](const SlotTensor& t) { return permute_slots(t, sigma_inv); });
    homotopy = homotopy + tau * a0 * tau_inv;
  } while (std::next_permutation(sigma.begin(), sigma.begin() + k));
  homotopy *= Scalar(1) / factorial(k);
  return {GradedSpace<CubeCell>::of(base, side), GradedSpace<CubeCell>::of(star, side), inclusion, projection,
          homotopy};
}

Report verify_stellar(const StellarParams& p) {
  const int n = p.n;
  Report rep;
  rep.suite = "stellar";
  const auto faces = p.faces.empty() ? all_faces(n) : p.faces;
  nlohmann::json jf = nlohmann::json::array();
  for (const auto& I : faces) jf.push_back(to_string(I));
  rep.params = {{"n", n}, {"faces", jf}, {"k", p.k}};

  for (const auto& I : faces) {
    const std::string tag = "I=" + to_string(I) + ": ";
    const auto chains = welding_dr(n, I, Side::Chains);
    add_dr_report(rep, check_dr(chains), tag + "chains: ");
    auto [ci, cp] = check_chain_maps(chains);
    rep.add(from_identity(ci, tag + "chains: "));
    rep.add(from_identity(cp, tag + "chains: "));
    const auto dual = dualize_dr(chains);
    add_dr_report(rep, check_dr(dual), tag + "cochains: ");
    const auto literal = welding_cochain_formulas(n, I);
    rep.add(from_identity(compare_maps("i", literal.inclusion, dual.inclusion), tag + "cochain formulas = dual: "));
    rep.add(from_identity(compare_maps("p", literal.projection, dual.projection), tag + "cochain formulas = dual: "));
    rep.add(from_identity(compare_maps("a", literal.homotopy, dual.homotopy), tag + "cochain formulas = dual: "));
  }

  if (n <= 3) {
    std::vector<int> ks;
    if (p.k >= 0) {
      ks.push_back(p.k);
    } else {
      for (int k = 1; k <= n; ++k) ks.push_back(k);
    }
    for (int k : ks) {
      const std::string tag = "cubical k=" + std::to_string(k) + ": ";
      const auto chains = cubical_welding_dr(n, k, Side::Chains);
      add_dr_report(rep, check_dr(chains), tag + "chains: ");
      const auto cochains = cubical_welding_dr(n, k, Side::Cochains);
      add_dr_report(rep, check_dr(cochains), tag + "cochains: ");
      const auto dual = dualize_dr(chains);
      rep.add(from_identity(compare_maps("i", cochains.inclusion, dual.inclusion), tag + "cochains = dual: "));
      rep.add(from_identity(compare_maps("p", cochains.projection, dual.projection), tag + "cochains = dual: "));
      rep.add(from_identity(compare_maps("a", cochains.homotopy, dual.homotopy), tag + "cochains = dual: "));

      // tau a tau^{-1} = a for permutations of the subdivided slots
      CheckBuilder eq(tag + "homotopy is symmetric in the subdivided slots");
      const GradedBasis<CubeCell>& big = chains.big.basis;
      std::vector<int> sigma(n);
      std::iota(sigma.begin(), sigma.end(), 0);
      do {
        const auto sigma_inv = inverse_permutation(sigma);
        auto tau = tensor_map(big, big, 0, [&](const SlotTensor& t) { return permute_slots(t, sigma); });
        auto tau_inv = tensor_map(big, big, 0, [&](const SlotTensor& t) { return permute_slots(t, sigma_inv); });
        const auto c = compare_maps("", tau * chains.homotopy * tau_inv, chains.homotopy);
        if (c.passed) {
          eq.count();
        } else {
          eq.fail(perm_string(sigma) + " at " + c.input, c.lhs, c.rhs);
        }
      } while (std::next_permutation(sigma.begin(), sigma.begin() + k));
      rep.add(eq.done());
    }
  }
  return rep;
}

}  // namespace dupont
