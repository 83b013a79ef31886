#include "dupont/collapse.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dupont {

namespace {

using Map = GradedLinearMap<Simplex>;

Simplex S(std::vector<Vertex> v) { return Simplex::from_sorted(std::move(v)); }

std::vector<Vertex> starred(std::vector<Vertex> J) {
  J.insert(J.begin(), kStar);
  return J;
}

// Coefficient of `face` in the boundary of sigma.
int incidence(const Simplex& sigma, const Simplex& face) {
  for (const auto& [f, e] : boundary_terms(sigma))
    if (f == face) return e;
  throw std::domain_error(to_string(face) + " is not a facet of " + to_string(sigma));
}

void require_free(const SimplicialComplex& Y, const CollapsePair& pair) {
  const auto& [sigma, face] = pair;
  if (!Y.contains(sigma) || !Y.contains(face))
    throw std::domain_error("collapse pair not in the complex: " + to_string(sigma));
  incidence(sigma, face);
  for (const Simplex& c : Y.all()) {
    if (c == sigma || c == face) continue;
    if (sigma.is_face_of(c))
      throw std::domain_error("collapse: " + to_string(sigma) + " is a face of " + to_string(c));
    if (face.is_face_of(c))
      throw std::domain_error("collapse: " + to_string(face) + " has a second coface " + to_string(c));
  }
}

SimplicialComplex remove_pair(const SimplicialComplex& Y, const CollapsePair& pair) {
  auto cells = Y.all();
  cells.erase(pair.sigma);
  cells.erase(pair.face);
  return SimplicialComplex(std::move(cells));
}

SimplicialComplex full_simplex_with_star(int n) {
  std::vector<Vertex> v(n + 1);
  std::iota(v.begin(), v.end(), 0);
  return simplex_closure({S(starred(v))});
}

VertexSet full_face(int n) {
  VertexSet I(n + 1);
  std::iota(I.begin(), I.end(), 0);
  return I;
}

// Subsets of `pool`, by size and then lexicographically.
std::vector<std::vector<Vertex>> subsets_by_size(const std::vector<Vertex>& pool) {
  std::vector<std::vector<Vertex>> out;
  const int m = static_cast<int>(pool.size());
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<Vertex> K;
    for (int i = 0; i < m; ++i)
      if ((mask >> i) & 1u) K.push_back(pool[i]);
    out.push_back(K);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

template <class Sum>
void add_oriented(Sum& out, std::vector<Vertex> ordered, const Scalar& c) {
  auto o = orient(std::move(ordered));
  out.add(o.cell, o.sign > 0 ? c : Scalar(-c));
}

SimplicialDR fold_collapses(const SimplicialComplex& top, const std::vector<CollapsePair>& pairs, Side side) {
  SimplicialComplex Y = top;
  std::optional<SimplicialDR> acc;
  for (const auto& pair : pairs) {
    auto step = elementary_collapse_dr(Y, pair, side);
    acc = acc ? compose_dr(*acc, step) : step;
    Y = remove_pair(Y, pair);
  }
  if (!acc) return identity_dr(GradedSpace<Simplex>::of(top, side));
  return *acc;
}

}  // namespace

SimplicialDR elementary_collapse_dr(const SimplicialComplex& Y, const CollapsePair& pair, Side side) {
  require_free(Y, pair);
  const auto X = remove_pair(Y, pair);
  const GradedBasis<Simplex> small(X), big(Y);
  const int eps = incidence(pair.sigma, pair.face);
  auto inclusion = Map::from_function(small, big, 0, [](const Simplex& c) { return Chain<Simplex>::basis(c); });
  auto projection = Map::from_function(big, small, 0, [&](const Simplex& c) {
    Chain<Simplex> out;
    if (c == pair.sigma) return out;
    if (c != pair.face) return Chain<Simplex>::basis(c);
    // face - eps d(sigma), which no longer involves the face
    for (const auto& [f, e] : boundary_terms(pair.sigma))
      if (f != pair.face) out.add(f, Scalar(-eps * e));
    return out;
  });
  auto homotopy = Map::from_function(big, big, 1, [&](const Simplex& c) {
    return c == pair.face ? Chain<Simplex>::basis(pair.sigma, eps) : Chain<Simplex>();
  });
  SimplicialDR chains{GradedSpace<Simplex>::of(X, Side::Chains), GradedSpace<Simplex>::of(Y, Side::Chains),
                      inclusion, projection, homotopy};
  return side == Side::Chains ? chains : dualize_dr(chains);
}

SimplicialDR elementary_collapse_cochain_formulas(const SimplicialComplex& Y, const CollapsePair& pair) {
  require_free(Y, pair);
  const auto X = remove_pair(Y, pair);
  const GradedBasis<Simplex> small(X), big(Y);
  const int eps = incidence(pair.sigma, pair.face);
  auto inclusion = Map::from_function(small, big, 0, [&](const Simplex& c) {
    Cochain<Simplex> out = Cochain<Simplex>::basis(c);
    if (c.dim() == pair.face.dim() && c.is_face_of(pair.sigma)) out.add(pair.face, Scalar(-eps * incidence(pair.sigma, c)));
    return out;
  });
  auto projection = Map::from_function(big, small, 0, [&](const Simplex& c) {
    return c == pair.sigma || c == pair.face ? Cochain<Simplex>() : Cochain<Simplex>::basis(c);
  });
  auto homotopy = Map::from_function(big, big, -1, [&](const Simplex& c) {
    return c == pair.sigma ? Cochain<Simplex>::basis(pair.face, eps) : Cochain<Simplex>();
  });
  return {GradedSpace<Simplex>::of(X, Side::Cochains), GradedSpace<Simplex>::of(Y, Side::Cochains), inclusion,
          projection, homotopy};
}

std::vector<ExpansionStep> expansion_sequence(int n, Vertex j) {
  if (n < 1 || j < 0 || j > n) throw std::invalid_argument("expansion_sequence: need 0 <= j <= n");
  std::vector<Vertex> others;
  for (int v = 0; v <= n; ++v)
    if (v != j) others.push_back(v);
  std::set<Simplex> cells = standard_simplex(n).all();
  std::vector<ExpansionStep> out;
  for (const auto& K : subsets_by_size(others)) {
    auto with_j = K;
    with_j.insert(std::lower_bound(with_j.begin(), with_j.end(), j), j);
    CollapsePair pair{S(starred(with_j)), S(starred(K))};
    cells.insert(pair.sigma);
    cells.insert(pair.face);
    SimplicialComplex Y(cells);
    require_free(Y, pair);
    out.push_back({std::move(Y), std::move(pair)});
  }
  return out;
}

SimplicialDR expansion_dr(int n, Vertex j, Side side) {
  const auto steps = expansion_sequence(n, j);
  std::optional<SimplicialDR> acc;
  for (const auto& step : steps) {
    auto dr = elementary_collapse_dr(step.complex, step.pair, side);
    acc = acc ? compose_dr(dr, *acc) : dr;
  }
  return *acc;
}

std::vector<CollapsePair> collapse_sequence(int n, const VertexSet& I) {
  star_complex(n, I);  // validates I
  const auto all = full_face(n);
  std::vector<CollapsePair> out{{S(starred(all)), S(all)}};
  std::vector<std::vector<Vertex>> extra;
  for (const auto& J : subsets_by_size(all))
    if (J.size() < all.size() && std::includes(J.begin(), J.end(), I.begin(), I.end())) extra.push_back(J);
  std::stable_sort(extra.begin(), extra.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
  for (const auto& J : extra) out.push_back({S(starred(J)), S(J)});
  return out;
}

SimplicialDR collapse_dr(int n, const VertexSet& I, Side side) {
  auto dr = fold_collapses(full_simplex_with_star(n), collapse_sequence(n, I), side);
  if (!(dr.small.basis == GradedBasis<Simplex>(star_complex(n, I))))
    throw std::logic_error("collapses did not end at the star of " + to_string(I));
  return dr;
}

SimplicialDR zigzag_retraction(int n, Vertex j, const VertexSet& I) {
  const auto up = expansion_dr(n, j, Side::Cochains);
  const auto down = collapse_dr(n, I, Side::Cochains);
  return {up.small, down.small, down.projection * up.inclusion, up.projection * down.inclusion,
          down.projection * up.homotopy * down.inclusion};
}

SimplicialDR averaged_retraction(int n, const VertexSet& I) {
  std::optional<SimplicialDR> acc;
  for (Vertex j : I) {
    auto z = zigzag_retraction(n, j, I);
    if (!acc) {
      acc = z;
      continue;
    }
    if (!(z.projection == acc->projection))
      throw std::logic_error("zigzag projections differ at pivot " + std::to_string(j));
    acc->inclusion = acc->inclusion + z.inclusion;
    acc->homotopy = acc->homotopy + z.homotopy;
  }
  const Scalar w(1, static_cast<int>(I.size()));
  acc->inclusion *= w;
  acc->homotopy *= w;
  return *acc;
}

SimplicialDR zigzag_formulas(int n, Vertex j) {
  const auto all = full_face(n);
  const auto base = standard_simplex(n);
  const auto star = star_complex(n, all);
  const GradedBasis<Simplex> small(base), big(star);
  // iota_j: [0..n] -> (-1)^j [*, 0..^j..n]; [j, K] -> [j, K] + [*, K]; else identity
  auto inclusion = Map::from_function(small, big, 0, [&](const Simplex& c) {
    Cochain<Simplex> out;
    const auto& v = c.vertices();
    if (c.dim() == n) {
      auto rest = v;
      rest.erase(rest.begin() + j);
      out.add(S(starred(rest)), j % 2 ? -1 : 1);
      return out;
    }
    out.add(c, 1);
    if (c.contains(j)) {
      std::vector<Vertex> written{j}, K;
      for (Vertex x : v)
        if (x != j) K.push_back(x);
      written.insert(written.end(), K.begin(), K.end());
      // the closed form writes the cell as [j, K]; convert to sorted cells
      const int s = orient(written).sign;
      add_oriented(out, starred(K), Scalar(s));
    }
    return out;
  });
  // p_j: [*, 0..^l..n] -> (-1)^l [0..n]; else identity on cells of Delta^n; 0 on other starred cells
  auto projection = Map::from_function(big, small, 0, [&](const Simplex& c) {
    Cochain<Simplex> out;
    const auto& v = c.vertices();
    if (v.front() != kStar) return Cochain<Simplex>::basis(c);
    if (c.dim() != n) return out;
    int missing = 0;
    while (c.contains(missing)) ++missing;
    out.add(S(all), missing % 2 ? -1 : 1);
    return out;
  });
  // a_j: [*, j, K] -> -[*, K]
  auto homotopy = Map::from_function(big, big, -1, [&](const Simplex& c) {
    Cochain<Simplex> out;
    const auto& v = c.vertices();
    if (v.front() != kStar || !c.contains(j)) return out;
    std::vector<Vertex> written{kStar, j}, K;
    for (Vertex x : v)
      if (x != kStar && x != j) K.push_back(x);
    written.insert(written.end(), K.begin(), K.end());
    const int s = orient(written).sign;
    add_oriented(out, starred(K), Scalar(-s));
    return out;
  });
  return {GradedSpace<Simplex>::of(base, Side::Cochains), GradedSpace<Simplex>::of(star, Side::Cochains), inclusion,
          projection, homotopy};
}

// ---------------------------------------------------------------------------

namespace {

void compare_triples(Report& rep, const SimplicialDR& got, const SimplicialDR& want, const std::string& prefix,
                     CheckKind kind) {
  rep.add(from_identity(compare_maps("inclusion", got.inclusion, want.inclusion), prefix, kind));
  rep.add(from_identity(compare_maps("projection", got.projection, want.projection), prefix, kind));
  rep.add(from_identity(compare_maps("homotopy", got.homotopy, want.homotopy), prefix, kind));
}

}  // namespace

Report verify_collapse_equality(int n) {
  if (n < 1 || n > 4) throw std::invalid_argument("verify_collapse_equality: n must be in 1..4");
  Report rep;
  rep.suite = "collapse";
  rep.params = {{"n", n}};
  const auto all = full_face(n);

  {
    CheckBuilder steps("expansion: 2^n free steps per pivot"), dual("elementary collapse: cochain formulas = dual");
    for (Vertex j = 0; j <= n; ++j) {
      const auto seq = expansion_sequence(n, j);
      steps.expect_equal("j=" + std::to_string(j), std::to_string(seq.size()), std::to_string(1 << n));
      for (const auto& st : seq) {
        const auto lit = elementary_collapse_cochain_formulas(st.complex, st.pair);
        const auto du = elementary_collapse_dr(st.complex, st.pair, Side::Cochains);
        dual.expect_equal(to_string(st.pair.sigma), std::string(lit.inclusion == du.inclusion &&
                                                                        lit.projection == du.projection &&
                                                                        lit.homotopy == du.homotopy
                                                                    ? "equal"
                                                                    : "differ"),
                          std::string("equal"));
      }
    }
    rep.add(steps.done());
    rep.add(dual.done());
  }
  std::optional<SimplicialDR> first;
  for (Vertex j = 0; j <= n; ++j) {
    const std::string tag = "j=" + std::to_string(j) + ": ";
    add_dr_report(rep, check_dr(expansion_dr(n, j, Side::Cochains)), tag + "expansions: ");
    const auto z = zigzag_retraction(n, j, all);
    add_dr_report(rep, check_dr(z), tag + "zigzag: ");
    compare_triples(rep, z, zigzag_formulas(n, j), tag + "zigzag = cell formulas: ", CheckKind::Theorem);
    if (!first) {
      first = z;
    } else {
      rep.add(from_identity(compare_maps("projection independent of pivot", z.projection, first->projection), tag));
    }
  }
  const auto avg = averaged_retraction(n, all);
  add_dr_report(rep, check_dr(avg), "average: ");
  compare_triples(rep, avg, welding_dr(n, all, Side::Cochains), "average = welding: ", CheckKind::Theorem);
  if (n == 1) {
    // cells written in the orientation of [0, *, 1]; the first sequence is pivot 0
    auto w = [](std::vector<Vertex> cell, Scalar c = 1) {
      Cochain<Simplex> x;
      x.add(orient(std::move(cell)), c);
      return x;
    };
    const auto z = zigzag_retraction(1, 0, all);
    CheckBuilder first("n = 1: first zigzag values");
    first.expect_equal("iota([0,1])", z.inclusion.apply(w({0, 1})), w({kStar, 1}));
    first.expect_equal("iota([0])", z.inclusion.apply(w({0})), w({0}) + w({kStar}));
    first.expect_equal("a([0,*])", z.homotopy.apply(w({0, kStar})), w({kStar}));
    rep.add(first.done());
    CheckBuilder avg_disp("n = 1: averaged values");
    avg_disp.expect_equal("iota([0,1])", avg.inclusion.apply(w({0, 1})),
                          w({0, kStar}, Scalar(1, 2)) + w({kStar, 1}, Scalar(1, 2)));
    avg_disp.expect_equal("a([0,*])", avg.homotopy.apply(w({0, kStar})), w({kStar}, Scalar(1, 2)));
    avg_disp.expect_equal("a([*,1])", avg.homotopy.apply(w({kStar, 1})), w({kStar}, Scalar(-1, 2)));
    rep.add(avg_disp.done());
  }
  return rep;
}

Report verify_general_I(int n, const VertexSet& I) {
  Report rep;
  rep.suite = "collapse";
  rep.params = {{"n", n}, {"face", to_string(I)}};
  const std::string tag = "I=" + to_string(I) + ": ";
  try {
    const auto avg = averaged_retraction(n, I);
    add_dr_report(rep, check_dr(avg), tag + "average: ", CheckKind::Claim);
    compare_triples(rep, avg, welding_dr(n, I, Side::Cochains), tag + "average = welding: ", CheckKind::Claim);
  } catch (const std::domain_error& e) {
    Check c;
    c.name = tag + "construction";
    c.kind = CheckKind::Claim;
    c.passed = false;
    c.note = e.what();
    rep.add(c);
  }
  return rep;
}

Report verify_collapse(const CollapseParams& p) {
  Report rep = verify_collapse_equality(p.n);
  nlohmann::json faces = nlohmann::json::array();
  for (const auto& I : p.faces) {
    faces.push_back(to_string(I));
    if (I == full_face(p.n)) continue;
    rep.merge(verify_general_I(p.n, I), "");
  }
  rep.params["faces"] = faces;
  return rep;
}

}  // namespace dupont
