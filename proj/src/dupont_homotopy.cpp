#include "dupont/dupont_homotopy.hpp"

#include "dupont/interval.hpp"

#include <algorithm>
#include <numeric>

namespace dupont {

namespace {

// Built once; integration_map runs in inner loops.
const SimplicialComplex& cached_simplex(int n) {
  static const std::vector<SimplicialComplex> cache = [] {
    std::vector<SimplicialComplex> v;
    for (int k = 0; k <= kMaxVars - 1; ++k) v.push_back(standard_simplex(k));
    return v;
  }();
  return cache.at(n);
}

}  // namespace

SimplexForm whitney_map(int n, const Cochain<Simplex>& x) {
  SimplexForm out(n);
  for (const auto& [cell, c] : x.terms()) {
    if (cell.vertices().front() < 0 || cell.vertices().back() > n)
      throw std::domain_error("cochain not supported on the standard simplex: " + to_string(cell));
    out += c * whitney_form(n, cell.vertices(), true);
  }
  return out;
}

Cochain<Simplex> integration_map(const SimplexForm& a) {
  const int n = a.dim();
  Cochain<Simplex> out;
  for (const Simplex& face : cached_simplex(n).all()) {
    const SimplexForm part = a.homogeneous_part(face.dim());
    if (part.is_zero()) continue;
    out.add(face, integrate_face(face.vertices(), part, IntegrationMethod::Dirichlet));
  }
  return out;
}

namespace {

void dupont_recurse(const SimplexForm& current, std::vector<int>& prefix, SimplexForm& acc) {
  const int n = current.dim();
  const int start = prefix.empty() ? 0 : prefix.back() + 1;
  for (int i = start; i <= n; ++i) {
    SimplexForm next = cone_homotopy(i, current);
    if (next.is_zero()) continue;
    prefix.push_back(i);
    acc -= wedge(whitney_form(n, prefix, true), next);
    if (static_cast<int>(prefix.size()) < n) dupont_recurse(next, prefix, acc);
    prefix.pop_back();
  }
}

}  // namespace

SimplexForm dupont_s(const SimplexForm& a) {
  SimplexForm acc(a.dim());
  std::vector<int> prefix;
  if (a.dim() > 0) dupont_recurse(a, prefix, acc);
  return acc;
}

std::map<Vertex, Vertex> permutation_vertex_map(const std::vector<int>& sigma) {
  std::map<Vertex, Vertex> f;
  for (int j = 0; j < static_cast<int>(sigma.size()); ++j) f[sigma[j]] = j;
  return f;
}

std::map<Vertex, Vertex> face_vertex_map(int n, int i) {
  std::map<Vertex, Vertex> f;
  for (int k = 0; k < n; ++k) f[k] = k < i ? k : k + 1;
  return f;
}

std::vector<Vertex> chart_order(const Simplex& facet, const VertexRank& rank) {
  std::vector<Vertex> order = facet.vertices();
  if (!rank.empty())
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return rank.at(a) < rank.at(b); });
  return order;
}

PiecewiseForm lift_whitney(const SimplicialComplex& complex, const Cochain<Simplex>& x, const VertexRank& rank) {
  std::map<Simplex, PiecewiseForm::Piece> pieces;
  for (const Simplex& facet : complex.facets()) {
    const auto order = chart_order(facet, rank);
    const int m = facet.dim();
    Cochain<Simplex> local;
    for (int mask = 1; mask < (1 << (m + 1)); ++mask) {
      std::vector<Vertex> local_face, global;
      for (int k = 0; k <= m; ++k)
        if (mask & (1 << k)) {
          local_face.push_back(k);
          global.push_back(order[k]);
        }
      auto o = orient(global);
      const Scalar v = x.coefficient(o.cell);
      local.add(Simplex::from_sorted(local_face), o.sign > 0 ? v : Scalar(-v));
    }
    pieces.emplace(facet, PiecewiseForm::Piece{order, whitney_map(m, local)});
  }
  try {
    return PiecewiseForm::make(complex, std::move(pieces));
  } catch (const CompatibilityError& e) {
    throw std::logic_error(std::string("lifted Whitney map not compatible: ") + e.what());
  }
}

Cochain<Simplex> lift_integration(const PiecewiseForm& a) {
  Cochain<Simplex> out;
  const auto facets = a.complex().facets();
  for (const Simplex& cell : a.complex().all()) {
    auto it = std::find_if(facets.begin(), facets.end(), [&](const Simplex& f) { return cell.is_face_of(f); });
    const auto& piece = a.piece(*it);
    std::vector<int> positions;
    for (Vertex v : cell.vertices())
      positions.push_back(static_cast<int>(std::find(piece.order.begin(), piece.order.end(), v) - piece.order.begin()));
    const SimplexForm part = piece.form.homogeneous_part(cell.dim());
    if (part.is_zero()) continue;
    out.add(cell, integrate_face(positions, part, IntegrationMethod::Dirichlet));
  }
  return out;
}

PiecewiseForm lift_dupont(const PiecewiseForm& a) {
  PiecewiseForm out = a.map_pieces([](const Simplex&, const PiecewiseForm::Piece& p) { return dupont_s(p.form); });
  if (auto err = out.compatibility_error())
    throw std::logic_error("lifted Dupont homotopy not compatible: " + *err);
  return out;
}

std::vector<SimplexForm> probe_family(int n, int probes, int degree, std::uint64_t seed, bool with_monomials) {
  std::vector<SimplexForm> out;
  for (const Simplex& s : cached_simplex(n).all()) out.push_back(whitney_form(n, s.vertices(), true));
  if (with_monomials)
    for (int p = 0; p <= n; ++p)
      for (auto& m : monomial_forms(n, p, degree)) out.push_back(std::move(m));
  for (int p = 0; p <= n; ++p)
    for (int k = 0; k < probes; ++k) out.push_back(random_form(n, p, degree, seed * 7919 + 1000 * p + k));
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::string perm_string(const std::vector<int>& sigma) {
  std::string s = "sigma=(";
  for (std::size_t i = 0; i < sigma.size(); ++i) s += (i ? "," : "") + std::to_string(sigma[i]);
  return s + ")";
}

}  // namespace

Report verify_dupont(const DupontParams& p) {
  const int n = p.n;
  Report rep;
  rep.suite = "dupont";
  rep.params = {{"n", n}, {"probes", p.probes}, {"degree", p.degree}, {"seed", p.seed}};
  const auto complex = standard_simplex(n);

  std::function<SimplexForm(const SimplexForm&)> s = dupont_s;
  if (p.mutate) {
    // perturb s on 1-forms by a multiple of t_0
    s = [n](const SimplexForm& a) {
      SimplexForm out = dupont_s(a);
      if (!a.homogeneous_part(1).is_zero()) out += Scalar(1, 7) * SimplexForm::coordinate(n, 0);
      return out;
    };
  }
  auto W = [n](const Cochain<Simplex>& x) { return whitney_map(n, x); };
  auto R = [](const SimplexForm& a) { return integration_map(a); };
  auto d = [](const SimplexForm& a) { return exterior_derivative(a); };

  const auto family = probe_family(n, p.probes, p.degree, p.seed);
  const auto random_only = probe_family(n, p.probes, p.degree, p.seed, false);

  {
    CheckBuilder rw("RW = 1"), sw("sW = 0"), dw("dW = Wd");
    for (const Simplex& c : complex.all()) {
      auto x = Cochain<Simplex>::basis(c);
      rw.expect_equal(c, R(W(x)), x);
      sw.expect_equal(c, s(W(x)), SimplexForm(n));
      dw.expect_equal(c, d(W(x)), W(coboundary(x, complex)));
    }
    rep.add(rw.done());
    rep.add(sw.done());
    rep.add(dw.done());
  }
  {
    CheckBuilder hom("ds + sd = 1 - WR"), ss("s^2 = 0"), rs("Rs = 0"), dr("dR = Rd");
    for (const auto& a : family) {
      hom.expect_equal(a, d(s(a)) + s(d(a)), a - W(R(a)));
      ss.expect_equal(a, s(s(a)), SimplexForm(n));
      rs.expect_equal(a, R(s(a)), Cochain<Simplex>());
      dr.expect_equal(a, R(d(a)), coboundary(R(a), complex));
    }
    rep.add(hom.done());
    rep.add(ss.done());
    rep.add(rs.done());
    rep.add(dr.done());
  }
  {
    CheckBuilder es("equivariance: s"), ew("equivariance: W"), er("equivariance: R");
    std::vector<int> sigma(n + 1);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      const auto f = permutation_vertex_map(sigma);
      const std::string tag = perm_string(sigma);
      for (const auto& a : random_only) {
        es.expect_equal(tag + " on " + to_string(a), permute(s(a), sigma), s(permute(a, sigma)));
        er.expect_equal(tag + " on " + to_string(a), R(permute(a, sigma)), pullback_cochain(R(a), complex, f));
      }
      for (const Simplex& c : complex.all()) {
        auto x = Cochain<Simplex>::basis(c);
        ew.expect_equal(tag + " on " + to_string(c), permute(W(x), sigma), W(pullback_cochain(x, complex, f)));
      }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    rep.add(es.done());
    rep.add(ew.done());
    rep.add(er.done());
  }
  {
    CheckBuilder fs("face commutation: s"), fw("face commutation: W"), fr("face commutation: R");
    const auto face = standard_simplex(n - 1);
    for (int i = 0; i <= n; ++i) {
      const auto f = face_vertex_map(n, i);
      const std::string tag = "eps_" + std::to_string(i);
      for (const auto& a : random_only) {
        fs.expect_equal(tag + " on " + to_string(a), face_pullback(i, s(a)), dupont_s(face_pullback(i, a)));
        fr.expect_equal(tag + " on " + to_string(a), integration_map(face_pullback(i, a)),
                        pullback_cochain(R(a), face, f));
      }
      for (const Simplex& c : complex.all()) {
        auto x = Cochain<Simplex>::basis(c);
        fw.expect_equal(tag + " on " + to_string(c), face_pullback(i, W(x)),
                        whitney_map(n - 1, pullback_cochain(x, face, f)));
      }
    }
    rep.add(fs.done());
    rep.add(fw.done());
    rep.add(fr.done());
  }
  {
    CheckBuilder both("integration: homotopy route = dirichlet route"), norm("integration: whitney normalization");
    for (const Simplex& face : complex.all()) {
      const int q = face.dim();
      for (int k = 0; k < p.probes; ++k) {
        auto a = random_form(n, q, p.degree, p.seed * 31 + 100 * q + k);
        both.expect_equal(to_string(face) + " of " + to_string(a),
                          integrate_face(face.vertices(), a, IntegrationMethod::Homotopy),
                          integrate_face(face.vertices(), a, IntegrationMethod::Dirichlet));
      }
      const auto w = whitney_form(n, face.vertices(), false);
      const Scalar expect = Scalar(1) / factorial(q);
      norm.expect_equal(to_string(face), integrate_face(face.vertices(), w, IntegrationMethod::Homotopy), expect);
      norm.expect_equal(to_string(face), integrate_face(face.vertices(), w, IntegrationMethod::Dirichlet), expect);
    }
    rep.add(both.done());
    rep.add(norm.done());
  }
  {
    CheckBuilder hv("cone homotopy: dh + hd = eps - 1 at vertices");
    CheckBuilder hb("cone homotopy: dh + hd = eps - 1 at face barycenters", CheckKind::Claim);
    CheckBuilder anti("cone homotopy: h^i h^j + h^j h^i = 0"), sq("cone homotopy: h^i h^i = 0");
    CheckBuilder lem("cone homotopy: h^i wbar_J = (-1)^k wbar_J h^i - h^i wbar_{J,i} h^i");
    std::vector<BaryPoint> bary;
    for (const Simplex& f : complex.all())
      if (f.dim() > 0) bary.push_back(BaryPoint::barycenter(n, f.vertices()));
    for (const auto& a : random_only) {
      const auto sa = to_string(a);
      for (int i = 0; i <= n; ++i) {
        hv.expect_equal("i=" + std::to_string(i) + " on " + sa, d(cone_homotopy(i, a)) + cone_homotopy(i, d(a)),
                        eval_at(BaryPoint::vertex(n, i), a) - a);
        sq.expect_equal("i=" + std::to_string(i) + " on " + sa, cone_homotopy(i, cone_homotopy(i, a)), SimplexForm(n));
        for (int j = i + 1; j <= n; ++j)
          anti.expect_equal("i=" + std::to_string(i) + ",j=" + std::to_string(j) + " on " + sa,
                            cone_homotopy(i, cone_homotopy(j, a)) + cone_homotopy(j, cone_homotopy(i, a)),
                            SimplexForm(n));
      }
      for (const auto& q : bary)
        hb.expect_equal(sa, d(cone_homotopy(q, a)) + cone_homotopy(q, d(a)), eval_at(q, a) - a);
      for (const Simplex& J : complex.all()) {
        if (J.dim() == n) continue;
        const int k = J.dim();
        for (int i = 0; i <= n; ++i) {
          if (J.contains(i)) continue;
          auto Ji = J.vertices();
          Ji.push_back(i);
          const auto wJ = whitney_form(n, J.vertices(), true);
          const auto wJi = whitney_form(n, Ji, true);
          const auto hi_a = cone_homotopy(i, a);
          lem.expect_equal("i=" + std::to_string(i) + ", J=" + to_string(J) + " on " + sa,
                           cone_homotopy(i, wedge(wJ, a)),
                           Scalar(k % 2 ? -1 : 1) * wedge(wJ, hi_a) - cone_homotopy(i, wedge(wJi, hi_a)));
        }
      }
    }
    rep.add(hv.done());
    rep.add(hb.done());
    rep.add(anti.done());
    rep.add(sq.done());
    rep.add(lem.done());
  }
  if (n == 1) {
    CheckBuilder cf("closed form s on the interval");
    for (const auto& a : family)
      cf.expect_equal(a, s(a), from_interval_coordinate(interval_dupont(to_interval_coordinate(a))));
    rep.add(cf.done());
  }
  return rep;
}

}  // namespace dupont
