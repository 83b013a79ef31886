#include "dupont/cube_dupont.hpp"
#include "dupont/simplex_forms.hpp"

#include <numeric>
#include <stdexcept>

namespace dupont {

namespace {

Simplex S(std::vector<Vertex> v) { return Simplex::from_sorted(std::move(v)); }

SlotSum collect(const std::map<SlotElem, Scalar>& acc) {
  SlotSum out;
  for (const auto& [e, c] : acc)
    if (c != 0) out.emplace_back(e, c);
  return out;
}

void require_form(const SlotElem& e) {
  if (e.kind != SlotElem::Kind::Form || e.piece != SlotElem::kWhole)
    throw std::domain_error("interval operator expects a form on [0,1]");
}

void require_cell(const SlotElem& e) {
  if (e.kind != SlotElem::Kind::Cell) throw std::domain_error("operator expects a cochain");
}

std::string perm_string(const std::vector<int>& sigma) {
  std::string s = "sigma=(";
  for (std::size_t i = 0; i < sigma.size(); ++i) s += (i ? "," : "") + std::to_string(sigma[i]);
  return s + ")";
}

}  // namespace

CubeForm::CubeForm(int n, PolyForm p) : poly_(std::move(p)) {
  if (poly_.num_vars() != n) throw std::invalid_argument("cube form dimension mismatch");
}

std::string to_string(const CubeForm& a) { return to_string(a.poly(), "x", 1); }

CubeForm parse_cube_form(std::string_view text, int n) { return {n, parse_poly_form(text, n, "x", 1)}; }

CubeForm exterior_derivative(const CubeForm& a) { return {a.dim(), exterior_derivative(a.poly())}; }

CubeForm wedge(const CubeForm& a, const CubeForm& b) { return {a.dim(), wedge(a.poly(), b.poly())}; }

SlotOp interval_whitney_op() {
  return {0, [](const SlotElem& e) {
            require_cell(e);
            if (e.cell == S({0})) return SlotSum{{SlotElem::form(0, false), 1}, {SlotElem::form(1, false), -1}};
            if (e.cell == S({1})) return SlotSum{{SlotElem::form(1, false), 1}};
            if (e.cell == S({0, 1})) return SlotSum{{SlotElem::form(0, true), 1}};
            throw std::domain_error("cell not in Delta^1: " + to_string(e.cell));
          }};
}

SlotOp interval_integration_op() {
  return {0, [](const SlotElem& e) {
            require_form(e);
            if (e.dx) return SlotSum{{SlotElem::of_cell(S({0, 1})), Scalar(1, e.exponent + 1)}};
            SlotSum out{{SlotElem::of_cell(S({1})), 1}};
            if (e.exponent == 0) out.insert(out.begin(), {SlotElem::of_cell(S({0})), 1});
            return out;
          }};
}

SlotOp interval_s_op(bool mutate) {
  // s(g dx) = int_0^x g - x int_0^1 g
  return {-1, [mutate](const SlotElem& e) {
            require_form(e);
            if (!e.dx) return SlotSum{};
            std::map<SlotElem, Scalar> acc;
            const Scalar w(1, e.exponent + 1);
            acc[SlotElem::form(e.exponent + 1, false)] += w;
            acc[SlotElem::form(1, false)] -= w;
            if (mutate) acc[SlotElem::form(0, false)] += Scalar(1, 7);
            return collect(acc);
          }};
}

SlotOp interval_d_op() {
  return {1, [](const SlotElem& e) {
            require_form(e);
            if (e.dx || e.exponent == 0) return SlotSum{};
            return SlotSum{{SlotElem::form(e.exponent - 1, true), e.exponent}};
          }};
}

SlotOp slot_coboundary_op(const SimplicialComplex& slot_complex) {
  return {1, [slot_complex](const SlotElem& e) {
            require_cell(e);
            std::map<SlotElem, Scalar> acc;
            const auto image = coboundary(Cochain<Simplex>::basis(e.cell), slot_complex);
            for (const auto& [cell, c] : image.terms()) acc[SlotElem::of_cell(cell)] += c;
            return collect(acc);
          }};
}

SlotTensor to_tensor(const CubeForm& a) {
  SlotTensor out;
  const int n = a.dim();
  for (const auto& [k, c] : a.poly().terms()) {
    SlotTensor::Term t;
    for (int i = 0; i < n; ++i) t.push_back(SlotElem::form(k.exps[i], (k.wedge >> i) & 1u));
    out.add(t, c);
  }
  return out;
}

SlotTensor to_tensor(const Cochain<CubeCell>& x) {
  SlotTensor out;
  for (const auto& [cell, c] : x.terms()) {
    SlotTensor::Term t;
    for (const Simplex& s : cell.slots()) t.push_back(SlotElem::of_cell(s));
    out.add(t, c);
  }
  return out;
}

CubeForm cube_form_from_tensor(int n, const SlotTensor& t) {
  PolyForm out(n);
  for (const auto& [term, c] : t.terms()) {
    if (static_cast<int>(term.size()) != n) throw std::invalid_argument("slot count mismatch");
    TermKey k;
    for (int i = 0; i < n; ++i) {
      const SlotElem& e = term[i];
      if (e.kind != SlotElem::Kind::Form || e.piece != SlotElem::kWhole)
        throw std::domain_error("tensor is not a form on the cube");
      k.exps[i] = static_cast<std::uint8_t>(e.exponent);
      if (e.dx) k.wedge |= 1u << i;
    }
    out.add_term(k, c);
  }
  return {n, out};
}

Cochain<CubeCell> cochain_from_tensor(const SlotTensor& t) {
  Cochain<CubeCell> out;
  for (const auto& [term, c] : t.terms()) {
    std::vector<Simplex> slots;
    for (const SlotElem& e : term) {
      require_cell(e);
      slots.push_back(e.cell);
    }
    out.add(CubeCell(std::move(slots)), c);
  }
  return out;
}

CubeForm cube_whitney(int n, const Cochain<CubeCell>& x) {
  return cube_form_from_tensor(n, apply_slots(std::vector<SlotOp>(n, interval_whitney_op()), to_tensor(x)));
}

Cochain<CubeCell> cube_integration(const CubeForm& a) {
  return cochain_from_tensor(apply_slots(std::vector<SlotOp>(a.dim(), interval_integration_op()), to_tensor(a)));
}

Scalar symmetrization_weight(int e, int n) {
  if (e < 0 || e > n - 1) throw std::invalid_argument("symmetrization weight out of range");
  return factorial(e) * factorial(n - 1 - e);
}

SlotTensor psi_tensor(const std::vector<int>& eps, const std::vector<SlotOp>& s, const std::vector<SlotOp>& wr,
                      const SlotTensor& t) {
  const int n = static_cast<int>(s.size());
  if (static_cast<int>(eps.size()) != n - 1) throw std::invalid_argument("psi: eps must have n-1 entries");
  SlotTensor out;
  for (int j = 0; j < n; ++j) {
    std::vector<SlotOp> ops;
    for (int i = 0; i < n; ++i) {
      if (i == j) {
        ops.push_back(s[i]);
      } else {
        ops.push_back(eps[i < j ? i : i - 1] ? wr[i] : identity_op());
      }
    }
    out += apply_slots(ops, t);
  }
  return out;
}

SlotTensor symmetrized_homotopy(const std::vector<SlotOp>& s, const std::vector<SlotOp>& wr, const SlotTensor& t) {
  const int n = static_cast<int>(s.size());
  SlotTensor out;
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> eps(n - 1);
    for (int i = 0; i < n - 1; ++i) eps[i] = (mask >> i) & 1u;
    out += symmetrization_weight(popcount(mask), n) * psi_tensor(eps, s, wr, t);
  }
  return (Scalar(1) / factorial(n)) * out;
}

CubeForm psi(const std::vector<int>& eps, const CubeForm& a, bool mutate) {
  const int n = a.dim();
  const std::vector<SlotOp> s(n, interval_s_op(mutate));
  const std::vector<SlotOp> wr(n, compose(interval_whitney_op(), interval_integration_op()));
  return cube_form_from_tensor(n, psi_tensor(eps, s, wr, to_tensor(a)));
}

CubeForm cube_dupont_s(const CubeForm& a, CubeVariant v, bool mutate) {
  const int n = a.dim();
  if (v == CubeVariant::S0) {
    // 1^{j-1} (x) s (x) (WR)^{n-j}
    const SlotOp wr = compose(interval_whitney_op(), interval_integration_op());
    const SlotTensor in = to_tensor(a);
    SlotTensor out;
    for (int j = 0; j < n; ++j) {
      std::vector<SlotOp> ops(n, identity_op());
      ops[j] = interval_s_op(mutate);
      for (int i = j + 1; i < n; ++i) ops[i] = wr;
      out += apply_slots(ops, in);
    }
    return cube_form_from_tensor(n, out);
  }
  const std::vector<SlotOp> s(n, interval_s_op(mutate));
  const std::vector<SlotOp> wr(n, compose(interval_whitney_op(), interval_integration_op()));
  return cube_form_from_tensor(n, symmetrized_homotopy(s, wr, to_tensor(a)));
}

CubeForm permute_coordinates(const CubeForm& a, const std::vector<int>& sigma) {
  return cube_form_from_tensor(a.dim(), permute_slots(to_tensor(a), sigma));
}

CubeForm cube_dupont_s_average(const CubeForm& a) {
  const int n = a.dim();
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  CubeForm out(n);
  do {
    const auto inv = inverse_permutation(sigma);
    out += permute_coordinates(cube_dupont_s(permute_coordinates(a, inv), CubeVariant::S0), sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return (Scalar(1) / factorial(n)) * out;
}

CubeForm random_cube_form(int n, int p, int d, std::uint64_t seed) {
  if (p < 0 || p > n) throw std::invalid_argument("random_cube_form: form degree out of range");
  ProbeRng rng(seed ^ 0xC0BEull ^ (static_cast<std::uint64_t>(n) << 40) ^ (static_cast<std::uint64_t>(p) << 48) ^
               (static_cast<std::uint64_t>(d) << 56));
  while (true) {
    PolyForm f(n);
    const int terms = 1 + rng.below(3);
    for (int t = 0; t < terms; ++t) {
      std::vector<int> idx(n);
      std::iota(idx.begin(), idx.end(), 0);
      std::uint32_t wedge = 0;
      for (int k = 0; k < p; ++k) {
        const int r = k + rng.below(n - k);
        std::swap(idx[k], idx[r]);
        wedge |= 1u << idx[k];
      }
      Exponents e{};
      const int total = rng.below(d + 1);
      for (int k = 0; k < total; ++k) e[rng.below(n)] += 1;
      int c = rng.below(6) - 3;
      if (c >= 0) ++c;
      f.add_term(TermKey{wedge, e}, c);
    }
    if (!f.is_zero()) return {n, f};
  }
}

std::vector<CubeForm> cube_probes(int n, int probes, int degree, std::uint64_t seed) {
  std::vector<CubeForm> out;
  const auto complex = standard_cube(n);
  for (const CubeCell& c : complex.all()) out.push_back(cube_whitney(n, Cochain<CubeCell>::basis(c)));
  for (int p = 0; p <= n; ++p)
    for (int k = 0; k < probes; ++k) out.push_back(random_cube_form(n, p, degree, seed * 7919 + 1000 * p + k));
  return out;
}

Report verify_cubical(const CubicalParams& p) {
  const int n = p.n;
  if (n < 1 || n > 6) throw std::invalid_argument("verify_cubical: n out of range");
  Report rep;
  rep.suite = "cubical";
  rep.params = {{"n", n}, {"probes", p.probes}, {"degree", p.degree}, {"seed", p.seed}};
  const auto complex = standard_cube(n);
  auto W = [n](const Cochain<CubeCell>& x) { return cube_whitney(n, x); };
  auto R = [](const CubeForm& a) { return cube_integration(a); };
  auto d = [](const CubeForm& a) { return exterior_derivative(a); };
  const CubeForm zero(n);

  {
    CheckBuilder rw("RW = 1"), dw("dW = Wd");
    for (const CubeCell& c : complex.all()) {
      auto x = Cochain<CubeCell>::basis(c);
      rw.expect_equal(c, R(W(x)), x);
      dw.expect_equal(c, d(W(x)), W(coboundary(x, complex)));
    }
    rep.add(rw.done());
    rep.add(dw.done());
  }

  const auto family = cube_probes(n, p.probes, p.degree, p.seed);
  {
    CheckBuilder dr("dR = Rd");
    for (const auto& a : family) dr.expect_equal(a, R(d(a)), coboundary(R(a), complex));
    rep.add(dr.done());
  }
  for (CubeVariant v : {CubeVariant::S0, CubeVariant::Symmetrized}) {
    const std::string tag = v == CubeVariant::S0 ? "s0: " : "s: ";
    auto s = [v, &p](const CubeForm& a) { return cube_dupont_s(a, v, p.mutate); };
    CheckBuilder hom(tag + "ds + sd = 1 - WR"), ss(tag + "s^2 = 0"), sw(tag + "sW = 0"), rs(tag + "Rs = 0");
    for (const CubeCell& c : complex.all()) sw.expect_equal(c, s(W(Cochain<CubeCell>::basis(c))), zero);
    for (const auto& a : family) {
      hom.expect_equal(a, d(s(a)) + s(d(a)), a - W(R(a)));
      ss.expect_equal(a, s(s(a)), zero);
      rs.expect_equal(a, R(s(a)), Cochain<CubeCell>());
    }
    rep.add(hom.done());
    rep.add(ss.done());
    rep.add(sw.done());
    rep.add(rs.done());
  }
  {
    CheckBuilder avg("symmetrization: S_n average = C expansion");
    CheckBuilder inv("symmetrization: slot permutation invariance");
    CheckBuilder anti("psi_eps psi_eps' + psi_eps' psi_eps = 0");
    std::vector<std::vector<int>> all_eps;
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
      std::vector<int> eps(n - 1);
      for (int i = 0; i < n - 1; ++i) eps[i] = (mask >> i) & 1u;
      all_eps.push_back(eps);
    }
    auto eps_string = [](const std::vector<int>& e) {
      std::string s = "(";
      for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
      return s + ")";
    };
    for (const auto& a : family) {
      const CubeForm sa = cube_dupont_s(a, CubeVariant::Symmetrized, p.mutate);
      avg.expect_equal(a, cube_dupont_s_average(a), sa);
      std::vector<int> sigma(n);
      std::iota(sigma.begin(), sigma.end(), 0);
      do {
        const auto inv_sigma = inverse_permutation(sigma);
        inv.expect_equal(perm_string(sigma) + " on " + to_string(a),
                         permute_coordinates(cube_dupont_s(permute_coordinates(a, inv_sigma), CubeVariant::Symmetrized,
                                                           p.mutate),
                                             sigma),
                         sa);
      } while (std::next_permutation(sigma.begin(), sigma.end()));
      for (const auto& e1 : all_eps)
        for (const auto& e2 : all_eps) {
          if (e2 < e1) continue;
          anti.expect_equal(eps_string(e1) + "," + eps_string(e2) + " on " + to_string(a),
                            psi(e1, psi(e2, a, p.mutate), p.mutate) + psi(e2, psi(e1, a, p.mutate), p.mutate), zero);
        }
    }
    rep.add(avg.done());
    rep.add(inv.done());
    rep.add(anti.done());
  }
  return rep;
}

}  // namespace dupont
