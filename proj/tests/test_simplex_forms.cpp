#include "catch_amalgamated.hpp"

#include "dupont/simplex_forms.hpp"

using namespace dupont;

namespace {

SimplexForm F(int n, const char* text) { return parse_simplex_form(text, n); }
SimplexForm w(int n, std::initializer_list<int> idx) { return whitney_form(n, idx, false); }
SimplexForm wb(int n, std::initializer_list<int> idx) { return whitney_form(n, idx, true); }

std::vector<SimplexForm> probes(int n, int count, std::uint64_t seed) {
  std::vector<SimplexForm> out;
  for (int p = 0; p <= n; ++p)
    for (int s = 0; s < count; ++s) out.push_back(random_form(n, p, 3, seed + 1000 * p + s));
  return out;
}

}  // namespace

TEST_CASE("canonical form modulo the simplex relations", "[forms]") {
  CHECK(F(2, "1*t0 + 1*t1 + 1*t2") == SimplexForm::constant(2, 1));
  CHECK(F(1, "1*dt0 + 1*dt1").is_zero());
  CHECK(F(1, "1*t1*dt1") == F(1, "-1*dt0 + 1*t0*dt0"));
  auto a = random_form(3, 2, 3, 7);
  CHECK(SimplexForm::canonicalize(3, a.ambient()) == a);
  CHECK(parse_simplex_form(to_string(a), 3) == a);
}

TEST_CASE("wedge and d", "[forms]") {
  auto dt0 = SimplexForm::differential(3, 0);
  CHECK(wedge(dt0, dt0).is_zero());
  CHECK(wedge(F(3, "1*t0*dt1"), F(3, "1*dt2")) == F(3, "1*t0*dt1^dt2"));
  CHECK(wedge(wb(2, {0}), wb(2, {1})) == F(2, "1*t0*t1"));
  CHECK(exterior_derivative(SimplexForm::constant(2, 5)).is_zero());
  CHECK(exterior_derivative(SimplexForm::coordinate(1, 0)) == SimplexForm::differential(1, 0));

  for (std::uint64_t s = 0; s < 10; ++s) {
    auto a = random_form(3, 1, 3, s), b = random_form(3, 2, 2, s + 50);
    CHECK(wedge(a, b) == wedge(b, a));  // |a||b| even
    auto c = random_form(3, 1, 2, s + 99);
    CHECK(wedge(a, c) == -wedge(c, a));
    CHECK(exterior_derivative(exterior_derivative(b)).is_zero());
    CHECK(exterior_derivative(wedge(a, b)) ==
          wedge(exterior_derivative(a), b) - wedge(a, exterior_derivative(b)));
  }
}

TEST_CASE("Whitney forms", "[forms][whitney]") {
  CHECK(w(2, {0}) == SimplexForm::coordinate(2, 0));
  // On Delta^1 with t = t_1
  CHECK(w(1, {0}) == F(1, "1 + -1*t1"));
  CHECK(w(1, {1}) == F(1, "1*t1"));
  CHECK(w(1, {0, 1}) == F(1, "1*dt1"));
  CHECK_THROWS(w(2, {1, 1}));
  // sum_k omega_{k,I} = dt_I
  for (int n = 1; n <= 3; ++n) {
    for (int mask = 1; mask < (1 << (n + 1)); ++mask) {
      std::vector<int> I;
      for (int i = 0; i <= n; ++i)
        if (mask & (1 << i)) I.push_back(i);
      SimplexForm sum(n);
      for (int k = 0; k <= n; ++k) {
        if (mask & (1 << k)) continue;
        std::vector<int> kI{k};
        kI.insert(kI.end(), I.begin(), I.end());
        sum += whitney_form(n, kI, false);
      }
      SimplexForm dtI = SimplexForm::constant(n, 1);
      for (int i : I) dtI = wedge(dtI, SimplexForm::differential(n, i));
      if (static_cast<int>(I.size()) == n + 1) continue;  // no k left; dt_I vanishes there anyway
      CHECK(sum == dtI);
    }
  }
}

TEST_CASE("contraction with E_i", "[forms]") {
  CHECK(contract_E(1, w(1, {0, 1})) == w(1, {0}));
  CHECK(contract_E(2, w(2, {0, 1})).is_zero());
  CHECK(contract_E(0, F(2, "1*t0*t1")).is_zero());
  // iota_{E_{i_l}} omega_I = (-1)^{l+1} omega_{I minus i_l}... checked over index sets
  for (int n = 1; n <= 3; ++n) {
    for (int mask = 3; mask < (1 << (n + 1)); ++mask) {
      std::vector<int> I;
      for (int i = 0; i <= n; ++i)
        if (mask & (1 << i)) I.push_back(i);
      if (I.size() < 2) continue;
      for (int i = 0; i <= n; ++i) {
        auto got = contract_E(i, whitney_form(n, I, false));
        auto pos = std::find(I.begin(), I.end(), i);
        if (pos == I.end()) {
          CHECK(got.is_zero());
        } else {
          const int l = static_cast<int>(pos - I.begin());
          std::vector<int> rest = I;
          rest.erase(rest.begin() + l);
          CHECK(got == Scalar(l % 2 ? 1 : -1) * whitney_form(n, rest, false));
        }
      }
    }
  }
}

TEST_CASE("cone homotopy on Whitney forms", "[forms][cone]") {
  CHECK(cone_homotopy(1, w(1, {0, 1})) == w(1, {0}));
  CHECK(cone_homotopy(2, w(3, {0, 1})).is_zero());
  CHECK(cone_homotopy(0, w(2, {0, 1, 2})) == Scalar(-1, 2) * w(2, {1, 2}));
  // q = e_1 on Delta^1: h(dt) = 1 - t with t = t_1
  CHECK(cone_homotopy(BaryPoint::vertex(1, 1), F(1, "1*dt1")) == F(1, "1 + -1*t1"));
  // h^1(g dt) is the integral from t to 1
  CHECK(cone_homotopy(1, F(1, "1*t1*dt1")) == F(1, "1/2 + -1/2*t1^2"));
  CHECK(cone_homotopy(0, SimplexForm::constant(2, 3)).is_zero());
}

TEST_CASE("cone homotopy identities on random forms", "[forms][cone]") {
  for (int n = 1; n <= 3; ++n) {
    std::vector<BaryPoint> pts;
    for (int i = 0; i <= n; ++i) pts.push_back(BaryPoint::vertex(n, i));
    pts.push_back(BaryPoint::barycenter(n, {0, 1}));
    std::vector<int> all(n + 1);
    for (int i = 0; i <= n; ++i) all[i] = i;
    pts.push_back(BaryPoint::barycenter(n, all));
    for (const auto& a : probes(n, 6, 17)) {
      for (const auto& q : pts) {
        auto lhs = exterior_derivative(cone_homotopy(q, a)) + cone_homotopy(q, exterior_derivative(a));
        REQUIRE(lhs == eval_at(q, a) - a);
        REQUIRE(cone_homotopy(q, cone_homotopy(q, a)).is_zero());
        REQUIRE(eval_at(q, cone_homotopy(q, a)).is_zero());
      }
      for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          REQUIRE((cone_homotopy(i, cone_homotopy(j, a)) + cone_homotopy(j, cone_homotopy(i, a))).is_zero());
    }
  }
}

TEST_CASE("evaluation", "[forms]") {
  CHECK(eval_at(BaryPoint::vertex(1, 0), SimplexForm::coordinate(1, 0)) == SimplexForm::constant(1, 1));
  CHECK(eval_scalar(BaryPoint::barycenter(1, {0, 1}), SimplexForm::coordinate(1, 1)) == Scalar(1, 2));
  CHECK(eval_at(BaryPoint::vertex(2, 1), w(2, {0, 1})).is_zero());
  CHECK_THROWS(BaryPoint({Scalar(1), Scalar(1)}));
}

TEST_CASE("pullbacks", "[forms]") {
  CHECK(permute(wb(1, {0, 1}), {1, 0}) == -wb(1, {0, 1}));
  CHECK(face_pullback(0, wb(2, {0})).is_zero());
  CHECK(face_pullback(2, wb(2, {0, 1})) == wb(1, {0, 1}));
  for (std::uint64_t s = 0; s < 10; ++s) {
    auto a = random_form(3, 1, 2, s), b = random_form(3, 1, 2, s + 7);
    std::vector<int> sigma{2, 0, 3, 1};
    CHECK(permute(wedge(a, b), sigma) == wedge(permute(a, sigma), permute(b, sigma)));
    CHECK(permute(exterior_derivative(a), sigma) == exterior_derivative(permute(a, sigma)));
    CHECK(face_pullback(1, exterior_derivative(a)) == exterior_derivative(face_pullback(1, a)));
  }
}

TEST_CASE("face integration by two routes", "[forms][integration]") {
  CHECK(integrate_face({0, 1}, w(1, {0, 1}), IntegrationMethod::Homotopy) == 1);
  CHECK(integrate_face({0, 1}, w(1, {0, 1}), IntegrationMethod::Dirichlet) == 1);
  CHECK(integrate_face({0, 1, 2}, w(2, {0, 1, 2}), IntegrationMethod::Dirichlet) == Scalar(1, 2));
  CHECK(integrate_face({0, 1}, F(1, "1*t0*dt1"), IntegrationMethod::Dirichlet) == Scalar(1, 2));
  CHECK(integrate_face({0, 1}, F(1, "1*t0*dt1"), IntegrationMethod::Homotopy) == Scalar(1, 2));
  CHECK_THROWS_AS(integrate_face({0, 1}, F(1, "1*t0"), IntegrationMethod::Dirichlet), std::domain_error);
}

TEST_CASE("random forms are deterministic", "[forms]") {
  CHECK(random_form(2, 1, 3, 5) == random_form(2, 1, 3, 5));
  auto a = random_form(1, 1, 0, 0);
  CHECK(a.poly().terms().size() == 1);
  CHECK(a.poly().terms().begin()->first.wedge == 1u);
  CHECK_THROWS(random_form(2, 3, 1, 0));
}

TEST_CASE("piecewise forms", "[forms][piecewise]") {
  Simplex left = Simplex::from_sorted({kStar, 0}), right = Simplex::from_sorted({kStar, 1});
  auto k = simplex_closure({left, right});
  // global coordinate t on Delta^1, star at 1/2
  std::map<Simplex, std::vector<BaryPoint>> charts{
      {left, {BaryPoint::barycenter(1, {0, 1}), BaryPoint::vertex(1, 0)}},
      {right, {BaryPoint::barycenter(1, {0, 1}), BaryPoint::vertex(1, 1)}}};
  auto one = restrict_global(SimplexForm::constant(1, 1), k, charts);
  for (const auto& [f, p] : one.pieces()) CHECK(p.form == SimplexForm::constant(1, 1));

  auto dt = restrict_global(SimplexForm::differential(1, 0), k, charts);
  // on [*,1]: t_0 = t'_* / 2
  CHECK(dt.piece(right).form == Scalar(1, 2) * SimplexForm::differential(1, 0));

  std::map<Simplex, PiecewiseForm::Piece> bad{
      {left, {{kStar, 0}, SimplexForm::constant(1, 1)}},
      {right, {{kStar, 1}, SimplexForm::coordinate(1, 1)}}};
  CHECK_THROWS_AS(PiecewiseForm::make(k, bad), CompatibilityError);
  try {
    PiecewiseForm::make(k, bad);
  } catch (const CompatibilityError& e) {
    CHECK(std::string(e.what()).find("[*]") != std::string::npos);
  }

  // reordering a chart does not change the form
  auto g = restrict_global(random_form(1, 0, 3, 4), k, charts);
  auto pieces = g.pieces();
  auto& p = pieces.at(left);
  p.form = reorder_chart(p.form, p.order, {0, kStar});
  p.order = {0, kStar};
  CHECK(PiecewiseForm::make(k, pieces) == g);
}
