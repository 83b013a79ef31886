#include "catch_amalgamated.hpp"

#include "dupont/dupont_homotopy.hpp"
#include "dupont/interval.hpp"

using namespace dupont;

namespace {

Simplex S(std::vector<Vertex> v) { return Simplex::from_sorted(std::move(v)); }
SimplexForm F1(const char* text_in_x) {
  return from_interval_coordinate(parse_poly_form(text_in_x, 1, "x"));
}

void require_all_pass(const Report& r) {
  for (const auto& c : r.checks) {
    INFO(c.name << (c.counterexample ? " input " + c.counterexample->input : std::string()));
    CHECK(c.passed);
  }
}

SimplicialComplex star_interval() { return simplex_closure({S({kStar, 0}), S({kStar, 1})}); }

}  // namespace

TEST_CASE("Whitney and integration maps on the interval", "[dupont]") {
  CHECK(whitney_map(1, Cochain<Simplex>::basis(S({0}))) == F1("1 + -1*x"));
  CHECK(whitney_map(1, Cochain<Simplex>::basis(S({0, 1}))) == F1("1*dx"));
  auto k = standard_simplex(1);
  auto x0 = Cochain<Simplex>::basis(S({0}));
  CHECK(exterior_derivative(whitney_map(1, x0)) == whitney_map(1, coboundary(x0, k)));

  auto f = F1("2 + 3*x + -5*x^3");
  Cochain<Simplex> rf;
  rf.add(S({0}), 2);
  rf.add(S({1}), 0);
  CHECK(integration_map(f) == rf);
  auto g = F1("1*x^2*dx + 4*dx");
  CHECK(integration_map(g) == Cochain<Simplex>::basis(S({0, 1}), Scalar(13, 3)));

  for (int n = 1; n <= 4; ++n) {
    const auto kn = standard_simplex(n);
    for (const Simplex& c : kn.all()) {
      auto x = Cochain<Simplex>::basis(c);
      REQUIRE(integration_map(whitney_map(n, x)) == x);
    }
  }
}

TEST_CASE("Dupont homotopy closed forms", "[dupont]") {
  CHECK(dupont_s(F1("1*x*dx")) == F1("1/2*x^2 + -1/2*x"));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto a = random_form(1, 1, 4, seed);
    CHECK(dupont_s(a) == from_interval_coordinate(interval_dupont(to_interval_coordinate(a))));
  }
  // independent closed form: s(g dx) = int_0^x g - x int_0^1 g, here g = 1 + x
  CHECK(dupont_s(F1("1*dx + 1*x*dx")) == F1("1*x + 1/2*x^2 + -3/2*x"));
  CHECK(dupont_s(whitney_map(2, Cochain<Simplex>::basis(S({0, 2})))).is_zero());
}

TEST_CASE("verify_dupont passes for n = 1, 2", "[dupont][suite]") {
  for (int n = 1; n <= 2; ++n) {
    auto r = verify_dupont({n, 10, 3, 1, false});
    require_all_pass(r);
    CHECK(r.theorems_passed());
  }
}

TEST_CASE("ds + sd on a 0-form vanishes at vertices after subtracting WR", "[dupont]") {
  auto f = random_form(2, 0, 3, 3);
  auto lhs = exterior_derivative(dupont_s(f)) + dupont_s(exterior_derivative(f));
  CHECK(eval_scalar(BaryPoint::vertex(2, 0), lhs) == 0);
  CHECK(lhs == f - whitney_map(2, integration_map(f)));
}

TEST_CASE("mutated homotopy is caught", "[dupont][mutation]") {
  auto r = verify_dupont({1, 3, 2, 1, true});
  CHECK_FALSE(r.theorems_passed());
  const Check* c = r.find("ds + sd = 1 - WR");
  REQUIRE(c);
  CHECK_FALSE(c->passed);
  REQUIRE(c->counterexample);
  CHECK_FALSE(c->counterexample->input.empty());
}

TEST_CASE("lifting to the subdivided interval", "[dupont][lift]") {
  auto k = star_interval();
  auto tent = lift_whitney(k, Cochain<Simplex>::basis(S({kStar})));
  // in each piece's own chart the tent is the coordinate of the star vertex
  for (const auto& [facet, piece] : tent.pieces()) {
    CHECK(piece.order.front() == kStar);
    CHECK(piece.form == SimplexForm::coordinate(1, 0));
  }
  // R W = 1 on the subdivided complex
  for (const Simplex& c : k.all()) {
    auto x = Cochain<Simplex>::basis(c);
    CHECK(lift_integration(lift_whitney(k, x)) == x);
  }
  // chart order does not matter
  VertexRank rank{{1, 0}, {kStar, 1}, {0, 2}};
  for (const Simplex& c : k.all()) {
    auto x = Cochain<Simplex>::basis(c);
    CHECK(lift_whitney(k, x, rank) == lift_whitney(k, x));
  }
}

TEST_CASE("lifted s on a global 1-form matches the two-interval formula", "[dupont][lift]") {
  auto k = star_interval();
  // global coordinate x = t_1; piece [*,0] is [0,1/2], piece [*,1] is [1/2,1]
  std::map<Simplex, std::vector<BaryPoint>> charts{
      {S({kStar, 0}), {BaryPoint::barycenter(1, {0, 1}), BaryPoint::vertex(1, 0)}},
      {S({kStar, 1}), {BaryPoint::barycenter(1, {0, 1}), BaryPoint::vertex(1, 1)}}};
  auto g = parse_poly_form("1 + 3*x^2", 1, "x");
  auto omega = from_interval_coordinate(wedge(g, PolyForm::differential(1, 0)));
  auto lifted = lift_dupont(restrict_global(omega, k, charts));
  // expected: int_a^x g - (x-a)/(b-a) int_a^b g on [a,b], then transported
  auto piece_formula = [&](Scalar a, Scalar b) {
    PolyForm x = PolyForm::coordinate(1, 0);
    return antiderivative(g, a) - (integrate_poly(g, a, b) / (b - a)) * (x - PolyForm::constant(1, a));
  };
  auto expect_left = restrict_global(from_interval_coordinate(piece_formula(0, Scalar(1, 2))), k, charts);
  auto expect_right = restrict_global(from_interval_coordinate(piece_formula(Scalar(1, 2), 1)), k, charts);
  CHECK(lifted.piece(S({kStar, 0})).form == expect_left.piece(S({kStar, 0})).form);
  CHECK(lifted.piece(S({kStar, 1})).form == expect_right.piece(S({kStar, 1})).form);
}
