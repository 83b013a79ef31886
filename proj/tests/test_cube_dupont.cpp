#include "catch_amalgamated.hpp"

#include "dupont/cube_dupont.hpp"

using namespace dupont;

namespace {

Simplex S(std::vector<Vertex> v) { return Simplex::from_sorted(std::move(v)); }
CubeCell C(std::vector<Simplex> slots) { return CubeCell(std::move(slots)); }

CubeForm X(const char* text, int n) { return parse_cube_form(text, n); }

}  // namespace

TEST_CASE("interval operators", "[cube]") {
  CHECK(cube_whitney(1, Cochain<CubeCell>::basis(C({S({1})}))) == X("1*x1", 1));
  CHECK(cube_whitney(1, Cochain<CubeCell>::basis(C({S({0})}))) == X("1 + -1*x1", 1));
  CHECK(cube_dupont_s(X("1*x1*dx1", 1), CubeVariant::S0) == X("1/2*x1^2 + -1/2*x1", 1));
  Cochain<CubeCell> e1 = Cochain<CubeCell>::basis(C({S({1})}));
  CHECK(cube_integration(X("1*x1^2", 1)) == e1);
  CHECK(cube_integration(X("3*x1^2*dx1", 1)) == Cochain<CubeCell>::basis(C({S({0, 1})})));
}

TEST_CASE("cube Whitney map is a tensor of interval Whitney maps", "[cube]") {
  CHECK(cube_whitney(2, Cochain<CubeCell>::basis(C({S({0, 1}), S({0})}))) == X("1*dx1 + -1*x2*dx1", 2));
  CHECK(cube_whitney(2, Cochain<CubeCell>::basis(C({S({1}), S({1})}))) == X("1*x1*x2", 2));
  // second slot edge: the odd factor sits right of an even one, no sign
  CHECK(cube_whitney(2, Cochain<CubeCell>::basis(C({S({0, 1}), S({0, 1})}))) == X("1*dx1^dx2", 2));

  for (int n = 1; n <= 3; ++n) {
    const auto cube = standard_cube(n);
    for (const CubeCell& c : cube.all()) {
      auto x = Cochain<CubeCell>::basis(c);
      INFO(to_string(c));
      CHECK(cube_integration(cube_whitney(n, x)) == x);
      CHECK(exterior_derivative(cube_whitney(n, x)) == cube_whitney(n, coboundary(x, cube)));
    }
  }
}

TEST_CASE("symmetrization weights", "[cube]") {
  CHECK(symmetrization_weight(0, 2) == 1);
  CHECK(symmetrization_weight(1, 2) == 1);
  CHECK(symmetrization_weight(0, 3) == 2);
  CHECK(symmetrization_weight(1, 3) == 1);
  // the weights over all eps count each of the n! permutations once per slot
  for (int n = 1; n <= 5; ++n) {
    Scalar total = 0;
    for (int e = 0; e < n; ++e) total += binomial(n - 1, e) * symmetrization_weight(e, n);
    CHECK(total == factorial(n));
  }
}

TEST_CASE("the two variants and the interval s", "[cube]") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto a = random_cube_form(1, 1, 4, seed);
    CHECK(cube_dupont_s(a, CubeVariant::S0) == cube_dupont_s(a, CubeVariant::Symmetrized));
  }
  // s0 is not symmetric on the square, s is
  auto a = X("1*x1*dx2", 2);
  const auto swap = std::vector<int>{1, 0};
  CHECK(cube_dupont_s(permute_coordinates(a, swap), CubeVariant::Symmetrized) ==
        permute_coordinates(cube_dupont_s(a, CubeVariant::Symmetrized), swap));
  CHECK(cube_dupont_s(a, CubeVariant::Symmetrized) == cube_dupont_s_average(a));
}

TEST_CASE("slot permutation carries a Koszul sign", "[cube]") {
  CHECK(permute_coordinates(X("1*dx1^dx2", 2), {1, 0}) == X("-1*dx1^dx2", 2));
  CHECK(permute_coordinates(X("1*x1*dx2", 2), {1, 0}) == X("1*x2*dx1", 2));
}

TEST_CASE("sW = 0 on every cube basis cochain", "[cube]") {
  for (int n = 1; n <= 3; ++n) {
    const auto cube = standard_cube(n);
    for (const CubeCell& c : cube.all())
      for (CubeVariant v : {CubeVariant::S0, CubeVariant::Symmetrized})
        CHECK(cube_dupont_s(cube_whitney(n, Cochain<CubeCell>::basis(c)), v).is_zero());
  }
}

TEST_CASE("verify_cubical", "[cube][suite]") {
  for (int n = 1; n <= 3; ++n) {
    auto r = verify_cubical({n, n == 3 ? 6 : 15, 3, 2, false});
    for (const auto& c : r.checks) {
      INFO(n << " " << c.name);
      CHECK(c.passed);
    }
  }
  auto bad = verify_cubical({2, 3, 2, 2, true});
  CHECK_FALSE(bad.theorems_passed());
  REQUIRE(bad.find("s: ds + sd = 1 - WR"));
  CHECK_FALSE(bad.find("s: ds + sd = 1 - WR")->passed);
}

TEST_CASE("cube form text round trip", "[cube]") {
  auto a = X("1/2*x1^2*x3*dx2 + -3*dx1^dx3", 3);
  CHECK(parse_cube_form(to_string(a), 3) == a);
}
