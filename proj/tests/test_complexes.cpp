#include "catch_amalgamated.hpp"

#include "dupont/complexes.hpp"

using namespace dupont;

namespace {

Simplex S(std::vector<Vertex> v) { return Simplex::from_sorted(std::move(v)); }

template <class Cell>
void require_d_squared_zero(const CellComplex<Cell>& k) {
  auto bd = boundary_map<Cell>(k);
  auto dd = bd * bd;
  for (int d = 0; d <= dd.domain().top_degree(); ++d) REQUIRE(dd.block(d).isZero());
  auto cb = coboundary_map<Cell>(k);
  auto cc = cb * cb;
  for (int d = 0; d <= cc.domain().top_degree(); ++d) REQUIRE(cc.block(d).isZero());
}

}  // namespace

TEST_CASE("orientation and printing", "[complexes]") {
  auto o = orient({0, kStar});
  CHECK(o.cell == S({kStar, 0}));
  CHECK(o.sign == -1);
  CHECK(to_string(o.cell) == "[*,0]");
  CHECK(orient({2, 0, 1}).sign == 1);
  CHECK(orient({1, 0, 2}).sign == -1);
  CHECK_THROWS_AS(orient({1, 1}), std::invalid_argument);
  CHECK(parse_simplex("[*,0,2]") == S({kStar, 0, 2}));
  CHECK_THROWS(parse_simplex("[2,0]"));
}

TEST_CASE("boundary on the standard simplex", "[complexes]") {
  auto k = standard_simplex(2);
  auto d1 = boundary(Chain<Simplex>::basis(S({0, 1})), k);
  Chain<Simplex> e;
  e.add(S({1}), 1);
  e.add(S({0}), -1);
  CHECK(d1 == e);

  auto d2 = boundary(Chain<Simplex>::basis(S({0, 1, 2})), k);
  Chain<Simplex> f;
  f.add(S({1, 2}), 1);
  f.add(S({0, 2}), -1);
  f.add(S({0, 1}), 1);
  CHECK(d2 == f);
  CHECK(to_string(d2) == "1*[0,1] + -1*[0,2] + 1*[1,2]");

  CHECK(boundary(Chain<Simplex>::basis(S({0})), k).is_zero());
  CHECK_THROWS_AS(boundary(Chain<Simplex>::basis(S({0, 3})), k), std::domain_error);
}

TEST_CASE("coboundary is the adjoint of the boundary", "[complexes]") {
  auto k = standard_simplex(1);
  auto x = coboundary(Cochain<Simplex>::basis(S({0})), k);
  CHECK(x == Cochain<Simplex>::basis(S({0, 1}), -1));

  // subdivided interval: vertices 0, *, 1
  auto star = simplex_closure({S({kStar, 0}), S({kStar, 1})});
  auto y = coboundary(Cochain<Simplex>::basis(S({kStar})), star);
  Cochain<Simplex> expected;
  expected.add(orient({0, kStar}), 1);
  expected.add(orient({kStar, 1}), -1);
  CHECK(y == expected);

  auto k3 = standard_simplex(3);
  CHECK(coboundary(Cochain<Simplex>::basis(S({0, 1, 2, 3})), k3).is_zero());
  for (const Simplex& a : k3.all())
    for (const Simplex& b : k3.all()) {
      auto xa = Cochain<Simplex>::basis(a);
      auto cb = Chain<Simplex>::basis(b);
      REQUIRE(pair(coboundary(xa, k3), cb) == pair(xa, boundary(cb, k3)));
    }
}

TEST_CASE("pairing", "[complexes]") {
  auto x = Cochain<Simplex>::basis(S({0, 1}));
  Chain<Simplex> c;
  c.add(orient({1, 0}), 1);
  CHECK(pair(x, Chain<Simplex>::basis(S({0, 1}))) == 1);
  CHECK(pair(x, c) == -1);
  CHECK(pair(Cochain<Simplex>::basis(S({0})), Chain<Simplex>::basis(S({1}))) == 0);
}

TEST_CASE("standard complexes", "[complexes]") {
  for (int n = 0; n <= 4; ++n) {
    auto k = standard_simplex(n);
    for (int p = 0; p <= n; ++p) CHECK(Scalar(static_cast<int>(k.count(p))) == binomial(n + 1, p + 1));
    require_d_squared_zero(k);
  }
  for (int n = 1; n <= 3; ++n) {
    auto k = standard_cube(n);
    for (int p = 0; p <= n; ++p)
      CHECK(Scalar(static_cast<int>(k.count(p))) == binomial(n, p) * (1 << (n - p)));
    require_d_squared_zero(k);
  }
  auto sq = standard_cube(2);
  CHECK(sq.count(0) == 4);
  CHECK(sq.count(1) == 4);
  CHECK(sq.count(2) == 1);
  auto c3 = standard_cube(3);
  CHECK(c3.count(1) == 12);
  CHECK(c3.count(2) == 6);
}

TEST_CASE("cube boundary carries the Koszul sign", "[complexes]") {
  auto sq = standard_cube(2);
  CubeCell top({S({0, 1}), S({0, 1})});
  auto b = boundary(Chain<CubeCell>::basis(top), sq);
  CHECK(b.coefficient(CubeCell({S({1}), S({0, 1})})) == 1);
  CHECK(b.coefficient(CubeCell({S({0}), S({0, 1})})) == -1);
  CHECK(b.coefficient(CubeCell({S({0, 1}), S({1})})) == -1);
  CHECK(b.coefficient(CubeCell({S({0, 1}), S({0})})) == 1);
  CHECK(to_string(top) == "[0,1]x[0,1]");
}

TEST_CASE("face closure is enforced", "[complexes]") {
  CHECK_THROWS_AS(SimplicialComplex(std::set<Simplex>{S({0, 1})}), std::invalid_argument);
}

TEST_CASE("graded maps: transpose and composition", "[complexes]") {
  auto k = standard_simplex(2);
  auto bd = boundary_map<Simplex>(k);
  CHECK(dualize_map(dualize_map(bd)) == bd);
  auto one = GradedLinearMap<Simplex>::identity(GradedBasis<Simplex>(k));
  CHECK(dualize_map(one) == one);
  CHECK(bd * one == bd);
  // d on cochains of Delta^1 as a matrix
  auto cb = coboundary_map<Simplex>(standard_simplex(1));
  CHECK(cb.block(0)(0, 0) == -1);
  CHECK(cb.block(0)(0, 1) == 1);
}

TEST_CASE("deformation retraction algebra", "[complexes][dr]") {
  auto k = standard_simplex(2);
  auto space = GradedSpace<Simplex>::of(k, Side::Chains);
  auto trivial = identity_dr(space);
  CHECK(check_dr(trivial).all_passed());
  auto composed = compose_dr(trivial, trivial);
  CHECK(composed.homotopy == trivial.homotopy);
  CHECK(check_dr(dualize_dr(trivial)).all_passed());

  // corrupt the homotopy: identity (2) fails on a named cell
  auto bad = trivial;
  bad.homotopy.block(0)(0, 0) = 1;
  auto rep = check_dr(bad);
  CHECK_FALSE(rep.all_passed());
  CHECK_FALSE(rep.get("d*a + a*d = 1 - i*p").passed);
  CHECK(rep.get("d*a + a*d = 1 - i*p").input == "[0]");
}
