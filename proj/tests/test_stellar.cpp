#include "catch_amalgamated.hpp"

#include "dupont/stellar.hpp"

using namespace dupont;

namespace {

Simplex S(std::vector<Vertex> v) { return Simplex::from_sorted(std::move(v)); }

std::array<std::size_t, 4> counts(const SimplicialComplex& k) {
  return {k.cells(0).size(), k.cells(1).size(), k.cells(2).size(), k.cells(3).size()};
}

Chain<Simplex> chain_image(const GradedLinearMap<Simplex>& m, const Simplex& c) {
  return m.apply(Chain<Simplex>::basis(c));
}
Cochain<Simplex> cochain_image(const GradedLinearMap<Simplex>& m, const Simplex& c) {
  return m.apply(Cochain<Simplex>::basis(c));
}

}  // namespace

TEST_CASE("star complexes", "[stellar]") {
  auto k1 = star_complex(1, {0, 1});
  CHECK(k1.all() == std::set<Simplex>{S({kStar}), S({0}), S({1}), S({kStar, 0}), S({kStar, 1})});
  CHECK(counts(star_complex(2, {0, 1, 2})) == std::array<std::size_t, 4>{4, 6, 3, 0});
  CHECK(counts(star_complex(2, {0, 1})) == std::array<std::size_t, 4>{4, 5, 2, 0});
  // |I| = 1 just renames the vertex
  CHECK(counts(star_complex(2, {1})) == std::array<std::size_t, 4>{3, 3, 1, 0});
  CHECK_THROWS_AS(star_complex(2, {0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(star_complex(2, {}), std::invalid_argument);

  auto c21 = cubical_star_complex(2, 1);
  CHECK(c21.cells(0).size() == 6);
  CHECK(c21.cells(1).size() == 7);
  CHECK(c21.cells(2).size() == 2);
  auto c22 = cubical_star_complex(2, 2);
  CHECK(c22.cells(0).size() == 9);
  CHECK(c22.cells(1).size() == 12);
  CHECK(c22.cells(2).size() == 4);
}

TEST_CASE("welding maps on the subdivided interval", "[stellar]") {
  auto ch = welding_dr(1, {0, 1}, Side::Chains);
  // [e_0,e_1] -> [e_0,e_*] + [e_*,e_1], and [e_0,e_*] = -[*,0]
  Chain<Simplex> expect_i;
  expect_i.add(S({kStar, 0}), -1);
  expect_i.add(S({kStar, 1}), 1);
  CHECK(chain_image(ch.inclusion, S({0, 1})) == expect_i);
  Chain<Simplex> expect_a;
  expect_a.add(S({kStar, 0}), Scalar(-1, 2));
  expect_a.add(S({kStar, 1}), Scalar(-1, 2));
  CHECK(chain_image(ch.homotopy, S({kStar})) == expect_a);
  Chain<Simplex> expect_p;
  expect_p.add(S({0}), Scalar(1, 2));
  expect_p.add(S({1}), Scalar(1, 2));
  CHECK(chain_image(ch.projection, S({kStar})) == expect_p);

  auto co = welding_dr(1, {0, 1}, Side::Cochains);
  Cochain<Simplex> expect_ci;
  expect_ci.add(S({0}), 1);
  expect_ci.add(S({kStar}), Scalar(1, 2));
  CHECK(cochain_image(co.inclusion, S({0})) == expect_ci);
  // a^([e_0,e_*]^) = 1/2 e_*^, i.e. a^([*,0]^) = -1/2 e_*^
  CHECK(cochain_image(co.homotopy, S({kStar, 0})) == Cochain<Simplex>::basis(S({kStar}), Scalar(-1, 2)));
  CHECK(cochain_image(co.homotopy, S({kStar, 1})) == Cochain<Simplex>::basis(S({kStar}), Scalar(-1, 2)));
  CHECK(cochain_image(co.projection, S({kStar})).is_zero());
}

TEST_CASE("p_* averages over the missing vertices", "[stellar]") {
  auto ch = welding_dr(2, {0, 1, 2}, Side::Chains);
  // [e_*,e_0] -> 1/3([e_1,e_0] + [e_2,e_0])
  Chain<Simplex> expect;
  expect.add(S({0, 1}), Scalar(-1, 3));
  expect.add(S({0, 2}), Scalar(-1, 3));
  CHECK(chain_image(ch.projection, S({kStar, 0})) == expect);
}

TEST_CASE("welding retractions are special for every face", "[stellar]") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& I : all_faces(n)) {
      INFO("n=" << n << " I=" << to_string(I));
      auto ch = welding_dr(n, I, Side::Chains);
      CHECK(check_dr(ch).all_passed());
      auto [ci, cp] = check_chain_maps(ch);
      CHECK(ci.passed);
      CHECK(cp.passed);
      auto co = welding_dr(n, I, Side::Cochains);
      CHECK(check_dr(co).all_passed());
      auto lit = welding_cochain_formulas(n, I);
      CHECK(lit.inclusion == co.inclusion);
      CHECK(lit.projection == co.projection);
      CHECK(lit.homotopy == co.homotopy);
    }
  }
}

TEST_CASE("cubical welding", "[stellar][cube]") {
  // one slot: the simplicial retraction of the subdivided interval
  auto c = cubical_welding_dr(1, 1, Side::Chains);
  auto s = welding_dr(1, {0, 1}, Side::Chains);
  for (int d = 0; d <= 1; ++d) CHECK(c.homotopy.block(d) == s.homotopy.block(d));
  for (int n = 1; n <= 3; ++n) {
    for (int k = 0; k <= n; ++k) {
      INFO("n=" << n << " k=" << k);
      auto ch = cubical_welding_dr(n, k, Side::Chains);
      CHECK(check_dr(ch).all_passed());
      auto co = cubical_welding_dr(n, k, Side::Cochains);
      CHECK(check_dr(co).all_passed());
      auto dual = dualize_dr(ch);
      CHECK(co.inclusion == dual.inclusion);
      CHECK(co.projection == dual.projection);
      CHECK(co.homotopy == dual.homotopy);
    }
  }
  // the unsymmetrized homotopy is a retraction too, but a different one
  auto ch = cubical_welding_dr(2, 2, Side::Chains);
  auto a0 = cubical_welding_homotopy_unsymmetrized(2, 2, Side::Chains);
  CHECK_FALSE(a0 == ch.homotopy);
}

TEST_CASE("verify_stellar", "[stellar][suite]") {
  auto r = verify_stellar({2, {}, -1});
  for (const auto& c : r.checks) {
    INFO(c.name);
    CHECK(c.passed);
  }
  CHECK(r.checks.size() > 50);
  CHECK(parse_vertex_set("2,0") == VertexSet{0, 2});
  CHECK_THROWS(parse_vertex_set("0,x"));
}
