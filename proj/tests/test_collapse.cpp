#include "catch_amalgamated.hpp"

#include "dupont/collapse.hpp"

using namespace dupont;

namespace {

Simplex S(std::vector<Vertex> v) { return Simplex::from_sorted(std::move(v)); }

void require_all(const Report& r) {
  for (const auto& c : r.checks) {
    INFO(c.name << (c.counterexample ? " input " + c.counterexample->input + ": " + c.counterexample->lhs +
                                           " vs " + c.counterexample->rhs
                                     : std::string()));
    CHECK(c.passed);
  }
}

}  // namespace

TEST_CASE("elementary collapse", "[collapse]") {
  const auto tri = simplex_closure({S({0, 1, 2})});
  const CollapsePair pair{S({0, 1, 2}), S({1, 2})};

  SECTION("chain maps") {
    auto r = elementary_collapse_dr(tri, pair, Side::Chains);
    CHECK(r.small.basis.total_size() == 5);
    // [1,2] is pushed onto the other two edges: [1,2] -> [0,2] - [0,1]
    Chain<Simplex> want;
    want.add(S({0, 2}), 1);
    want.add(S({0, 1}), -1);
    CHECK(r.projection.apply(Chain<Simplex>::basis(S({1, 2}))) == want);
    CHECK(r.homotopy.apply(Chain<Simplex>::basis(S({1, 2}))) == Chain<Simplex>::basis(S({0, 1, 2})));
    CHECK(check_dr(r).all_passed());
    auto [di, dp] = check_chain_maps(r);
    CHECK(di.passed);
    CHECK(dp.passed);
  }
  SECTION("cochain formulas are the dual") {
    auto lit = elementary_collapse_cochain_formulas(tri, pair);
    auto du = elementary_collapse_dr(tri, pair, Side::Cochains);
    CHECK(lit.inclusion == du.inclusion);
    CHECK(lit.projection == du.projection);
    CHECK(lit.homotopy == du.homotopy);
    CHECK(check_dr(lit).all_passed());
  }
  SECTION("pairs that are not free") {
    CHECK_THROWS_AS(elementary_collapse_dr(tri, {S({0, 1}), S({0})}, Side::Chains), std::domain_error);
    const auto two = simplex_closure({S({0, 1, 2}), S({1, 2, 3})});
    CHECK_THROWS_WITH(elementary_collapse_dr(two, {S({0, 1, 2}), S({1, 2})}, Side::Chains),
                      Catch::Matchers::ContainsSubstring("[1,2,3]"));
    CHECK_THROWS_AS(elementary_collapse_dr(tri, {S({0, 1, 2}), S({0})}, Side::Chains), std::domain_error);
  }
}

TEST_CASE("expansion and collapse sequences", "[collapse]") {
  for (int n = 1; n <= 3; ++n)
    for (Vertex j = 0; j <= n; ++j) {
      const auto seq = expansion_sequence(n, j);
      REQUIRE(seq.size() == (1u << n));
      CHECK(seq.front().pair.sigma == S({kStar, j}));
      CHECK(seq.front().pair.face == S({kStar}));
      CHECK(seq.back().complex == simplex_closure({seq.back().pair.sigma}));
    }
  const auto seq = collapse_sequence(2, {0});
  REQUIRE(seq.size() == 4);
  CHECK(seq[0].face == S({0, 1, 2}));
  CHECK(seq[1].face == S({0, 1}));
  CHECK(seq[2].face == S({0, 2}));
  CHECK(seq[3].face == S({0}));
  CHECK(collapse_dr(2, {0}, Side::Chains).small.basis == GradedBasis<Simplex>(star_complex(2, {0})));
}

TEST_CASE("zigzag through a pivot", "[collapse]") {
  const VertexSet all{0, 1, 2};
  const auto z0 = zigzag_retraction(2, 0, all);
  const auto z2 = zigzag_retraction(2, 2, all);
  CHECK(z0.projection == z2.projection);
  CHECK_FALSE(z0.inclusion == z2.inclusion);
  // top cochain lands on the starred facet opposite the pivot
  Cochain<Simplex> want;
  want.add(S({kStar, 0, 1}), 1);
  CHECK(z2.inclusion.apply(Cochain<Simplex>::basis(S({0, 1, 2}))) == want);
  // [2,0] written with the pivot first is -[0,2]
  Cochain<Simplex> a;
  a.add(S({kStar, 0}), 1);
  CHECK(z2.homotopy.apply(Cochain<Simplex>::basis(S({kStar, 0, 2}))) == a);
}

TEST_CASE("averaged collapses give the welding retraction", "[collapse][suite]") {
  for (int n = 1; n <= 3; ++n) {
    INFO("n=" << n);
    require_all(verify_collapse_equality(n));
  }
}

TEST_CASE("averaged collapses for a proper face", "[collapse][suite]") {
  for (const auto& [n, I] : std::vector<std::pair<int, VertexSet>>{{2, {0, 1}}, {2, {1}}, {3, {0, 1}}, {3, {0, 1, 2}}}) {
    INFO("n=" << n << " I=" << to_string(I));
    require_all(verify_general_I(n, I));
  }
}
