#include <random>

#include "helpers.hpp"

using namespace ainf;
using namespace ainf::test;

namespace {

ArtinVec vec(int dim, const std::vector<std::tuple<int, int, int, Q>>& terms, int n = 4) {
  ArtinVec v = zero_artin(dim, n);
  for (const auto& [i, e, s, c] : terms) v[i].add(e, s, c);
  return v;
}

}  // namespace

TEST_SUITE("deformation") {
  TEST_CASE("Artinian scalars") {
    const ArtinScalar eps = ArtinScalar::monomial(4, 1, 0, 1);
    CHECK((eps * eps * eps * eps).is_zero());
    CHECK_FALSE((eps * eps * eps).is_zero());
    CHECK(eps.nilpotent());
    CHECK_FALSE(ArtinScalar::constant(4, 2).nilpotent());
    const ArtinScalar f = ArtinScalar::monomial(4, 1, 2, 3);  // 3 ε t^2
    CHECK(f.integrate_t() == ArtinScalar::monomial(4, 1, 3, 1));
    CHECK(f.integrate_t().derivative_t() == f);
    CHECK(f.at_t(2) == ArtinScalar::monomial(4, 1, 0, 12));
    CHECK(f.t_degree() == 2);
    CHECK(ArtinScalar(4).t_degree() == -1);
    CHECK(truncate_eps({f}, 2)[0] == ArtinScalar::monomial(2, 1, 2, 3));
  }

  TEST_CASE("Maurer-Cartan elements") {
    const AlgebraDocument d = builtin_document("ext1");
    for (const auto& m : d.mc) CHECK(mc_check(*d.algebra, m.b).passed);
    // ε·1 squares to ε²·1.
    CHECK_FALSE(mc_check(*d.algebra, vec(2, {{0, 1, 0, 1}})).passed);
    std::mt19937_64 rng(7);
    for (const char* name : {"ext1-pulled", "poly4", "mat2-ext"}) {
      const AlgebraDocument e = builtin_document(name);
      std::optional<ArtinVec> b;
      for (int attempt = 0; attempt < 16 && !b; ++attempt) b = random_mc_element(*e.algebra, 4, rng);
      REQUIRE(b);  // a random first-order cocycle can be obstructed
      CHECK(all_zero(mc_residual(*e.algebra, *b)));
    }
  }

  TEST_CASE("gauge flow of an acyclic direction") {
    const AlgebraDocument d = builtin_document("ext1-contractible");
    // c = ε u, b0 = 0: the only term is m_1(c) = ε v, so b(t) = t ε v.
    const GaugePath p = gauge_flow(*d.algebra, zero_artin(4, 4), vec(4, {{2, 1, 0, 1}}));
    CHECK(p.b == vec(4, {{3, 1, 1, 1}}));
    CHECK(check_gauge_path(*d.algebra, p).passed);
    CHECK(check_gauge_invariance(*d.algebra, *d.phi, p).passed);
  }

  TEST_CASE("zero gauge parameter gives a constant path") {
    const AlgebraDocument d = builtin_document("mat2-ext");
    const ArtinVec b0 = d.mc.front().b;
    const GaugePath p = gauge_flow(*d.algebra, b0, zero_artin(8, d.eps_order));
    CHECK(p.b == b0);
  }

  TEST_CASE("document gauge flows move and keep psi") {
    for (const char* name : {"ext1-contractible", "mat2-ext"}) {
      const AlgebraDocument d = builtin_document(name);
      for (const auto& g : d.gauge) {
        const GaugePath p = gauge_flow(*d.algebra, g.b0, g.c);
        const Report r = check_gauge_path(*d.algebra, p);
        CHECK(r.passed);
        CHECK(r.caps.at("t_degree") > 0);
        CHECK(check_gauge_invariance(*d.algebra, *d.shi(), p).passed);
      }
    }
  }

  TEST_CASE("de-skewed inner product is not gauge invariant") {
    const AlgebraDocument d = builtin_document("neg-gauge");
    bool moved = false;
    for (const auto& g : d.gauge) {
      const GaugePath p = gauge_flow(*d.algebra, g.b0, g.c);
      moved = moved || !check_gauge_invariance(*d.algebra, *d.shi(), p).passed;
    }
    CHECK(moved);
  }

  TEST_CASE("misplaced gauge data is rejected") {
    const AlgebraDocument d = builtin_document("ext1");
    CHECK_THROWS_AS(gauge_flow(*d.algebra, zero_artin(2, 4), vec(2, {{1, 1, 0, 1}})), std::invalid_argument);
    CHECK_THROWS_AS(gauge_flow(*d.algebra, zero_artin(2, 4), vec(2, {{0, 0, 0, 1}})), std::invalid_argument);
    CHECK_THROWS_AS(gauge_flow(*d.algebra, zero_artin(3, 4), zero_artin(3, 4)), std::invalid_argument);
  }

  TEST_CASE("psi evaluation agrees with the series") {
    for (const char* name : {"ext1", "ext1-pulled", "mat2-ext"}) {
      const AlgebraDocument d = builtin_document(name);
      const auto psi = potential_psi(*d.algebra, *d.shi(), 6, kDefaultParity);
      for (const auto& m : d.mc) CHECK(eval_psi(*d.algebra, *d.shi(), m.b) == eval_series(psi.series, m.b));
    }
  }

  TEST_CASE("holonomy of a linear cochain") {
    const AlgebraDocument d = builtin_document("ext1");
    const HochschildCochain& alpha = d.cochains.front().alpha;  // α(θ)(1) = 1
    const ArtinVec b = vec(2, {{1, 1, 0, 1}});
    CHECK(holonomy(alpha, b) == ArtinScalar::monomial(4, 1, 0, 1));
    for (const auto& c : d.cochains)
      for (const auto& m : d.mc) CHECK(holonomy(c.alpha, m.b) == eval_psi(*d.algebra, shi_from_cocycle(c.alpha), m.b));
  }
}
