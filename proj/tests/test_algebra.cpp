#include "helpers.hpp"

using namespace ainf;
using namespace ainf::test;

namespace {

AlgebraPtr point_algebra() {
  auto b = basis({{"e", 0}}, 0);
  MultilinearTable m(b, b, 1);
  m.add({0, 0}, 0, 1);
  return algebra(b, m);
}

MultilinearTable ext1_m(const BasisPtr& b) {
  MultilinearTable m(b, b, 1);
  m.add({0, 0}, 0, 1);
  m.add({0, 1}, 1, 1);
  m.add({1, 0}, 1, -1);  // (-1)^{deg theta} theta 1
  return m;
}

}  // namespace

TEST_SUITE("ainf-structures") {
  TEST_CASE("Stasheff on small algebras") {
    CHECK(check_ainf(*point_algebra(), 6).passed);
    auto b = basis({{"1", 0}, {"theta", 1}}, 0);
    CHECK(check_ainf(*algebra(b, ext1_m(b)), 6).passed);
    MultilinearTable m(b, b, 1);
    CHECK(check_ainf(*algebra(b, m), 6).passed);  // all m_k = 0
  }

  TEST_CASE("table entries must be homogeneous") {
    auto b = basis({{"e", 0}}, 0);
    MultilinearTable m(b, b, 1);
    m.add({0, 0}, 0, 1);
    CHECK_THROWS_AS(m.add({0, 0, 0}, 0, 1), StructureError);
    CHECK_THROWS_AS(AInfAlgebra(b, MultilinearTable(b, b, 0), 6), StructureError);
  }

  TEST_CASE("Stasheff violation is located") {
    auto b = basis({{"1", 0}, {"theta", 1}}, 0);
    MultilinearTable m = ext1_m(b);
    m.set({1, 0}, {{1, Q(1)}});  // wrong sign on theta * 1
    Report r = check_ainf(*algebra(b, m), 4);
    CHECK_FALSE(r.passed);
    CHECK(r.violation_count > 0);
    CHECK_FALSE(r.violations.front().input.empty());
  }

  TEST_CASE("unit checks") {
    CHECK(check_unit(*point_algebra()).passed);
    auto b = basis({{"1", 0}, {"theta", 1}}, 0);
    CHECK(check_unit(*algebra(b, ext1_m(b))).passed);
    MultilinearTable m = ext1_m(b);
    m.add({1, 0, 1}, 1, 1);
    Report r = check_unit(*algebra(b, m));
    CHECK_FALSE(r.passed);
    CHECK(r.violations.front().input.find("theta,1,theta") != std::string::npos);
    auto nb = basis({{"1", 0}, {"theta", 1}});
    CHECK_THROWS_AS(check_unit(*algebra(nb, ext1_m(nb))), StructureError);
  }

  TEST_CASE("cyclic pairings") {
    auto pb = point_algebra();
    CyclicPairing pp(pb->basis(), -2, {{{0, 0}, 1}});
    CHECK(check_cyclic(*pb, pp, 6).passed);
    auto b = basis({{"1", 0}, {"theta", 1}}, 0);
    CyclicPairing p(b, -1, {{{0, 1}, 1}, {{1, 0}, -1}});
    CHECK(check_cyclic(*algebra(b, ext1_m(b)), p, 6).passed);
    CHECK_THROWS_AS(CyclicPairing(b, -1, {{{0, 1}, 1}, {{1, 0}, 1}}), StructureError);
    CHECK_THROWS_AS(CyclicPairing(b, -1, {{{0, 1}, 1}}), StructureError);
    CHECK_THROWS_AS(CyclicPairing(b, -2, {{{0, 1}, 1}, {{1, 0}, -1}}), StructureError);
  }

  TEST_CASE("cohomology") {
    auto b = basis({{"1", 0}, {"theta", 1}}, 0);
    Cohomology h = cohomology(*algebra(b, ext1_m(b)));
    CHECK(h.dim() == 2);

    auto c = basis({{"u", 0}, {"v", 1}});
    MultilinearTable m(c, c, 1);
    m.add({0}, 1, 1);
    CHECK(cohomology(*algebra(c, m)).dim() == 0);

    const AlgebraDocument ec = builtin_document("ext1-contractible");
    Cohomology hc = cohomology(*ec.algebra);
    CHECK(hc.dim() == 2);
    for (const auto& rep : hc.representatives) {
      std::vector<Combination> args{rep};
      CHECK(ec.algebra->m().apply(args).empty());
    }
    CHECK_THROWS((void)hc.project(basis_vector(2)));  // u is not a cocycle
  }

  TEST_CASE("transport along isomorphisms") {
    auto b = basis({{"1", 0}, {"theta", 1}}, 0);
    const AInfAlgebra ext1(b, ext1_m(b), 6);
    CHECK(transport_via_iso(ext1, identity_table(b), 6) == ext1);

    MultilinearTable diag(b, b, 0);
    diag.add({0}, 0, 2);
    diag.add({1}, 1, 3);
    const AInfAlgebra scaled = transport_via_iso(ext1, diag, 6);
    CHECK(scaled.m().at({0, 0}) == Combination{{0, Q(2)}});
    CHECK(scaled.m().at({0, 1}) == Combination{{1, Q(2)}});
    CHECK(scaled.m().at({1, 0}) == Combination{{1, Q(-2)}});

    MultilinearTable f = identity_table(b);
    f.add({1, 1}, 1, 1);
    const AInfAlgebra a = transport_via_iso(ext1, f, 6);
    CHECK(check_ainf(a, 6).passed);
    // With m_1 = 0 and f_1 = id the arity-2 equation reads m^A_2 = m^B_2.
    CHECK(a.m().arity(2) == ext1.m().arity(2));
    CHECK(check_morphism(AInfMorphism(std::make_shared<const AInfAlgebra>(a), std::make_shared<const AInfAlgebra>(ext1), f, 6), 6).passed);

    MultilinearTable singular(b, b, 0);
    singular.add({0}, 0, 1);
    CHECK_THROWS_AS(transport_via_iso(ext1, singular, 6), StructureError);
  }
}
