#include "helpers.hpp"

using namespace ainf;
using namespace ainf::test;

namespace {

struct Transported {
  AlgebraPtr a;
  AlgebraPtr b;
  AInfMorphism f;  // a -> b
};

Transported transport(const std::string& base, const std::vector<std::pair<Tuple, std::pair<int, Q>>>& extra) {
  const AlgebraDocument d = builtin_document(base);
  MultilinearTable f = identity_table(d.algebra->basis());
  for (const auto& [in, out] : extra) f.add(in, out.first, out.second);
  auto a = std::make_shared<const AInfAlgebra>(transport_via_iso(*d.algebra, f, 6));
  return {a, d.algebra, AInfMorphism(a, d.algebra, f, 6)};
}

}  // namespace

TEST_SUITE("morphisms") {
  TEST_CASE("identity is a strict quasi-isomorphism") {
    const AlgebraDocument d = builtin_document("poly4");
    const AInfMorphism id = AInfMorphism::identity(d.algebra);
    CHECK(check_morphism(id, 6).passed);
    CHECK(is_quasi_isomorphism(id));
    CHECK(pullback_shi(id, *d.shi()) == *d.shi());
  }

  TEST_CASE("transported algebras carry the morphism") {
    auto t = transport("ext1", {{{1, 1}, {1, 2}}, {{1, 1, 1}, {1, Q(-1, 2)}}});
    CHECK(check_ainf(*t.a, 6).passed);
    CHECK(check_morphism(t.f, 6).passed);
    CHECK(is_quasi_isomorphism(t.f));
  }

  TEST_CASE("inverse and composition") {
    auto t = transport("poly4", {{{1, 1}, {1, 1}}, {{1, 2}, {2, -2}}, {{1, 1, 1}, {1, 3}}});
    const AInfMorphism h = invert_iso(t.f);
    CHECK(check_morphism(h, 6).passed);
    CHECK(compose(h, t.f).f() == identity_table(t.a->basis()).truncated(6));
    CHECK(compose(t.f, h).f() == identity_table(t.b->basis()).truncated(6));
    CHECK(invert_iso(h).f() == t.f.f());
    const AInfMorphism id = AInfMorphism::identity(t.b);
    CHECK(compose(id, t.f).f() == t.f.f());
  }

  TEST_CASE("composition is associative") {
    auto t1 = transport("ext1", {{{1, 1}, {1, 1}}});
    const AlgebraDocument d = builtin_document("ext1");
    MultilinearTable g = identity_table(t1.a->basis());
    g.add({1, 1, 1}, 1, 5);
    auto a2 = std::make_shared<const AInfAlgebra>(transport_via_iso(*t1.a, g, 6));
    const AInfMorphism g2(a2, t1.a, g, 6);
    const AInfMorphism h = invert_iso(t1.f);
    CHECK(compose(h, compose(t1.f, g2)).f() == compose(compose(h, t1.f), g2).f());
  }

  TEST_CASE("pull-back is functorial") {
    auto t1 = transport("ext1", {{{1, 1}, {1, 2}}});
    MultilinearTable g = identity_table(t1.a->basis());
    g.add({1, 1, 1}, 1, Q(1, 3));
    auto a2 = std::make_shared<const AInfAlgebra>(transport_via_iso(*t1.a, g, 6));
    const AInfMorphism g2(a2, t1.a, g, 6);
    const InnerProductMap psi = shi_from_cyclic(*builtin_document("ext1").pairing);
    const InnerProductMap once = pullback_shi(compose(t1.f, g2), psi);
    const InnerProductMap twice = pullback_shi(g2, pullback_shi(t1.f, psi));
    CHECK(once == twice);
    CHECK(is_shi(*a2, once, 6).passed);
  }

  TEST_CASE("singular linear parts are rejected") {
    const AlgebraDocument d = builtin_document("ext1");
    MultilinearTable f(d.algebra->basis(), d.algebra->basis(), 0);
    f.add({0}, 0, 1);
    CHECK_THROWS_AS(inverse_columns(f), StructureError);
    CHECK_THROWS_AS(invert_iso(AInfMorphism(d.algebra, d.algebra, f, 6)), StructureError);
  }

  TEST_CASE("morphism residual is located") {
    const AlgebraDocument d = builtin_document("ext1");
    MultilinearTable f(d.algebra->basis(), d.algebra->basis(), 0);
    f.add({0}, 0, 2);  // f(1 * 1) = 2 but f(1) * f(1) = 4
    f.add({1}, 1, 1);
    Report r = check_morphism(AInfMorphism(d.algebra, d.algebra, f, 6), 4);
    CHECK_FALSE(r.passed);
    REQUIRE_FALSE(r.violations.empty());
    CHECK(r.violations.front().input.find("1,1") != std::string::npos);
  }
}
