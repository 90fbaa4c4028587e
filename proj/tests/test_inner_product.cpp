#include <random>

#include "helpers.hpp"

using namespace ainf;
using namespace ainf::test;

namespace {

const AlgebraDocument& doc(const std::string& name) {
  static std::map<std::string, AlgebraDocument> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, builtin_document(name)).first;
  return it->second;
}

}  // namespace

TEST_SUITE("bimodule-inner") {
  TEST_CASE("strict pairing on the point algebra") {
    const auto& d = doc("point");
    const InnerProductMap phi = shi_from_cyclic(*d.pairing);
    CHECK(phi.value(0, {0}, 0) == 1);
    CHECK(phi.entries().size() == 1);
    // Word (e, e | e) with the module slot first. Two terms survive since m_1 = 0:
    //   <m_2(e_, e) | e> = +1 and the wrapped block <e_ | m_2(e, e)> with sign (-1)^{|e|'} = -1.
    CHECK(bimodule_residual(*d.algebra, phi, 0, {0, 0, 0}) == 0);
    CHECK(bimodule_residual(*d.algebra, phi, 1, {0, 0, 0}) == 0);
    CHECK(check_bimodule_map(*d.algebra, phi, 6).passed);
  }

  TEST_CASE("bimodule sweeps") {
    const auto& e = doc("ext1");
    CHECK(check_bimodule_map(*e.algebra, InnerProductMap(e.algebra->basis(), -1, 5), 6).passed);
    const auto& c = doc("ext1-contractible");
    CHECK(check_bimodule_map(*c.algebra, *c.phi, 6).passed);
    InnerProductMap bad = shi_from_cyclic(*doc("poly4").pairing);
    bad.add(0, {1}, 2, 1);  // <a_ | a2> corrupted
    Report r = check_bimodule_map(*doc("poly4").algebra, bad, 5);
    CHECK_FALSE(r.passed);
    CHECK_FALSE(r.violations.empty());
    CHECK(r.violations.front().input.find('|') != std::string::npos);
  }

  TEST_CASE("skew symmetry") {
    const auto& e = doc("ext1");
    CHECK(check_skew(shi_from_cyclic(*e.pairing)).passed);
    CHECK(check_skew(InnerProductMap(e.algebra->basis(), -1, 5)).passed);
    InnerProductMap sym(e.algebra->basis(), -1, 5);
    sym.add(0, {0}, 1, 1);
    sym.add(0, {1}, 0, 1);
    CHECK_FALSE(check_skew(sym).passed);
    // A one-sided entry is caught through its mirror.
    InnerProductMap half(e.algebra->basis(), -1, 5);
    half.add(0, {0}, 1, 1);
    CHECK_FALSE(check_skew(half).passed);
  }

  TEST_CASE("closedness") {
    CHECK(check_closed(shi_from_cyclic(*doc("ext1").pairing), 6).passed);
    CHECK(check_closed(*doc("ext1-pulled").phi, 6).passed);
    CHECK(check_closed(*doc("poly4-pulled").phi, 6).passed);
    CHECK_FALSE(check_closed(*doc("neg-closed").phi, 6).passed);
  }

  TEST_CASE("bracket transitivity [i,j] + [j,k] = [i,k]") {
    for (const char* name : {"ext1-pulled", "poly4-pulled", "contractible-pulled"}) {
      const InnerProductMap& phi = *doc(name).phi;
      const auto& b = *phi.basis();
      int checked = 0;
      for (int n = 3; n <= 5; ++n)
        for_each_tuple(b.size(), n, [&](const Tuple& t) {
          if (b.shifted_sum(t) != phi.degree()) return;
          for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
              for (int k = j + 1; k < n; ++k) {
                CHECK(bracket(phi, t, i, j) + bracket(phi, t, j, k) == bracket(phi, t, i, k));
                ++checked;
              }
        });
      CHECK(checked > 0);
    }
  }

  TEST_CASE("homological non-degeneracy") {
    const auto& e = doc("ext1");
    CHECK(check_homological_nondegeneracy(*e.algebra, shi_from_cyclic(*e.pairing)).passed);
    CHECK_FALSE(check_homological_nondegeneracy(*e.algebra, InnerProductMap(e.algebra->basis(), -1, 5)).passed);
    auto b = basis({{"u", 0}, {"v", 1}});
    MultilinearTable m(b, b, 1);
    m.add({0}, 1, 1);
    CHECK(check_homological_nondegeneracy(*algebra(b, m), InnerProductMap(b, -1, 5)).passed);
    const auto& c = doc("ext1-contractible");
    CHECK(check_homological_nondegeneracy(*c.algebra, *c.phi).passed);
  }

  TEST_CASE("shi from cocycles") {
    const auto& e = doc("ext1");
    HochschildCochain half(e.algebra->basis(), -1);
    for (const auto& [key, v] : e.pairing->entries()) half.add({key.first}, key.second, v / 2);
    CHECK(shi_from_cocycle(half) == shi_from_cyclic(*e.pairing));
    CHECK(shi_from_cocycle(HochschildCochain(e.algebra->basis(), -1)).entries().empty());
    // Reduced random cochains always give skew maps.
    std::mt19937_64 rng(3);
    const auto& p = doc("poly4");
    const auto& pb = *p.algebra->basis();
    for (int trial = 0; trial < 10; ++trial) {
      HochschildCochain a(p.algebra->basis(), 1);
      for (int n = 1; n <= 3; ++n)
        for_each_tuple(pb.size(), n, [&](const Tuple& t) {
          if (std::find(t.begin(), t.end(), 0) != t.end()) return;
          for (int w = 0; w < pb.size(); ++w)
            if (pb.shifted_sum(t) + pb.shifted(w) == 1 && rng() % 3 == 0) a.add(t, w, random_rational(rng, true));
        });
      CHECK(check_reduced(a).passed);
      CHECK(check_skew(shi_from_cocycle(a)).passed);
    }
    HochschildCochain unreduced(e.algebra->basis(), -1);
    unreduced.add({0}, 1, 1);
    CHECK_FALSE(check_reduced(unreduced).passed);
  }

  TEST_CASE("unital bimodule maps") {
    CHECK(check_unital_bimodule(shi_from_cyclic(*doc("ext1").pairing)).passed);
    CHECK(check_unital_bimodule(*doc("ext1-pulled").phi).passed);
    InnerProductMap phi = *doc("ext1-pulled").phi;
    phi.add(1, {0, 1}, 1, 1);  // <1, theta_ | theta>
    CHECK_FALSE(check_unital_bimodule(phi).passed);
  }

  TEST_CASE("pull-back has higher components") {
    CHECK(doc("ext1-pulled").phi->has_higher_components());
    CHECK_FALSE(shi_from_cyclic(*doc("ext1").pairing).has_higher_components());
  }

  TEST_CASE("cyclic sum vanishes for closed skew maps") {
    for (const char* name : {"ext1-pulled", "poly4-pulled", "mat2-ext"}) CHECK(check_cyclic_sum(*doc(name).shi(), 5).passed);
  }

  TEST_CASE("degree homogeneity of components") {
    InnerProductMap phi(doc("ext1").algebra->basis(), -1, 5);
    CHECK_THROWS_AS(phi.add(0, {1}, 1, 1), StructureError);
  }
}
