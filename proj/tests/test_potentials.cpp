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

TEST_SUITE("potentials") {
  TEST_CASE("point algebra under both parities") {
    const auto& d = doc("point");
    const auto un = potential_cyclic(*d.algebra, *d.pairing, 4, ParityConvention::unshifted);
    CHECK(un.series.terms().size() == 1);
    CHECK(un.series.coefficient({0, 0, 0}) == Q(1, 3));
    // x0 is odd once shifted, so x0^3 = 0.
    CHECK(potential_cyclic(*d.algebra, *d.pairing, 4, ParityConvention::shifted).series.is_zero());
    const InnerProductMap phi = shi_from_cyclic(*d.pairing);
    CHECK(potential_psi(*d.algebra, phi, 4, ParityConvention::unshifted).series.coefficient({0}) == 1);
    CHECK(potential_psi(*d.algebra, phi, 4, ParityConvention::shifted).series.coefficient({0}) == -1);
  }

  TEST_CASE("matrix example has a nonzero cubic term") {
    const auto& d = doc("mat2-ext");
    const auto phi = potential_cyclic(*d.algebra, *d.pairing, 4, kDefaultParity).series;
    CHECK(phi.terms().size() == 3);
    CHECK(phi.coefficient({1, 2, 7}) == -2);
    CHECK(phi.coefficient({1, 3, 6}) == 2);
    CHECK(phi.coefficient({2, 3, 5}) == -2);
  }

  TEST_CASE("zero inner product gives zero potentials") {
    const auto& d = doc("poly4");
    const InnerProductMap zero(d.algebra->basis(), d.shi()->degree(), 5);
    CHECK(potential_shi(*d.algebra, zero, 6, kDefaultParity).series.is_zero());
    CHECK(potential_psi(*d.algebra, zero, 6, kDefaultParity).series.is_zero());
  }

  TEST_CASE("shi potential of a cyclic pairing is the cyclic potential") {
    for (const char* name : {"point", "ext1", "poly4", "mat2-ext"})
      for (auto parity : {ParityConvention::shifted, ParityConvention::unshifted}) {
        const auto& d = doc(name);
        CHECK(potential_shi(*d.algebra, shi_from_cyclic(*d.pairing), 6, parity).series ==
              potential_cyclic(*d.algebra, *d.pairing, 6, parity).series);
      }
  }

  TEST_CASE("fraction-free derivative") {
    const auto& d = doc("point");
    const InnerProductMap phi = shi_from_cyclic(*d.pairing);
    CHECK(check_fundlem(*d.algebra, phi, 0, 2, ParityConvention::unshifted, DerivativeSide::left).passed);
    for (const char* name : {"ext1-pulled", "poly4-pulled", "mat2-ext"})
      CHECK(check_fundlem_all(*doc(name).algebra, *doc(name).shi(), 4, kDefaultParity, DerivativeSide::right).passed);
    // With odd and even variables mixed, only the right derivative matches the slot order.
    const auto& m = doc("mat2-ext");
    CHECK_FALSE(check_fundlem_all(*m.algebra, *m.shi(), 3, kDefaultParity, DerivativeSide::left).passed);
  }

  TEST_CASE("psi without fractions") {
    for (const char* name : {"ext1-pulled", "poly4-pulled", "contractible-pulled"}) {
      const auto& d = doc(name);
      CHECK(potential_psi(*d.algebra, *d.phi, 6, kDefaultParity).series ==
            psi_nofrac(*d.algebra, *d.phi, 6, kDefaultParity).series);
    }
  }

  TEST_CASE("pull-back along a diagonal rescaling") {
    const auto& d = doc("point");
    auto b = d.algebra->basis();
    MultilinearTable f(b, b, 0);
    f.add({0}, 0, 3);
    auto scaled = std::make_shared<const AInfAlgebra>(transport_via_iso(*d.algebra, f, 6));
    const AInfMorphism h(scaled, d.algebra, f, 6);
    const auto phi = potential_cyclic(*d.algebra, *d.pairing, 6, ParityConvention::unshifted);
    const auto pulled = pullback_potential(phi, h, 6, ParityConvention::unshifted);
    CHECK(pulled.series.coefficient({0, 0, 0}) == 9);  // (1/3)(3y)^3
    CHECK(pulled.provenance == Provenance::pullback);
  }

  TEST_CASE("mismatched morphism target is rejected") {
    const auto& d = doc("point");
    const auto phi = potential_cyclic(*d.algebra, *d.pairing, 4, kDefaultParity);
    CHECK_THROWS_AS(pullback_potential(phi, AInfMorphism::identity(doc("ext1").algebra), 4, kDefaultParity),
                    StructureError);
  }
}
