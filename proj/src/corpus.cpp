#include "ainf/corpus.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "ainf/deformation.hpp"

namespace ainf {

namespace {

using Q = Rational;

BasisPtr make_basis(std::vector<BasisEntry> e, std::optional<int> unit) {
  return std::make_shared<const GradedBasis>(std::move(e), unit);
}

/// m_2(a, b) = (-1)^{deg a} ab for an associative algebra given by its products.
MultilinearTable bar_product(const BasisPtr& b, const std::vector<std::tuple<int, int, int, Q>>& products) {
  MultilinearTable m(b, b, 1);
  for (const auto& [x, y, z, c] : products) m.add({x, y}, z, sign_of(b->degree(x)) * c);
  return m;
}

AlgebraPtr make_algebra(const BasisPtr& b, MultilinearTable m, int cap = 6) {
  return std::make_shared<const AInfAlgebra>(b, std::move(m), cap);
}

/// Trace pairing ⟨a, b⟩ = (-1)^{deg a} tr(ab) from the values tr(ab) on basis pairs.
CyclicPairing trace_pairing(const BasisPtr& b, int degree, const std::vector<std::tuple<int, int, Q>>& traces) {
  std::map<std::pair<int, int>, Rational> e;
  for (const auto& [x, y, t] : traces) e[{x, y}] = sign_of(b->degree(x)) * t;
  return CyclicPairing(b, degree, e);
}

ArtinVec artin_vec(int dim, int n, const std::vector<std::tuple<int, int, int, Q>>& terms) {
  ArtinVec v = zero_artin(dim, n);
  for (const auto& [i, e, s, c] : terms) v[i].add(e, s, c);
  return v;
}

// ---------------------------------------------------------------- basic algebras

AlgebraDocument point() {
  auto b = make_basis({{"e", 0}}, 0);
  AlgebraDocument d;
  d.name = "point";
  d.description = "one-dimensional unital algebra with the trace pairing";
  d.algebra = make_algebra(b, bar_product(b, {{0, 0, 0, 1}}));
  d.pairing = trace_pairing(b, -2, {{0, 0, 1}});
  d.mc.push_back({"zero", zero_artin(1, 4)});
  d.gauge.push_back({"unit-flow", zero_artin(1, 4), artin_vec(1, 4, {{0, 1, 0, 1}})});
  return d;
}

AlgebraDocument ext1() {
  auto b = make_basis({{"1", 0}, {"theta", 1}}, 0);
  AlgebraDocument d;
  d.name = "ext1";
  d.description = "exterior algebra on one generator of degree 1 with the Poincare pairing";
  d.algebra = make_algebra(b, bar_product(b, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}}));
  d.pairing = trace_pairing(b, -1, {{0, 1, 1}, {1, 0, 1}});
  HochschildCochain a1(b, -1), a2(b, -1);
  a1.add({1}, 0, 1);
  a2.add({1}, 0, Q(1, 2));
  a2.add({1, 1}, 0, -2);
  a2.add({1, 1, 1}, 0, 3);
  d.cochains.push_back({"alpha-linear", a1});
  d.cochains.push_back({"alpha-mixed", a2});
  d.mc.push_back({"theta", artin_vec(2, 4, {{1, 1, 0, 1}})});
  d.mc.push_back({"theta-higher", artin_vec(2, 4, {{1, 1, 0, 2}, {1, 3, 0, Q(-1, 3)}})});
  d.gauge.push_back({"unit-flow", artin_vec(2, 4, {{1, 1, 0, 1}}), artin_vec(2, 4, {{0, 1, 0, 1}})});
  return d;
}

BasisPtr contractible_basis() { return make_basis({{"1", 0}, {"theta", 1}, {"u", 0}, {"v", 1}}, 0); }

AlgebraPtr contractible_algebra() {
  auto b = contractible_basis();
  MultilinearTable m = bar_product(
      b, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {0, 2, 2, 1}, {2, 0, 2, 1}, {0, 3, 3, 1}, {3, 0, 3, 1}});
  m.add({2}, 3, 1);  // m_1 u = v
  return make_algebra(b, std::move(m));
}

InnerProductMap contractible_phi() {
  auto b = contractible_basis();
  InnerProductMap phi(b, -1, 5);
  phi.add(0, {0}, 1, 1);
  phi.add(0, {1}, 0, -1);
  return phi;
}

AlgebraDocument ext1_contractible() {
  AlgebraDocument d;
  d.name = "ext1-contractible";
  d.description = "ext1 plus an acyclic piece m_1 u = v; the pairing is degenerate on chains only";
  d.algebra = contractible_algebra();
  d.phi = contractible_phi();
  HochschildCochain a(d.algebra->basis(), -1);
  a.add({1}, 0, 1);
  a.add({3, 1}, 0, 2);
  a.add({2}, 1, 1);
  d.cochains.push_back({"alpha-contractible", a});
  d.mc.push_back({"theta-v", artin_vec(4, 4, {{1, 1, 0, 1}, {3, 1, 0, 2}})});
  d.gauge.push_back({"u-flow", artin_vec(4, 4, {{1, 1, 0, 1}}), artin_vec(4, 4, {{2, 1, 0, 1}, {0, 2, 0, 1}})});
  return d;
}

AlgebraDocument poly4() {
  auto b = make_basis({{"1", 0}, {"a", 1}, {"a2", 2}, {"a3", 3}}, 0);
  std::vector<std::tuple<int, int, int, Q>> prods;
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; i + j <= 3; ++j) prods.emplace_back(i, j, i + j, 1);
  AlgebraDocument d;
  d.name = "poly4";
  d.description = "truncated polynomial algebra k[a]/a^4 with deg a = 1 and the trace pairing";
  d.algebra = make_algebra(b, bar_product(b, prods));
  d.pairing = trace_pairing(b, 1, {{0, 3, 1}, {1, 2, 1}, {2, 1, 1}, {3, 0, 1}});
  return d;
}

/// M_2(k) ⊗ k[ε]/ε² with deg ε = 1 and trace τ(Xε) = tr X. It is not graded commutative,
/// so its cubic potential survives and mixes odd and even variables.
AlgebraDocument mat2_ext() {
  using M = std::array<Q, 4>;  // row-major 2x2
  const std::vector<M> mats = {M{1, 0, 0, 1}, M{1, 0, 0, -1}, M{0, 1, 0, 0}, M{0, 0, 1, 0}};
  const std::vector<std::string> names = {"I", "h", "e", "f"};
  std::vector<BasisEntry> entries;
  for (int s = 0; s < 2; ++s)
    for (const auto& n : names) entries.push_back({s ? n + "eps" : n, s});
  auto b = make_basis(entries, 0);
  std::vector<std::tuple<int, int, int, Q>> prods;
  std::vector<std::tuple<int, int, Q>> traces;
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      const int s = x / 4 + y / 4;
      if (s > 1) continue;
      const M &u = mats[x % 4], &v = mats[y % 4];
      const M w{u[0] * v[0] + u[1] * v[2], u[0] * v[1] + u[1] * v[3], u[2] * v[0] + u[3] * v[2],
                u[2] * v[1] + u[3] * v[3]};
      const std::array<Q, 4> coords{(w[0] + w[3]) / 2, (w[0] - w[3]) / 2, w[1], w[2]};
      for (int k = 0; k < 4; ++k)
        if (coords[k] != 0) prods.emplace_back(x, y, 4 * s + k, coords[k]);
      if (s == 1 && w[0] + w[3] != 0) traces.emplace_back(x, y, w[0] + w[3]);
    }
  AlgebraDocument d;
  d.name = "mat2-ext";
  d.description = "2x2 matrices over k[eps]/eps^2, deg eps = 1, trace on the eps part";
  d.algebra = make_algebra(b, bar_product(b, prods));
  d.pairing = trace_pairing(b, -1, traces);
  d.mc.push_back({"e-eps", artin_vec(8, d.eps_order, {{6, 1, 0, 1}})});
  // Conjugation by exp(t eps h) moves the e.eps part and fixes the trace, so Psi stays put.
  d.gauge.push_back({"h-flow", artin_vec(8, d.eps_order, {{4, 1, 0, 1}, {6, 1, 0, 1}}),
                     artin_vec(8, d.eps_order, {{1, 1, 0, 1}})});
  return d;
}

// ---------------------------------------------------------------- transported examples

/// A = transport(B, f), φ = f*ψ, morphism h = f^{-1}: B -> A.
AlgebraDocument pulled(const std::string& name, const std::string& description, const AlgebraDocument& base,
                       const MultilinearTable& f) {
  const InnerProductMap psi = *base.shi();
  AlgebraPtr a = std::make_shared<const AInfAlgebra>(transport_via_iso(*base.algebra, f, 6));
  AInfMorphism fm(a, base.algebra, f, 6);
  AInfMorphism h = invert_iso(fm);
  AlgebraDocument d;
  d.name = name;
  d.description = description;
  d.algebra = a;
  d.phi = pullback_shi(fm, psi);
  d.morphisms.push_back({"h", base.algebra, base.pairing, h.f(), h.arity_cap()});
  return d;
}

MultilinearTable identity_plus(const BasisPtr& b, const std::vector<std::pair<Tuple, std::pair<int, Q>>>& extra) {
  MultilinearTable f(b, b, 0);
  for (int i = 0; i < b->size(); ++i) f.add({i}, i, 1);
  for (const auto& [in, out] : extra) f.add(in, out.first, out.second);
  return f;
}

AlgebraDocument ext1_pulled() {
  AlgebraDocument base = ext1();
  auto b = base.algebra->basis();
  auto f = identity_plus(b, {{{1, 1}, {1, 2}}, {{1, 1, 1}, {1, Q(-1, 2)}}});
  AlgebraDocument d = pulled("ext1-pulled",
                             "ext1 transported along f_1 = id, f_2(theta,theta) = 2 theta, "
                             "f_3(theta,theta,theta) = -theta/2; phi is the pull-back of the pairing",
                             base, f);
  HochschildCochain a(d.algebra->basis(), -1);
  a.add({1, 1}, 0, 1);
  d.cochains.push_back({"alpha-quadratic", a});
  d.mc = base.mc;
  d.gauge = base.gauge;
  return d;
}

AlgebraDocument poly4_pulled() {
  AlgebraDocument base = poly4();
  auto b = base.algebra->basis();
  auto f = identity_plus(b, {{{1, 1}, {1, 1}}, {{1, 2}, {2, -2}}, {{2, 1}, {2, Q(1, 3)}}, {{1, 1, 1}, {1, 3}}});
  AlgebraDocument d = pulled("poly4-pulled",
                             "poly4 transported along a unital f with f_2, f_3 supported on powers of a; "
                             "phi is the pull-back of the trace pairing",
                             base, f);
  HochschildCochain a(d.algebra->basis(), -1);
  a.add({1}, 0, 2);
  a.add({1, 1}, 0, -1);
  d.cochains.push_back({"alpha-poly", a});
  d.mc.push_back({"a-eps2", artin_vec(4, 4, {{1, 2, 0, 1}, {1, 3, 0, 5}})});
  return d;
}

AlgebraDocument mat2_pulled() {
  AlgebraDocument base = mat2_ext();
  auto f = identity_plus(base.algebra->basis(),
                         {{{1, 6}, {3, 1}}, {{6, 7}, {5, 1}}, {{5, 5, 5}, {5, Q(1, 2)}}, {{2, 5}, {2, -1}}});
  return pulled("mat2-pulled", "mat2-ext transported along a unital f with f_2 and f_3 terms; phi is the pull-back",
                base, f);
}

AlgebraDocument contractible_pulled() {
  AlgebraDocument base = ext1_contractible();
  auto b = base.algebra->basis();
  auto f = identity_plus(b, {{{2}, {0, Q(1, 2)}},
                             {{3}, {1, -1}},
                             {{2, 1}, {2, 1}},
                             {{1, 2}, {0, -1}},
                             {{1, 1}, {3, 2}},
                             {{3, 1}, {1, 1}},
                             {{2, 3, 1}, {2, Q(1, 3)}}});
  AlgebraDocument d = pulled("contractible-pulled",
                             "ext1-contractible transported along a unital f mixing the acyclic piece "
                             "with ext1; phi has components with p+q > 0",
                             base, f);
  HochschildCochain a(d.algebra->basis(), -1);
  a.add({1}, 0, 1);
  a.add({3}, 0, -1);
  a.add({1, 3}, 0, Q(1, 2));
  a.add({2}, 3, 1);
  d.cochains.push_back({"alpha-mixed", a});
  d.mc.push_back({"theta", artin_vec(4, 4, {{1, 1, 0, 1}})});
  d.gauge.push_back({"u-flow", artin_vec(4, 4, {{1, 1, 0, 1}}), artin_vec(4, 4, {{2, 1, 0, 1}, {2, 2, 1, -1}})});
  return d;
}

// ---------------------------------------------------------------- negative controls

AlgebraDocument neg_ainf() {
  auto b = make_basis({{"u", 0}, {"v", 1}}, std::nullopt);
  MultilinearTable m(b, b, 1);
  m.add({0}, 1, 1);
  m.add({0, 0}, 0, 1);
  m.add({0, 1}, 1, -1);  // correct sign is +1
  AlgebraDocument d;
  d.name = "neg-ainf-sign";
  d.description = "negative control: one sign of m_2(u,v) flipped, breaking the Leibniz rule";
  d.algebra = make_algebra(b, std::move(m));
  d.expect_fail = {"ainf"};
  return d;
}

AlgebraDocument neg_unit() {
  auto b = make_basis({{"1", 0}, {"theta", 1}}, 0);
  AlgebraDocument d;
  d.name = "neg-unit";
  d.description = "negative control: associative with 1 theta = theta but theta 1 = 0, so 1 is only a left unit";
  d.algebra = make_algebra(b, bar_product(b, {{0, 0, 0, 1}, {0, 1, 1, 1}}));
  d.expect_fail = {"unit"};
  return d;
}

AlgebraDocument neg_cyclic() {
  AlgebraDocument d = poly4();
  d.name = "neg-cyclic";
  d.description = "negative control: poly4 with <a,a2> rescaled so the pairing is skew but not cyclic";
  d.pairing = CyclicPairing(d.algebra->basis(), 1, {{{0, 3}, 1}, {{3, 0}, -1}, {{1, 2}, -2}, {{2, 1}, 2}});
  d.expect_fail = {"cyclic"};
  return d;
}

AlgebraDocument neg_bimodule() {
  AlgebraDocument d = poly4();
  d.name = "neg-bimodule";
  d.description = "negative control: phi_00 of poly4 with one corrupted pair of entries";
  InnerProductMap phi(d.algebra->basis(), 1, 5);
  phi.add(0, {0}, 3, 1);
  phi.add(0, {3}, 0, -1);
  phi.add(0, {1}, 2, -2);
  phi.add(0, {2}, 1, 2);
  d.phi = phi;
  d.pairing.reset();
  d.expect_fail = {"bimodule"};
  return d;
}

AlgebraDocument neg_skew() {
  auto b = make_basis({{"a", 0}, {"b", 1}}, std::nullopt);
  AlgebraDocument d;
  d.name = "neg-skew";
  d.description = "negative control: symmetric instead of skew phi_00 on a space with m = 0";
  d.algebra = make_algebra(b, MultilinearTable(b, b, 1));
  InnerProductMap phi(b, -1, 5);
  phi.add(0, {0}, 1, 1);
  phi.add(0, {1}, 0, 1);
  d.phi = phi;
  d.expect_fail = {"skew"};
  return d;
}

AlgebraDocument neg_closed() {
  auto b = make_basis({{"a", 0}, {"b", 1}}, std::nullopt);
  AlgebraDocument d;
  d.name = "neg-closed";
  d.description = "negative control: skew phi with an arbitrary phi_10 component that is not closed";
  d.algebra = make_algebra(b, MultilinearTable(b, b, 1));
  InnerProductMap phi(b, -1, 5);
  phi.add(0, {0}, 1, 1);
  phi.add(0, {1}, 0, -1);
  phi.add(1, {1, 1}, 0, 1);
  phi.add(0, {0, 1}, 1, -1);
  d.phi = phi;
  d.expect_fail = {"closed"};
  return d;
}

AlgebraDocument neg_gauge() {
  AlgebraDocument d = contractible_pulled();
  d.name = "neg-gauge";
  d.description = "negative control: contractible-pulled with a de-skewed component <v, theta | 1>";
  d.morphisms.clear();
  d.cochains.clear();
  InnerProductMap phi = *d.phi;
  phi.add(0, {3, 1}, 0, 1);
  d.phi = phi;
  d.expect_fail = {"skew", "bimodule", "gauge-invariance"};
  return d;
}

using Factory = AlgebraDocument (*)();

const std::vector<std::pair<std::string, Factory>>& factories() {
  static const std::vector<std::pair<std::string, Factory>> table = {
      {"point", point},
      {"ext1", ext1},
      {"ext1-contractible", ext1_contractible},
      {"ext1-pulled", ext1_pulled},
      {"poly4", poly4},
      {"poly4-pulled", poly4_pulled},
      {"mat2-ext", mat2_ext},
      {"mat2-pulled", mat2_pulled},
      {"contractible-pulled", contractible_pulled},
      {"neg-ainf-sign", neg_ainf},
      {"neg-unit", neg_unit},
      {"neg-cyclic", neg_cyclic},
      {"neg-bimodule", neg_bimodule},
      {"neg-skew", neg_skew},
      {"neg-closed", neg_closed},
      {"neg-gauge", neg_gauge}};
  return table;
}

}  // namespace

std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (const auto& [n, f] : factories()) out.push_back(n);
  return out;
}

std::vector<AlgebraDocument> builtin_corpus() {
  std::vector<AlgebraDocument> out;
  for (const auto& [n, f] : factories()) out.push_back(f());
  return out;
}

AlgebraDocument builtin_document(const std::string& name) {
  for (const auto& [n, f] : factories())
    if (n == name) {
      AlgebraDocument d = f();
      if (d.name != n) throw std::logic_error("builtin table out of sync for '" + n + "'");
      return d;
    }
  throw std::out_of_range("no builtin document '" + name + "'");
}

}  // namespace ainf
