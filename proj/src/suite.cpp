#include "ainf/suite.hpp"

#include <random>

#include "ainf/deformation.hpp"

namespace ainf {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::mt19937_64 seeded(const SuiteOptions& opt, const std::string& name, const std::string& purpose) {
  return std::mt19937_64(opt.seed ^ fnv1a(name + "/" + purpose));
}

Report group(const std::string& name) {
  Report r;
  r.check = name;
  return r;
}

/// Adds the children of `from` directly to `into`.
void splice(Report& into, Report from) {
  for (auto& note : from.notes) into.note(std::move(note));
  for (auto& c : from.children) into.merge(std::move(c));
}

std::optional<ArtinVec> draw_mc(const AInfAlgebra& a, int eps_order, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 32; ++attempt) {
    if (auto b = random_mc_element(a, eps_order, rng)) {
      bool zero = true;
      for (const auto& x : *b) zero = zero && x.is_zero();
      if (!zero || attempt >= 8) return b;
    }
  }
  return std::nullopt;
}

}  // namespace

std::set<std::string> failing_checks(const Report& r) {
  std::set<std::string> out;
  for (const auto& c : r.children)
    if (!c.passed) out.insert(c.check);
  return out;
}

std::set<std::string> control_failures(const AlgebraDocument& doc, const SuiteOptions& opt) {
  std::set<std::string> out = failing_checks(validate(doc, opt));
  for (const Report& r : {gauge_check(doc, opt), holonomy_check(doc, opt)})
    if (!r.passed) out.insert(r.check);
  return out;
}

Report validate(const AlgebraDocument& doc, const SuiteOptions& opt) {
  Report rep = group("validate");
  ReportTimer timer(rep);
  const AInfAlgebra& a = *doc.algebra;
  rep.merge(check_ainf(a, opt.max_word));
  const bool unital = a.basis()->unit().has_value();
  if (unital) rep.merge(check_unit(a));
  if (doc.pairing) rep.merge(check_cyclic(a, *doc.pairing, opt.max_word));
  if (doc.phi) {
    splice(rep, is_shi(a, *doc.phi, opt.max_word));
    if (unital) rep.merge(check_unital_bimodule(*doc.phi));
  }
  return rep;
}

Report gauge_check(const AlgebraDocument& doc, const SuiteOptions& opt) {
  Report rep = group("gauge-invariance");
  ReportTimer timer(rep);
  const AInfAlgebra& a = *doc.algebra;
  auto phi = doc.shi();
  if (!a.basis()->unit() || !phi) {
    rep.note("not applicable: needs a unit and an inner product");
    return rep;
  }
  auto run = [&](const std::string& id, const ArtinVec& b0, const ArtinVec& c) {
    Report one = group("gauge " + id);
    GaugePath path = gauge_flow(a, b0, c);
    one.merge(check_gauge_path(a, path));
    one.merge(check_gauge_invariance(a, *phi, path));
    rep.merge(std::move(one));
  };
  for (const auto& g : doc.gauge) run(g.id, g.b0, g.c);
  auto rng = seeded(opt, doc.name, "gauge");
  int made = 0;
  for (int k = 0; k < opt.random_gauge; ++k) {
    auto b0 = draw_mc(a, doc.eps_order, rng);
    if (!b0) continue;
    run("random-" + std::to_string(k), *b0, random_gauge_parameter(a, doc.eps_order, rng, k % 2 == 1));
    ++made;
  }
  rep.caps["random_pairs"] = made;
  rep.caps["eps_order"] = doc.eps_order;
  return rep;
}

Report holonomy_check(const AlgebraDocument& doc, const SuiteOptions& opt) {
  Report rep = group("holonomy");
  ReportTimer timer(rep);
  const AInfAlgebra& a = *doc.algebra;
  if (doc.cochains.empty() || !a.basis()->unit()) {
    rep.note("not applicable: needs a unit and cochains");
    return rep;
  }
  auto rng = seeded(opt, doc.name, "holonomy");
  std::vector<std::pair<std::string, ArtinVec>> elements;
  for (const auto& m : doc.mc) elements.emplace_back(m.id, m.b);
  for (int k = 0; k < opt.random_mc; ++k)
    if (auto b = draw_mc(a, doc.eps_order, rng)) elements.emplace_back("random-" + std::to_string(k), *b);
  for (const auto& c : doc.cochains) {
    Report one = group("cochain " + c.id);
    one.merge(check_reduced(c.alpha));
    const InnerProductMap tilde = shi_from_cocycle(c.alpha);
    one.merge(check_skew(tilde));
    Report agree = group("holonomy-agreement");
    agree.caps["mc_elements"] = static_cast<int>(elements.size());
    for (const auto& [id, b] : elements) {
      if (!mc_check(a, b).passed) {
        agree.fail({id, "not Maurer-Cartan", "Maurer-Cartan"});
        continue;
      }
      const ArtinScalar rho = holonomy(c.alpha, b);
      const ArtinScalar psi = eval_psi(a, tilde, b);
      if (rho != psi) agree.fail({id, rho.to_string(), psi.to_string()});
    }
    one.merge(std::move(agree));
    rep.merge(std::move(one));
  }
  return rep;
}

Report pullback_check(const AlgebraDocument& doc, const std::string& morphism_id, const SuiteOptions& opt) {
  Report rep = group("pullback " + morphism_id);
  ReportTimer timer(rep);
  const AInfMorphism h = doc.morphism(morphism_id);
  rep.merge(check_morphism(h, opt.max_word));
  rep.note(is_quasi_isomorphism(h) ? "quasi-isomorphism" : "not a quasi-isomorphism");
  auto phi = doc.shi();
  const MorphismDoc* md = nullptr;
  for (const auto& m : doc.morphisms)
    if (m.id == morphism_id) md = &m;
  if (phi && md->source_pairing) {
    const auto lhs = potential_cyclic(*h.source(), *md->source_pairing, opt.order, opt.parity);
    const auto rhs =
        pullback_potential(potential_shi(*doc.algebra, *phi, opt.order, opt.parity), h, opt.order, opt.parity);
    Report t = compare_series("potential-pullback", lhs.series, rhs.series);
    t.caps["order"] = opt.order;
    t.note("source potential has " + std::to_string(lhs.series.terms().size()) + " terms");
    rep.merge(std::move(t));
  }
  return rep;
}

Report potential_checks(const AlgebraDocument& doc, const SuiteOptions& opt) {
  Report rep = group("potentials");
  ReportTimer timer(rep);
  const AInfAlgebra& a = *doc.algebra;
  auto phi = doc.shi();
  if (!phi) {
    rep.note("not applicable: no inner product");
    return rep;
  }
  if (doc.pairing) {
    Report r = compare_series("shi-vs-cyclic", potential_shi(a, shi_from_cyclic(*doc.pairing), opt.order, opt.parity).series,
                              potential_cyclic(a, *doc.pairing, opt.order, opt.parity).series);
    r.caps["order"] = opt.order;
    rep.merge(std::move(r));
  }
  rep.merge(check_fundlem_all(a, *phi, opt.fundlem_order, opt.parity, opt.side));
  rep.merge(check_cyclic_sum(*phi, std::min(opt.max_word, 5)));
  if (a.basis()->unit()) {
    const auto psi = potential_psi(a, *phi, opt.order, opt.parity);
    Report r = compare_series("psi-nofrac", psi.series, psi_nofrac(a, *phi, opt.order, opt.parity).series);
    r.caps["order"] = opt.order;
    rep.merge(std::move(r));
    Report sub = group("psi-substitution");
    for (const auto& m : doc.mc) {
      const ArtinScalar direct = eval_psi(a, *phi, m.b);
      const ArtinScalar viaseries = eval_series(psi.series, m.b);
      if (direct != viaseries) sub.fail({m.id, direct.to_string(), viaseries.to_string()});
    }
    rep.merge(std::move(sub));
  }
  return rep;
}

Report report_all(const AlgebraDocument& doc, const SuiteOptions& opt) {
  Report rep = group("report " + doc.name);
  ReportTimer timer(rep);
  rep.caps["word"] = opt.max_word;
  rep.caps["order"] = opt.order;
  Report v = validate(doc, opt);
  const bool valid = v.passed;
  splice(rep, std::move(v));
  if (!valid) {
    rep.note("structure checks failed; downstream identities skipped");
    return rep;
  }
  if (doc.pairing && !doc.phi) {
    Report s = is_shi(*doc.algebra, shi_from_cyclic(*doc.pairing), opt.max_word);
    s.check = "shi-from-pairing";
    if (doc.algebra->basis()->unit()) s.merge(check_unital_bimodule(shi_from_cyclic(*doc.pairing)));
    rep.merge(std::move(s));
  }
  rep.merge(potential_checks(doc, opt));
  for (const auto& m : doc.morphisms) rep.merge(pullback_check(doc, m.id, opt));
  for (const auto& m : doc.mc) {
    Report r = mc_check(*doc.algebra, m.b);
    r.check = "maurer-cartan " + m.id;
    rep.merge(std::move(r));
  }
  rep.merge(gauge_check(doc, opt));
  rep.merge(holonomy_check(doc, opt));
  return rep;
}

}  // namespace ainf
