#include "ainf/potentials.hpp"

#include <map>

namespace ainf {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::cyclic: return "cyclic";
    case Provenance::shi: return "shi";
    case Provenance::psi: return "psi";
    case Provenance::psi_nofrac: return "psi-nofrac";
    case Provenance::pullback: return "pullback";
  }
  return "?";
}

std::string to_string(DerivativeSide s) { return s == DerivativeSide::left ? "left" : "right"; }

SeriesContext::SeriesContext(BasisPtr basis, ParityConvention parity, int cap, const std::string& prefix)
    : basis_(std::move(basis)), parity_(parity), cap_(cap), vars_(VariableSet::from_basis(*basis_, parity, prefix)) {}

SeriesVec SeriesContext::generic() const {
  SeriesVec x;
  for (int i = 0; i < basis_->size(); ++i) x.push_back(FormalSeries::variable(vars_, cap_, i));
  return x;
}

SeriesVec SeriesContext::constant(const Combination& c) const {
  SeriesVec x = zero();
  for (const auto& [i, v] : c) x[i] = FormalSeries::constant(vars_, cap_, v);
  return x;
}

SeriesVec SeriesContext::zero() const { return SeriesVec(basis_->size(), zero_series()); }

namespace {

/// Twisted product Π λ_u with λ_u moved right past the basis letters that follow it.
template <class Slot>
FormalSeries twisted_product(const GradedBasis& basis, ParityConvention parity, const FormalSeries& one,
                             int n, const Tuple& t, Slot&& slot) {
  for (int u = 0; u < n; ++u)
    if (slot(u)[t[u]].is_zero()) return FormalSeries(one.vars(), one.order_cap());
  FormalSeries prod = one;
  bool suffix_odd = false;
  std::vector<bool> flip(n);
  for (int u = n - 1; u >= 0; --u) {
    flip[u] = suffix_odd;
    if (basis.variable_odd(t[u], parity)) suffix_odd = !suffix_odd;
  }
  for (int u = 0; u < n; ++u) {
    prod = prod * slot(u)[t[u]].twisted(flip[u]);
    if (prod.is_zero()) break;
  }
  return prod;
}

}  // namespace

FormalSeries SeriesContext::product(std::span<const SeriesVec> slots, const Tuple& t) const {
  const FormalSeries one = FormalSeries::constant(vars_, cap_, 1);
  return twisted_product(*basis_, parity_, one, static_cast<int>(t.size()), t,
                         [&](int u) -> const SeriesVec& { return slots[u]; });
}

SeriesVec SeriesContext::apply(const MultilinearTable& m, std::span<const SeriesVec> args) const {
  SeriesVec out = zero();
  for (const auto& [t, value] : m.arity(static_cast<int>(args.size()))) {
    FormalSeries prod = product(args, t);
    if (prod.is_zero()) continue;
    for (const auto& [j, c] : value) out[j] += prod.scaled(c);
  }
  return out;
}

SeriesVec SeriesContext::power(const MultilinearTable& m, int k, const SeriesVec& x) const {
  std::vector<SeriesVec> args(k, x);
  return apply(m, args);
}

FormalSeries SeriesContext::pair(const CyclicPairing& p, const SeriesVec& a, const SeriesVec& b) const {
  FormalSeries out = zero_series();
  const FormalSeries one = FormalSeries::constant(vars_, cap_, 1);
  for (const auto& [key, v] : p.entries()) {
    Tuple t{key.first, key.second};
    out += twisted_product(*basis_, parity_, one, 2, t, [&](int u) -> const SeriesVec& { return u ? b : a; })
               .scaled(v);
  }
  return out;
}

FormalSeries SeriesContext::pair(const InnerProductMap& phi, int p, std::span<const SeriesVec> inputs,
                                 const SeriesVec& w) const {
  FormalSeries out = zero_series();
  const FormalSeries one = FormalSeries::constant(vars_, cap_, 1);
  const int n = static_cast<int>(inputs.size());
  const auto& entries = phi.entries();
  auto it = entries.lower_bound({p, Tuple{}});
  auto end = entries.lower_bound({p + 1, Tuple{}});
  for (; it != end; ++it) {
    const Tuple& in = it->first.second;
    if (static_cast<int>(in.size()) != n) continue;
    Tuple t = in;
    t.push_back(0);
    for (const auto& [wi, c] : it->second) {
      t[n] = wi;
      FormalSeries prod = twisted_product(*basis_, parity_, one, n + 1, t,
                                          [&](int u) -> const SeriesVec& { return u < n ? inputs[u] : w; });
      if (!prod.is_zero()) out += prod.scaled(c);
    }
  }
  return out;
}

// ---------------------------------------------------------------- potentials

PotentialSeries potential_cyclic(const AInfAlgebra& a, const CyclicPairing& p, int n_max, ParityConvention parity) {
  SeriesContext ctx(a.basis(), parity, n_max);
  const SeriesVec x = ctx.generic();
  FormalSeries phi = ctx.zero_series();
  for (int k = 1; k + 1 <= n_max && k <= a.arity_cap(); ++k)
    phi += ctx.pair(p, ctx.power(a.m(), k, x), x).scaled(Rational(1, k + 1));
  return {phi, Provenance::cyclic, n_max};
}

FormalSeries potential_shi_part(const AInfAlgebra& a, const InnerProductMap& phi, int n, const SeriesContext& ctx) {
  const SeriesVec x = ctx.generic();
  FormalSeries out = ctx.zero_series();
  for (int k = 1; k <= n && k <= a.arity_cap(); ++k) {
    const SeriesVec mk = ctx.power(a.m(), k, x);
    for (int p = 0; p + k <= n; ++p) {
      const int q = n - k - p;
      if (p + q > phi.pq_cap()) continue;
      std::vector<SeriesVec> inputs(p, x);
      inputs.push_back(mk);
      inputs.insert(inputs.end(), q, x);
      out += ctx.pair(phi, p, inputs, x);
    }
  }
  return out.scaled(Rational(1, n + 1));
}

PotentialSeries potential_shi(const AInfAlgebra& a, const InnerProductMap& phi, int n_max, ParityConvention parity) {
  SeriesContext ctx(a.basis(), parity, n_max);
  FormalSeries out = ctx.zero_series();
  for (int n = 1; n + 1 <= n_max; ++n) out += potential_shi_part(a, phi, n, ctx);
  return {out, Provenance::shi, n_max};
}

namespace {

SeriesVec unit_vector(const AInfAlgebra& a, const SeriesContext& ctx) {
  if (!a.basis()->unit()) throw StructureError("potential needs a unit");
  return ctx.constant(basis_vector(*a.basis()->unit()));
}

}  // namespace

PotentialSeries potential_psi(const AInfAlgebra& a, const InnerProductMap& phi, int n_max, ParityConvention parity) {
  SeriesContext ctx(a.basis(), parity, n_max);
  const SeriesVec x = ctx.generic();
  const SeriesVec unit = unit_vector(a, ctx);
  FormalSeries out = ctx.zero_series();
  for (int len = 1; len <= n_max && len - 1 <= phi.pq_cap(); ++len) {
    const std::vector<SeriesVec> inputs(len, x);
    for (int p = 0; p < len; ++p) out += ctx.pair(phi, p, inputs, unit).scaled(Rational(1, len));
  }
  return {out, Provenance::psi, n_max};
}

PotentialSeries psi_nofrac(const AInfAlgebra& a, const InnerProductMap& phi, int n_max, ParityConvention parity) {
  SeriesContext ctx(a.basis(), parity, n_max);
  const SeriesVec x = ctx.generic();
  const SeriesVec unit = unit_vector(a, ctx);
  FormalSeries out = ctx.zero_series();
  for (int len = 1; len <= n_max && len - 1 <= phi.pq_cap(); ++len) {
    const std::vector<SeriesVec> inputs(len, x);
    out += ctx.pair(phi, 0, inputs, unit);
  }
  return {out, Provenance::psi_nofrac, n_max};
}

PotentialSeries pullback_potential(const PotentialSeries& phi_a, const AInfMorphism& h, int n_max,
                                   ParityConvention parity) {
  if (phi_a.series.vars()->size() != h.target()->dim())
    throw StructureError("potential variables do not match the morphism target");
  SeriesContext ctx(h.source()->basis(), parity, n_max, "y");
  const SeriesVec y = ctx.generic();
  std::vector<FormalSeries> images(h.target()->dim(), ctx.zero_series());
  for (int k = 1; k <= n_max && k <= h.arity_cap(); ++k) {
    SeriesVec hk = ctx.power(h.f(), k, y);
    for (int i = 0; i < h.target()->dim(); ++i) images[i] += hk[i];
  }
  FormalSeries out = substitute(phi_a.series, images, ctx.vars(), n_max);
  return {out, Provenance::pullback, n_max};
}

// ---------------------------------------------------------------- fraction-free derivative

FormalSeries fundlem_rhs(const AInfAlgebra& a, const InnerProductMap& phi, int i, int n, const SeriesContext& ctx) {
  const SeriesVec x = ctx.generic();
  const SeriesVec ei = ctx.constant(basis_vector(i));
  FormalSeries out = ctx.zero_series();
  for (int k = 1; k <= n && k <= a.arity_cap(); ++k) {
    const SeriesVec mk = ctx.power(a.m(), k, x);
    for (int p = 0; p + k <= n; ++p) {
      const int q = n - k - p;
      if (p + q > phi.pq_cap()) continue;
      std::vector<SeriesVec> inputs(p, x);
      inputs.push_back(mk);
      inputs.insert(inputs.end(), q, x);
      out += ctx.pair(phi, p, inputs, ei);
    }
  }
  return out;
}

Report compare_series(const std::string& check, const FormalSeries& lhs, const FormalSeries& rhs) {
  Report rep;
  rep.check = check;
  std::map<Monomial, std::pair<Rational, Rational>> diff;
  for (const auto& [m, c] : lhs.terms()) diff[m].first = c;
  for (const auto& [m, c] : rhs.terms()) diff[m].second = c;
  for (const auto& [m, v] : diff) {
    if (v.first == v.second) continue;
    std::string name;
    for (int k : m) name += (name.empty() ? "" : "*") + lhs.vars()->name(k);
    if (name.empty()) name = "1";
    rep.fail({name, to_string(v.first), to_string(v.second)});
  }
  return rep;
}

Report check_fundlem(const AInfAlgebra& a, const InnerProductMap& phi, int i, int n, ParityConvention parity,
                     DerivativeSide side) {
  // One extra letter of headroom so Φ_N (word length N+1) is never truncated.
  SeriesContext ctx(a.basis(), parity, n + 1);
  const FormalSeries phi_n = potential_shi_part(a, phi, n, ctx);
  const FormalSeries lhs = side == DerivativeSide::left ? phi_n.derivative_left(i) : phi_n.derivative_right(i);
  Report rep = compare_series("fundlem", lhs, fundlem_rhs(a, phi, i, n, ctx));
  rep.caps["N"] = n;
  rep.caps["variable"] = i;
  return rep;
}

Report check_fundlem_all(const AInfAlgebra& a, const InnerProductMap& phi, int n_max, ParityConvention parity,
                         DerivativeSide side) {
  Report rep;
  rep.check = "fundlem";
  ReportTimer timer(rep);
  rep.caps["N"] = n_max;
  rep.note("parity " + to_string(parity) + ", " + to_string(side) + " derivative");
  SeriesContext ctx(a.basis(), parity, n_max + 1);
  for (int n = 1; n <= n_max; ++n) {
    const FormalSeries phi_n = potential_shi_part(a, phi, n, ctx);
    for (int i = 0; i < a.dim(); ++i) {
      const FormalSeries lhs = side == DerivativeSide::left ? phi_n.derivative_left(i) : phi_n.derivative_right(i);
      Report sub = compare_series("fundlem", lhs, fundlem_rhs(a, phi, i, n, ctx));
      for (auto& v : sub.violations) {
        v.input = "N=" + std::to_string(n) + " d/d" + ctx.vars()->name(i) + " " + v.input;
        rep.fail(v);
      }
      rep.violation_count += sub.violation_count - sub.violations.size();
    }
  }
  return rep;
}

}  // namespace ainf
