#include "ainf/deformation.hpp"

#include <algorithm>
#include <stdexcept>

namespace ainf {

namespace {

int eps_order_of(const ArtinVec& v) {
  if (v.empty()) throw std::invalid_argument("empty Artinian vector");
  return v.front().eps_order();
}

void require_support(const GradedBasis& basis, const ArtinVec& v, int degree, const char* what) {
  if (static_cast<int>(v.size()) != basis.size()) throw std::invalid_argument(std::string(what) + " has wrong length");
  for (int i = 0; i < basis.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (basis.degree(i) != degree)
      throw std::invalid_argument(std::string(what) + " has a component on " + basis.label(i) + " of degree " +
                                  std::to_string(basis.degree(i)) + ", expected degree " + std::to_string(degree));
    if (!v[i].nilpotent())
      throw std::invalid_argument(std::string(what) + " is not nilpotent: component on " + basis.label(i) +
                                  " has an ε^0 term");
  }
}

}  // namespace

std::string render_artin(const GradedBasis& basis, const ArtinVec& v) {
  std::string s;
  for (int i = 0; i < static_cast<int>(v.size()); ++i) {
    if (v[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + v[i].to_string() + ")*" + basis.label(i);
  }
  return s.empty() ? "0" : s;
}

ArtinVec truncate_eps(const ArtinVec& v, int eps_order) {
  ArtinVec out = zero_artin(static_cast<int>(v.size()), eps_order);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (int e = 0; e < std::min(eps_order, v[i].eps_order()); ++e)
      for (std::size_t s = 0; s < v[i].rows()[e].size(); ++s) out[i].add(e, static_cast<int>(s), v[i].rows()[e][s]);
  return out;
}

ArtinVec zero_artin(int dim, int eps_order) { return ArtinVec(dim, ArtinScalar(eps_order)); }

ArtinVec apply_artin(const MultilinearTable& m, std::span<const ArtinVec> args) {
  const int n = eps_order_of(args.front());
  ArtinVec out = zero_artin(m.target()->size(), n);
  for (const auto& [t, value] : m.arity(static_cast<int>(args.size()))) {
    ArtinScalar prod = ArtinScalar::constant(n, 1);
    for (std::size_t u = 0; u < t.size() && !prod.is_zero(); ++u) prod = prod * args[u][t[u]];
    if (prod.is_zero()) continue;
    for (const auto& [j, c] : value) out[j] += prod.scaled(c);
  }
  return out;
}

ArtinVec mc_residual(const AInfAlgebra& a, const ArtinVec& b) {
  const int n = eps_order_of(b);
  ArtinVec out = zero_artin(a.dim(), n);
  for (int k = 1; k < n && k <= a.arity_cap(); ++k) {
    std::vector<ArtinVec> args(k, b);
    auto r = apply_artin(a.m(), args);
    for (int i = 0; i < a.dim(); ++i) out[i] += r[i];
  }
  return out;
}

Report mc_check(const AInfAlgebra& a, const ArtinVec& b) {
  Report rep;
  rep.check = "maurer-cartan";
  ReportTimer timer(rep);
  const auto& basis = *a.basis();
  rep.caps["eps_order"] = eps_order_of(b);
  try {
    require_support(basis, b, 1, "b");
  } catch (const std::invalid_argument& e) {
    rep.fail({"b", e.what(), "nilpotent, degree 1"});
    return rep;
  }
  ArtinVec r = mc_residual(a, b);
  for (int i = 0; i < a.dim(); ++i)
    if (!r[i].is_zero()) rep.fail({basis.label(i), r[i].to_string(), "0"});
  return rep;
}

ArtinVec gauge_velocity(const AInfAlgebra& a, const ArtinVec& b, const ArtinVec& c) {
  const int n = eps_order_of(b);
  ArtinVec out = zero_artin(a.dim(), n);
  bool b_zero = true;
  for (const auto& x : b) b_zero = b_zero && x.is_zero();
  for (int k = 1; k <= n && k <= a.arity_cap(); ++k) {
    if (b_zero && k > 1) break;
    for (int pos = 0; pos < k; ++pos) {
      std::vector<ArtinVec> args(k, b);
      args[pos] = c;
      auto r = apply_artin(a.m(), args);
      for (int i = 0; i < a.dim(); ++i) out[i] += r[i];
    }
  }
  return out;
}

GaugePath gauge_flow(const AInfAlgebra& a, const ArtinVec& b0, const ArtinVec& c) {
  const auto& basis = *a.basis();
  require_support(basis, b0, 1, "b0");
  require_support(basis, c, 0, "c");
  const int n = eps_order_of(b0);
  GaugePath path{b0, c, b0, 0};
  // Each pass fixes one more power of ε, so N+1 passes always reach the fixed point.
  for (int iter = 1; iter <= n + 2; ++iter) {
    ArtinVec v = gauge_velocity(a, path.b, c);
    ArtinVec next = b0;
    for (int i = 0; i < a.dim(); ++i) next[i] += v[i].integrate_t();
    path.iterations = iter;
    if (next == path.b) return path;
    path.b = std::move(next);
  }
  throw std::logic_error("Picard iteration did not stabilise");
}

Report check_gauge_path(const AInfAlgebra& a, const GaugePath& path) {
  Report rep;
  rep.check = "gauge-path";
  ReportTimer timer(rep);
  const auto& basis = *a.basis();
  rep.caps["eps_order"] = eps_order_of(path.b);
  rep.caps["iterations"] = path.iterations;
  int t_degree = 0;
  for (const auto& x : path.b) t_degree = std::max(t_degree, x.t_degree());
  rep.caps["t_degree"] = t_degree;
  ArtinVec start = path.b;
  for (auto& x : start) x = x.at_t(0);
  if (start != path.b0) rep.fail({"b(0)", render_artin(basis, start), render_artin(basis, path.b0)});
  ArtinVec v = gauge_velocity(a, path.b, path.c);
  for (int i = 0; i < a.dim(); ++i) {
    ArtinScalar d = path.b[i].derivative_t();
    if (d != v[i]) rep.fail({"d/dt b on " + basis.label(i), d.to_string(), v[i].to_string()});
  }
  Report mc = mc_check(a, path.b);
  mc.check = "maurer-cartan b(t)";
  rep.merge(std::move(mc));
  return rep;
}

ArtinScalar eval_psi(const AInfAlgebra& a, const InnerProductMap& phi, const ArtinVec& b) {
  const int n = eps_order_of(b);
  if (!a.basis()->unit()) throw StructureError("Ψ needs a unit");
  const int u = *a.basis()->unit();
  ArtinScalar out(n);
  for (const auto& [key, cov] : phi.entries()) {
    if (key.first != 0) continue;
    auto it = cov.find(u);
    if (it == cov.end()) continue;
    if (static_cast<int>(key.second.size()) >= n) continue;  // lies in ε^{k+1} = 0
    ArtinScalar prod = ArtinScalar::constant(n, it->second);
    for (int i : key.second) {
      prod = prod * b[i];
      if (prod.is_zero()) break;
    }
    out += prod;
  }
  return out;
}

ArtinScalar eval_series(const FormalSeries& psi, const ArtinVec& b) {
  const int n = eps_order_of(b);
  ArtinScalar out(n);
  for (const auto& [m, c] : psi.terms()) {
    ArtinScalar prod = ArtinScalar::constant(n, c);
    for (int i : m) {
      prod = prod * b.at(i);
      if (prod.is_zero()) break;
    }
    out += prod;
  }
  return out;
}

Report check_gauge_invariance(const AInfAlgebra& a, const InnerProductMap& phi, const GaugePath& path) {
  Report rep;
  rep.check = "gauge-invariance";
  ReportTimer timer(rep);
  rep.caps["eps_order"] = eps_order_of(path.b);
  ArtinScalar psi = eval_psi(a, phi, path.b);
  rep.caps["t_degree"] = psi.t_degree();
  for (int s = 1; s <= psi.t_degree(); ++s) {
    ArtinScalar part = psi.t_part(s);
    if (!part.is_zero()) rep.fail({"t^" + std::to_string(s), part.to_string(), "0"});
  }
  if (rep.passed) rep.note("t-coefficients >= 1 all zero; Psi = " + psi.to_string());
  return rep;
}

ArtinScalar holonomy(const HochschildCochain& alpha, const ArtinVec& b) {
  const int n = eps_order_of(b);
  if (!alpha.basis()->unit()) throw StructureError("holonomy needs a unit");
  const int u = *alpha.basis()->unit();
  ArtinScalar out(n);
  for (const auto& [x, cov] : alpha.entries()) {
    if (x.empty() || static_cast<int>(x.size()) >= n) continue;
    auto it = cov.find(u);
    if (it == cov.end()) continue;
    ArtinScalar prod = ArtinScalar::constant(n, it->second);
    for (int i : x) {
      prod = prod * b[i];
      if (prod.is_zero()) break;
    }
    out += prod;
  }
  return out;
}

// ---------------------------------------------------------------- random elements

Rational random_rational(std::mt19937_64& rng, bool nonzero) {
  while (true) {
    const long num = static_cast<long>(rng() % 7) - 3;
    const long den = static_cast<long>(rng() % 3) + 1;
    if (nonzero && num == 0) continue;
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
}

std::optional<ArtinVec> random_mc_element(const AInfAlgebra& a, int eps_order, std::mt19937_64& rng) {
  const auto& basis = *a.basis();
  std::vector<int> deg1, deg2;
  for (int i = 0; i < basis.size(); ++i) {
    if (basis.degree(i) == 1) deg1.push_back(i);
    if (basis.degree(i) == 2) deg2.push_back(i);
  }
  ArtinVec b = zero_artin(a.dim(), eps_order);
  if (deg1.empty()) return b;
  RationalMatrix d(static_cast<int>(deg2.size()), static_cast<int>(deg1.size()));
  for (std::size_t c = 0; c < deg1.size(); ++c)
    for (const auto& [o, v] : a.m().at({deg1[c]}))
      for (std::size_t r = 0; r < deg2.size(); ++r)
        if (deg2[r] == o) d(static_cast<int>(r), static_cast<int>(c)) = v;
  std::vector<std::vector<Rational>> kernel;
  if (deg2.empty()) {
    for (std::size_t c = 0; c < deg1.size(); ++c) {
      std::vector<Rational> e(deg1.size());
      e[c] = 1;
      kernel.push_back(e);
    }
  } else {
    kernel = d.kernel();
  }
  auto add_random_cocycle = [&](int e) {
    for (const auto& z : kernel) {
      const Rational c = random_rational(rng);
      if (c == 0) continue;
      for (std::size_t k = 0; k < deg1.size(); ++k)
        if (z[k] != 0) b[deg1[k]].add(e, 0, c * z[k]);
    }
  };
  add_random_cocycle(1);
  for (int e = 2; e < eps_order; ++e) {
    ArtinVec r = mc_residual(a, b);
    std::vector<Rational> rhs(deg2.size());
    bool any = false;
    for (std::size_t k = 0; k < deg2.size(); ++k) {
      rhs[k] = -r[deg2[k]].coefficient(e, 0);
      any = any || rhs[k] != 0;
    }
    if (any) {
      auto x = d.solve(rhs);
      if (!x) return std::nullopt;  // obstructed at this order
      for (std::size_t k = 0; k < deg1.size(); ++k) b[deg1[k]].add(e, 0, (*x)[k]);
    }
    add_random_cocycle(e);
  }
  for (const auto& x : mc_residual(a, b))
    if (!x.is_zero()) return std::nullopt;
  return b;
}

ArtinVec random_gauge_parameter(const AInfAlgebra& a, int eps_order, std::mt19937_64& rng, bool t_dependent) {
  const auto& basis = *a.basis();
  ArtinVec c = zero_artin(a.dim(), eps_order);
  for (int i = 0; i < basis.size(); ++i) {
    if (basis.degree(i) != 0) continue;
    for (int e = 1; e < eps_order; ++e) {
      c[i].add(e, 0, random_rational(rng));
      if (t_dependent) c[i].add(e, 1, random_rational(rng));
    }
  }
  return c;
}

MultilinearTable random_unipotent_iso(const BasisPtr& basis, int max_entries, std::mt19937_64& rng) {
  const auto unit = basis->unit();
  std::vector<std::pair<Tuple, int>> slots;
  for (int n = 2; n <= 3; ++n)
    for_each_tuple(basis->size(), n, [&](const Tuple& t) {
      if (unit && std::find(t.begin(), t.end(), *unit) != t.end()) return;
      for (int w = 0; w < basis->size(); ++w)
        if (basis->shifted_sum(t) == basis->shifted(w)) slots.emplace_back(t, w);
    });
  std::shuffle(slots.begin(), slots.end(), rng);
  if (static_cast<int>(slots.size()) > max_entries) slots.resize(max_entries);
  MultilinearTable f(basis, basis, 0);
  for (int i = 0; i < basis->size(); ++i) f.add({i}, i, 1);
  for (const auto& [t, w] : slots) f.add(t, w, random_rational(rng, true));
  return f;
}

}  // namespace ainf
