#include "ainf/inner_product.hpp"

#include <algorithm>

namespace ainf {

namespace {

const Combination kZero;

Rational dot(const Combination& covector, const Combination& w) {
  Rational s = 0;
  if (covector.size() < w.size()) {
    for (const auto& [i, c] : covector) {
      auto it = w.find(i);
      if (it != w.end()) s += c * it->second;
    }
  } else {
    for (const auto& [i, c] : w) {
      auto it = covector.find(i);
      if (it != covector.end()) s += c * it->second;
    }
  }
  return s;
}

long long sum_range(const GradedBasis& b, const Tuple& t, int begin, int end) {
  long long s = 0;
  for (int k = begin; k < end; ++k) s += b.shifted(t[k]);
  return s;
}

std::string pq_label(const GradedBasis& b, int p, const Tuple& inputs, int w) {
  std::string s = "(";
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    if (k) s += ",";
    s += static_cast<int>(k) == p ? "_" + b.label(inputs[k]) + "_" : b.label(inputs[k]);
  }
  return s + " | " + b.label(w) + ")";
}

}  // namespace

// ---------------------------------------------------------------- InnerProductMap

InnerProductMap::InnerProductMap(BasisPtr basis, int degree, int pq_cap)
    : basis_(std::move(basis)), degree_(degree), pq_cap_(pq_cap) {
  if (pq_cap_ < 0) throw StructureError("pq cap must be non-negative");
}

void InnerProductMap::set(int p, const Tuple& inputs, const Combination& covector) {
  const int n = static_cast<int>(inputs.size());
  if (p < 0 || p >= n) throw StructureError("module slot outside the input word");
  if (n - 1 > pq_cap_)
    throw StructureError("component with p+q = " + std::to_string(n - 1) + " exceeds pq cap " +
                         std::to_string(pq_cap_));
  for (int i : inputs)
    if (i < 0 || i >= basis_->size()) throw StructureError("inner product index out of range");
  const int s = basis_->shifted_sum(inputs);
  for (const auto& [w, c] : covector) {
    if (w < 0 || w >= basis_->size()) throw StructureError("inner product index out of range");
    if (s + basis_->shifted(w) != degree_)
      throw StructureError("degree mismatch in component " + pq_label(*basis_, p, inputs, w) +
                           ": total shifted degree " + std::to_string(s + basis_->shifted(w)) +
                           ", pairing degree " + std::to_string(degree_));
  }
  Key key{p, inputs};
  if (covector.empty())
    entries_.erase(key);
  else
    entries_[key] = covector;
}

void InnerProductMap::add(int p, const Tuple& inputs, int w, const Rational& c) {
  if (c == 0) return;
  Combination cur = covector(p, inputs);
  add_term(cur, w, c);
  set(p, inputs, cur);
}

const Combination& InnerProductMap::covector(int p, const Tuple& inputs) const {
  auto it = entries_.find(Key{p, inputs});
  return it == entries_.end() ? kZero : it->second;
}

Rational InnerProductMap::value(int p, const Tuple& inputs, int w) const {
  const auto& c = covector(p, inputs);
  auto it = c.find(w);
  return it == c.end() ? Rational(0) : it->second;
}

Rational InnerProductMap::at_word(int p, const Tuple& word) const {
  return value(p, Tuple(word.begin(), word.end() - 1), word.back());
}

Rational InnerProductMap::eval(int p, std::span<const Combination> inputs, const Combination& w) const {
  Rational s = 0;
  expand_product(inputs, [&](const Tuple& t, const Rational& c) {
    const auto& cov = covector(p, t);
    if (!cov.empty()) s += c * dot(cov, w);
  });
  return s;
}

bool InnerProductMap::has_higher_components() const {
  return std::any_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.first.second.size() > 1; });
}

// ---------------------------------------------------------------- HochschildCochain

HochschildCochain::HochschildCochain(BasisPtr basis, int degree) : basis_(std::move(basis)), degree_(degree) {}

void HochschildCochain::set(const Tuple& inputs, const Combination& covector) {
  for (int i : inputs)
    if (i < 0 || i >= basis_->size()) throw StructureError("cochain index out of range");
  const int s = basis_->shifted_sum(inputs);
  for (const auto& [w, c] : covector) {
    if (w < 0 || w >= basis_->size()) throw StructureError("cochain index out of range");
    if (s + basis_->shifted(w) != degree_)
      throw StructureError("degree mismatch in cochain entry " + basis_->describe(inputs) + " | " +
                           basis_->label(w));
  }
  if (covector.empty())
    entries_.erase(inputs);
  else
    entries_[inputs] = covector;
}

void HochschildCochain::add(const Tuple& inputs, int w, const Rational& c) {
  if (c == 0) return;
  Combination cur = covector(inputs);
  add_term(cur, w, c);
  set(inputs, cur);
}

const Combination& HochschildCochain::covector(const Tuple& inputs) const {
  auto it = entries_.find(inputs);
  return it == entries_.end() ? kZero : it->second;
}

Rational HochschildCochain::value(const Tuple& inputs, int w) const {
  const auto& c = covector(inputs);
  auto it = c.find(w);
  return it == c.end() ? Rational(0) : it->second;
}

Rational HochschildCochain::eval(std::span<const Combination> inputs, const Combination& w) const {
  Rational s = 0;
  if (inputs.empty()) return dot(covector({}), w);
  expand_product(inputs, [&](const Tuple& t, const Rational& c) {
    const auto& cov = covector(t);
    if (!cov.empty()) s += c * dot(cov, w);
  });
  return s;
}

int HochschildCochain::max_length() const {
  int m = 0;
  for (const auto& [t, c] : entries_) m = std::max(m, static_cast<int>(t.size()));
  return m;
}

// ---------------------------------------------------------------- bimodule equation

// Sign ledger for the word z_0..z_{n-1} (module slot at p, output slot w = z_{n-1}):
//  * a linear block m_j(z_s..z_{s+j-1}) avoiding w carries (-1)^{|z_0|'+...+|z_{s-1}|'};
//  * a block through w is m_j(z_s..z_{n-1}, z_0..z_{r-1}) with r ≤ p < s. Rotating the head
//    z_0..z_{r-1} to the back costs (-1)^{(Σ_{t<r})(Σ_{t≥r})}, and passing the operation over
//    z_r..z_{s-1} costs (-1)^{Σ_{r≤t<s}}. The result becomes the new output slot.
Rational bimodule_residual(const AInfAlgebra& a, const InnerProductMap& phi, int p, const Tuple& word) {
  const auto& basis = *a.basis();
  const auto& m = a.m();
  const int n = static_cast<int>(word.size());
  const int cap = a.arity_cap();
  Rational total = 0;
  const Combination w = basis_vector(word[n - 1]);
  long long prefix = 0;
  for (int s = 0; s < n - 1; ++s) {
    for (int j = 1; j <= cap && s + j <= n - 1; ++j) {
      const Combination& inner = m.at(slice(word, s, j));
      if (inner.empty()) continue;
      std::vector<Combination> args;
      for (int t = 0; t < s; ++t) args.push_back(basis_vector(word[t]));
      args.push_back(inner);
      for (int t = s + j; t < n - 1; ++t) args.push_back(basis_vector(word[t]));
      const int np = (p >= s && p < s + j) ? s : (p < s ? p : p - j + 1);
      total += sign_of(prefix) * phi.eval(np, args, w);
    }
    prefix += basis.shifted(word[s]);
  }
  const long long full = sum_range(basis, word, 0, n);
  for (int r = 0; r <= p; ++r) {
    const long long head = sum_range(basis, word, 0, r);
    for (int s = p + 1; s <= n - 1; ++s) {
      const int j = (n - s) + r;
      if (j > cap) continue;
      Tuple block = slice(word, s, n - s);
      block.insert(block.end(), word.begin(), word.begin() + r);
      const Combination& inner = m.at(block);
      if (inner.empty()) continue;
      std::vector<Combination> args;
      for (int t = r; t < s; ++t) args.push_back(basis_vector(word[t]));
      const int sign = sign_of(head * (full - head) + sum_range(basis, word, r, s));
      total += sign * phi.eval(p - r, args, inner);
    }
  }
  return total;
}

Rational bracket(const InnerProductMap& phi, const Tuple& family, int i, int j) {
  const auto& basis = *phi.basis();
  const int n = static_cast<int>(family.size());
  Tuple rotated(n);
  for (int t = 0; t < n; ++t) rotated[t] = family[(j + 1 + t) % n];
  const int pos = ((i - j - 1) % n + n) % n;
  const long long before = sum_range(basis, family, 0, j + 1);
  const long long after = sum_range(basis, family, j + 1, n);
  return sign_of(before * after) * phi.at_word(pos, rotated);
}

namespace {

int effective_word(const InnerProductMap& phi, int max_word, Report& rep) {
  const int w = std::min(max_word, phi.pq_cap() + 2);
  if (w < max_word) rep.note("word cap lowered to pq cap + 2 = " + std::to_string(w));
  rep.caps["word"] = w;
  rep.caps["pq"] = phi.pq_cap();
  return w;
}

template <class F>
void sweep_families(const InnerProductMap& phi, int min_len, int max_len, F&& f) {
  const auto& basis = *phi.basis();
  for (int n = min_len; n <= max_len; ++n)
    for_each_tuple(basis.size(), n, [&](const Tuple& t) {
      if (basis.shifted_sum(t) == phi.degree()) f(t);
    });
}

}  // namespace

Report check_bimodule_map(const AInfAlgebra& a, const InnerProductMap& phi, int max_word) {
  Report rep;
  rep.check = "bimodule";
  ReportTimer timer(rep);
  const int word = effective_word(phi, max_word, rep);
  rep.caps["arity"] = a.arity_cap();
  const auto& basis = *a.basis();
  for (int n = 2; n <= word; ++n) {
    for_each_tuple(basis.size(), n, [&](const Tuple& t) {
      if (basis.shifted_sum(t) + 1 != phi.degree()) return;
      for (int p = 0; p < n - 1; ++p) {
        Rational r = bimodule_residual(a, phi, p, t);
        if (r != 0) rep.fail({pq_label(basis, p, Tuple(t.begin(), t.end() - 1), t.back()), to_string(r), "0"});
      }
    });
  }
  return rep;
}

Report check_skew(const InnerProductMap& phi) {
  Report rep;
  rep.check = "skew";
  ReportTimer timer(rep);
  rep.caps["pq"] = phi.pq_cap();
  const auto& basis = *phi.basis();
  for (const auto& [key, cov] : phi.entries()) {
    const auto& [p, in] = key;
    const int n = static_cast<int>(in.size());
    const int q = n - 1 - p;
    const long long left = sum_range(basis, in, 0, p + 1);
    const long long right = sum_range(basis, in, p + 1, n);
    for (const auto& [w, val] : cov) {
      Tuple mirror(in.begin() + p + 1, in.end());
      mirror.push_back(w);
      mirror.insert(mirror.end(), in.begin(), in.begin() + p);
      const Rational got = phi.value(q, mirror, in[p]);
      const Rational want = -sign_of(left * (right + basis.shifted(w))) * val;
      if (got != want) rep.fail({pq_label(basis, q, mirror, in[p]), to_string(got), to_string(want)});
    }
  }
  return rep;
}

Report check_closed(const InnerProductMap& phi, int max_word) {
  Report rep;
  rep.check = "closed";
  ReportTimer timer(rep);
  const int word = effective_word(phi, max_word, rep);
  const auto& basis = *phi.basis();
  sweep_families(phi, 3, word, [&](const Tuple& t) {
    const int n = static_cast<int>(t.size());
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
          Rational s = bracket(phi, t, i, j) + bracket(phi, t, j, k) + bracket(phi, t, k, i);
          if (s != 0)
            rep.fail({basis.describe(t) + " [" + std::to_string(i) + "," + std::to_string(j) + "," +
                          std::to_string(k) + "]",
                      to_string(s), "0"});
        }
  });
  return rep;
}

Report check_cyclic_sum(const InnerProductMap& phi, int max_word) {
  Report rep;
  rep.check = "cyclic-sum";
  ReportTimer timer(rep);
  const int word = effective_word(phi, max_word, rep);
  const auto& basis = *phi.basis();
  sweep_families(phi, 2, word, [&](const Tuple& t) {
    const int n = static_cast<int>(t.size());
    Rational s = 0;
    for (int r = 0; r < n; ++r) s += bracket(phi, t, (r + 1) % n, r);
    if (s != 0) rep.fail({basis.describe(t), to_string(s), "0"});
  });
  return rep;
}

Report check_homological_nondegeneracy(const AInfAlgebra& a, const InnerProductMap& phi) {
  Report rep;
  rep.check = "homological-nondegeneracy";
  ReportTimer timer(rep);
  const Cohomology h = cohomology(a);
  const int n = h.dim();
  RationalMatrix g(n, n);
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s) {
      std::vector<Combination> in{h.representatives[r]};
      g(r, s) = phi.eval(0, in, h.representatives[s]);
    }
  const int rank = g.rank();
  rep.caps["dim_h"] = n;
  rep.note("rank " + std::to_string(rank) + " of " + std::to_string(n));
  if (rank != n) rep.fail({"H", "rank " + std::to_string(rank), "rank " + std::to_string(n)});
  return rep;
}

Report check_unital_bimodule(const InnerProductMap& phi) {
  Report rep;
  rep.check = "unital-bimodule";
  ReportTimer timer(rep);
  const auto& basis = *phi.basis();
  if (!basis.unit()) throw StructureError("inner product map on a non-unital basis");
  const int u = *basis.unit();
  for (const auto& [key, cov] : phi.entries()) {
    const auto& [p, in] = key;
    for (int k = 0; k < static_cast<int>(in.size()); ++k)
      if (k != p && in[k] == u) {
        rep.fail({pq_label(basis, p, in, cov.begin()->first), render(basis, cov), "0"});
        break;
      }
  }
  return rep;
}

Report is_shi(const AInfAlgebra& a, const InnerProductMap& phi, int max_word) {
  Report rep;
  rep.check = "shi";
  ReportTimer timer(rep);
  rep.merge(check_bimodule_map(a, phi, max_word));
  rep.merge(check_skew(phi));
  rep.merge(check_closed(phi, max_word));
  rep.merge(check_homological_nondegeneracy(a, phi));
  return rep;
}

InnerProductMap shi_from_cyclic(const CyclicPairing& p, int pq_cap) {
  InnerProductMap phi(p.basis(), p.degree(), pq_cap);
  for (const auto& [key, v] : p.entries()) phi.add(0, {key.first}, key.second, v);
  return phi;
}

InnerProductMap shi_from_cocycle(const HochschildCochain& alpha, int pq_cap) {
  const auto& basis = *alpha.basis();
  InnerProductMap phi(alpha.basis(), alpha.degree(), pq_cap);
  for (const auto& [x, cov] : alpha.entries()) {
    const int n = static_cast<int>(x.size());
    if (n == 0) continue;
    if (n - 1 > pq_cap) throw StructureError("cochain component longer than pq cap + 1");
    for (const auto& [w, val] : cov) {
      // Direct term: v = x[p].
      for (int p = 0; p < n; ++p) phi.add(p, x, w, val);
      // Transposed term: x = (b, w', a) read with w' = x[c]; contributes to ⟨a, w, b | x[c]⟩.
      for (int c = 0; c < n; ++c) {
        Tuple in(x.begin() + c + 1, x.end());
        const int p = static_cast<int>(in.size());
        in.push_back(w);
        in.insert(in.end(), x.begin(), x.begin() + c);
        const long long sa = sum_range(basis, x, c + 1, n) + basis.shifted(w);
        const long long sb = sum_range(basis, x, 0, c) + basis.shifted(x[c]);
        phi.add(p, in, x[c], -sign_of(sa * sb) * val);
      }
    }
  }
  return phi;
}

Report check_reduced(const HochschildCochain& alpha) {
  Report rep;
  rep.check = "reduced";
  ReportTimer timer(rep);
  const auto& basis = *alpha.basis();
  if (!basis.unit()) throw StructureError("reducedness needs a unit");
  const int u = *basis.unit();
  for (const auto& [x, cov] : alpha.entries())
    if (std::find(x.begin(), x.end(), u) != x.end()) rep.fail({basis.describe(x), render(basis, cov), "0"});
  return rep;
}

}  // namespace ainf
