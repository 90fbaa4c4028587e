#include "ainf/morphism.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace ainf {

namespace {

long long sum_range(const GradedBasis& b, const Tuple& t, int begin, int end) {
  long long s = 0;
  for (int k = begin; k < end; ++k) s += b.shifted(t[k]);
  return s;
}

std::vector<Combination> basis_args(const Tuple& t, int begin, int end) {
  std::vector<Combination> out;
  for (int k = begin; k < end; ++k) out.push_back(basis_vector(t[k]));
  return out;
}

}  // namespace

AInfMorphism::AInfMorphism(AlgebraPtr source, AlgebraPtr target, MultilinearTable f, int arity_cap)
    : source_(std::move(source)), target_(std::move(target)), f_(std::move(f)), arity_cap_(arity_cap) {
  if (!source_ || !target_) throw StructureError("morphism without source or target");
  if (*f_.source() != *source_->basis() || *f_.target() != *target_->basis())
    throw StructureError("morphism table does not match source and target bases");
  if (f_.shifted_degree() != 0) throw StructureError("morphism components must have shifted degree 0");
  if (f_.max_arity() > arity_cap_) throw StructureError("morphism has components above its arity cap");
}

AInfMorphism AInfMorphism::identity(AlgebraPtr a) {
  MultilinearTable f(a->basis(), a->basis(), 0);
  for (int i = 0; i < a->dim(); ++i) f.add({i}, i, 1);
  const int cap = a->arity_cap();
  return AInfMorphism(a, a, std::move(f), cap);
}

Combination morphism_residual(const AInfMorphism& f, const Tuple& t) {
  const auto& a = *f.source();
  const auto& b = *f.target();
  const auto& basis = *a.basis();
  const int n = static_cast<int>(t.size());
  Combination res;
  long long prefix = 0;
  for (int r = 0; r < n; ++r) {
    for (int j = 1; r + j <= n; ++j) {
      const Combination& inner = a.m().at(slice(t, r, j));
      if (inner.empty()) continue;
      auto args = basis_args(t, 0, r);
      args.push_back(inner);
      auto tail = basis_args(t, r + j, n);
      args.insert(args.end(), tail.begin(), tail.end());
      add_scaled(res, f.f().apply(args), sign_of(prefix));
    }
    prefix += basis.shifted(t[r]);
  }
  for_each_composition(n, [&](const std::vector<int>& parts) {
    if (static_cast<int>(parts.size()) > b.arity_cap()) return;
    add_scaled(res, b.m().apply(apply_blocks(f.f(), t, parts)), -1);
  });
  return res;
}

Report check_morphism(const AInfMorphism& f, int max_word) {
  Report rep;
  rep.check = "morphism";
  ReportTimer timer(rep);
  const int word = std::min({max_word, f.arity_cap(), f.source()->arity_cap(), f.target()->arity_cap()});
  rep.caps["word"] = word;
  const auto& basis = *f.source()->basis();
  const auto& tb = *f.target()->basis();
  for (int n = 1; n <= word; ++n)
    for_each_tuple(basis.size(), n, [&](const Tuple& t) {
      Combination r = morphism_residual(f, t);
      if (!r.empty()) rep.fail({basis.describe(t), render(tb, r), "0"});
    });
  return rep;
}

bool is_quasi_isomorphism(const AInfMorphism& f) {
  const Cohomology ha = cohomology(*f.source());
  const Cohomology hb = cohomology(*f.target());
  if (ha.dim() != hb.dim()) return false;
  const int n = ha.dim();
  RationalMatrix m(n, n);
  const RationalMatrix f1 = linear_part(f.f());
  for (int c = 0; c < n; ++c) {
    auto coords = hb.project(apply_matrix(f1, ha.representatives[c]));
    for (int r = 0; r < n; ++r) m(r, c) = coords[r];
  }
  return m.rank() == n;
}

std::vector<Combination> inverse_columns(const MultilinearTable& f) {
  auto inv = linear_part(f).inverse();
  if (!inv) throw StructureError("f_1 is singular");
  std::vector<Combination> cols;
  for (int j = 0; j < inv->cols(); ++j) cols.push_back(apply_matrix(*inv, basis_vector(j)));
  return cols;
}

AInfMorphism invert_iso(const AInfMorphism& f) {
  const auto cols = inverse_columns(f.f());
  const auto& tb = *f.target()->basis();
  const int cap = f.arity_cap();
  MultilinearTable g(f.target()->basis(), f.source()->basis(), 0);
  for (int j = 0; j < tb.size(); ++j) g.set({j}, cols[j]);
  const auto& sb = *f.source()->basis();
  std::set<int> present;
  for (int i = 0; i < sb.size(); ++i) present.insert(sb.shifted(i));
  for (int n = 2; n <= cap; ++n) {
    std::vector<std::pair<Tuple, Combination>> found;
    for_each_tuple(tb.size(), n, [&](const Tuple& t) {
      if (!present.count(tb.shifted_sum(t))) return;
      std::vector<Combination> a;
      for (int i : t) a.push_back(cols[i]);
      Combination acc;
      for_each_composition(n, [&](const std::vector<int>& parts) {
        if (static_cast<int>(parts.size()) == n) return;
        std::vector<Combination> blocks;
        int pos = 0;
        for (int len : parts) {
          blocks.push_back(f.f().apply(std::span<const Combination>(a).subspan(pos, len)));
          pos += len;
        }
        add_scaled(acc, g.apply(blocks), -1);
      });
      if (!acc.empty()) found.emplace_back(t, std::move(acc));
    });
    for (auto& [t, v] : found) g.set(t, v);
  }
  return AInfMorphism(f.target(), f.source(), std::move(g), cap);
}

AInfMorphism compose(const AInfMorphism& g, const AInfMorphism& f) {
  if (*f.target()->basis() != *g.source()->basis())
    throw StructureError("composition of morphisms with mismatched middle algebra");
  const int cap = std::min(f.arity_cap(), g.arity_cap());
  const auto& sb = *f.source()->basis();
  MultilinearTable h(f.source()->basis(), g.target()->basis(), 0);
  const auto& gb = *g.target()->basis();
  std::set<int> present;
  for (int i = 0; i < gb.size(); ++i) present.insert(gb.shifted(i));
  for (int n = 1; n <= cap; ++n)
    for_each_tuple(sb.size(), n, [&](const Tuple& t) {
      if (!present.count(sb.shifted_sum(t))) return;
      Combination acc;
      for_each_composition(n, [&](const std::vector<int>& parts) {
        add_scaled(acc, g.f().apply(apply_blocks(f.f(), t, parts)), 1);
      });
      if (!acc.empty()) h.set(t, acc);
    });
  return AInfMorphism(f.source(), g.target(), std::move(h), cap);
}

// The word z_0..z_{n-1} (module slot p, output z_{n-1}) is cut cyclically into consecutive
// blocks, each fed to one f component. The output block is f(z_s..z_{n-1}, z_0..z_{r-1});
// rotating the head letters to the back is the only sign since every f_k is even.
InnerProductMap pullback_shi(const AInfMorphism& f, const InnerProductMap& phi) {
  const auto& basis = *f.source()->basis();
  if (*phi.basis() != *f.target()->basis()) throw StructureError("inner product map lives on the wrong algebra");
  const int fcap = f.arity_cap();
  const int pq = std::min(phi.pq_cap(), fcap - 1);
  InnerProductMap out(f.source()->basis(), phi.degree(), pq);
  for (int n = 2; n <= pq + 2; ++n) {
    for_each_tuple(basis.size(), n, [&](const Tuple& t) {
      if (basis.shifted_sum(t) != phi.degree()) return;
      const long long full = sum_range(basis, t, 0, n);
      for (int p = 0; p + 1 < n; ++p) {
        Rational total = 0;
        for (int r = 0; r <= p; ++r) {
          const long long head = sum_range(basis, t, 0, r);
          const int sign = sign_of(head * (full - head));
          for (int s = p + 1; s <= n - 1; ++s) {
            const int wlen = (n - s) + r;
            if (wlen > fcap) continue;
            Tuple wblock = slice(t, s, n - s);
            wblock.insert(wblock.end(), t.begin(), t.begin() + r);
            const Combination& w = f.f().at(wblock);
            if (w.empty()) continue;
            // Depth-first over block decompositions of z_r..z_{s-1}, pruning empty f blocks.
            std::vector<Combination> args;
            int center = -1;
            std::function<void(int)> walk = [&](int pos) {
              if (pos == s) {
                total += sign * phi.eval(center, args, w);
                return;
              }
              for (int len = 1; len <= fcap && pos + len <= s; ++len) {
                const Combination& c = f.f().at(slice(t, pos, len));
                if (c.empty()) continue;
                const bool here = p >= pos && p < pos + len;
                if (here) center = static_cast<int>(args.size());
                args.push_back(c);
                walk(pos + len);
                args.pop_back();
              }
            };
            walk(r);
          }
        }
        if (total != 0) out.add(p, Tuple(t.begin(), t.end() - 1), t.back(), total);
      }
    });
  }
  return out;
}

}  // namespace ainf
