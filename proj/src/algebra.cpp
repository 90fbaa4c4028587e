#include "ainf/algebra.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ainf {

AInfAlgebra::AInfAlgebra(BasisPtr basis, MultilinearTable m, int arity_cap)
    : basis_(std::move(basis)), m_(std::move(m)), arity_cap_(arity_cap) {
  if (!basis_) throw StructureError("algebra without basis");
  if (*m_.source() != *basis_ || *m_.target() != *basis_)
    throw StructureError("structure table lives on a different basis");
  if (m_.shifted_degree() != 1) throw StructureError("m_k must have shifted degree 1");
  if (arity_cap_ < 1) throw StructureError("arity cap must be positive");
  if (m_.max_arity() > arity_cap_)
    throw StructureError("m has arity " + std::to_string(m_.max_arity()) + " above the declared cap " +
                         std::to_string(arity_cap_));
}

CyclicPairing::CyclicPairing(BasisPtr basis, int degree, std::map<std::pair<int, int>, Rational> entries)
    : basis_(std::move(basis)), degree_(degree) {
  const int n = basis_->size();
  for (auto& [key, v] : entries) {
    if (v == 0) continue;
    auto [a, b] = key;
    if (a < 0 || b < 0 || a >= n || b >= n) throw StructureError("pairing index out of range");
    if (basis_->shifted(a) + basis_->shifted(b) != degree_)
      throw StructureError("pairing entry <" + basis_->label(a) + "," + basis_->label(b) +
                           "> violates homogeneity for pairing degree " + std::to_string(degree_));
    entries_[key] = v;
  }
  for (const auto& [key, v] : entries_) {
    auto [a, b] = key;
    Rational mirror = (*this)(b, a);
    if (mirror != -sign_of(static_cast<long long>(basis_->shifted(a)) * basis_->shifted(b)) * v)
      throw StructureError("pairing is not skew symmetric at <" + basis_->label(a) + "," + basis_->label(b) + ">");
  }
  RationalMatrix g(n, n);
  for (const auto& [key, v] : entries_) g(key.first, key.second) = v;
  if (g.rank() != n) throw StructureError("pairing is degenerate");
}

Rational CyclicPairing::operator()(int a, int b) const {
  auto it = entries_.find({a, b});
  return it == entries_.end() ? Rational(0) : it->second;
}

Rational CyclicPairing::eval(const Combination& a, const Combination& b) const {
  Rational s = 0;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) {
      auto it = entries_.find({i, j});
      if (it != entries_.end()) s += x * y * it->second;
    }
  return s;
}

Combination stasheff_residual(const AInfAlgebra& a, const Tuple& t) {
  const auto& basis = *a.basis();
  const auto& m = a.m();
  const int n = static_cast<int>(t.size());
  Combination res;
  int prefix = 0;  // shifted degree of t[0..r)
  for (int r = 0; r < n; ++r) {
    for (int j = 1; r + j <= n; ++j) {
      const Combination& inner = m.at(slice(t, r, j));
      if (inner.empty()) continue;
      std::vector<Combination> args;
      args.reserve(n - j + 1);
      for (int s = 0; s < r; ++s) args.push_back(basis_vector(t[s]));
      args.push_back(inner);
      for (int s = r + j; s < n; ++s) args.push_back(basis_vector(t[s]));
      add_scaled(res, m.apply(args), sign_of(prefix));
    }
    prefix += basis.shifted(t[r]);
  }
  return res;
}

Report check_ainf(const AInfAlgebra& a, int max_word) {
  Report rep;
  rep.check = "ainf";
  ReportTimer timer(rep);
  const int word = std::min(max_word, a.arity_cap());
  if (word < max_word) rep.note("word cap lowered to the arity cap " + std::to_string(word));
  rep.caps["word"] = word;
  rep.caps["arity"] = a.arity_cap();
  const auto& basis = *a.basis();
  std::set<int> shifted_present;
  for (int i = 0; i < basis.size(); ++i) shifted_present.insert(basis.shifted(i));
  for (int n = 1; n <= word; ++n) {
    for_each_tuple(basis.size(), n, [&](const Tuple& t) {
      if (!shifted_present.count(basis.shifted_sum(t) + 2)) return;
      Combination r = stasheff_residual(a, t);
      if (!r.empty()) rep.fail({basis.describe(t), render(basis, r), "0"});
    });
  }
  return rep;
}

Report check_unit(const AInfAlgebra& a) {
  Report rep;
  rep.check = "unit";
  ReportTimer timer(rep);
  rep.caps["arity"] = a.arity_cap();
  const auto& basis = *a.basis();
  if (!basis.unit()) throw StructureError("algebra has no unit");
  const int u = *basis.unit();
  // Stored entries are exactly the non-zero ones, so sweeping them is exhaustive.
  a.m().for_each([&](const Tuple& t, const Combination& v) {
    if (t.size() == 2) return;
    if (std::find(t.begin(), t.end(), u) != t.end()) rep.fail({basis.describe(t), render(basis, v), "0"});
  });
  for (int x = 0; x < basis.size(); ++x) {
    const Combination left = a.m().at({u, x});
    const Combination want_left = basis_vector(x);
    if (left != want_left) rep.fail({basis.describe(Tuple{u, x}), render(basis, left), render(basis, want_left)});
    const Combination right = a.m().at({x, u});
    const Combination want_right = scaled(basis_vector(x), sign_of(basis.degree(x)));
    if (right != want_right)
      rep.fail({basis.describe(Tuple{x, u}), render(basis, right), render(basis, want_right)});
  }
  return rep;
}

Report check_cyclic(const AInfAlgebra& a, const CyclicPairing& p, int max_word) {
  Report rep;
  rep.check = "cyclic";
  ReportTimer timer(rep);
  const auto& basis = *a.basis();
  const int word = std::min(max_word, a.arity_cap() + 1);
  rep.caps["word"] = word;
  for (int n = 2; n <= word; ++n) {
    for_each_tuple(basis.size(), n, [&](const Tuple& t) {
      if (basis.shifted_sum(t) + 1 != p.degree()) return;
      const Combination& l = a.m().at(slice(t, 0, n - 1));
      const Combination& r = a.m().at(slice(t, 1, n - 1));
      const Rational lhs = p.eval(l, basis_vector(t[n - 1]));
      const int rest = basis.shifted_sum(std::span<const int>(t).subspan(1));
      const Rational rhs = sign_of(static_cast<long long>(basis.shifted(t[0])) * rest) * p.eval(r, basis_vector(t[0]));
      if (lhs != rhs) rep.fail({basis.describe(t), to_string(lhs), to_string(rhs)});
    });
  }
  return rep;
}

// ---------------------------------------------------------------- cohomology

namespace {

std::map<int, std::vector<int>> by_degree(const GradedBasis& b) {
  std::map<int, std::vector<int>> out;
  for (int i = 0; i < b.size(); ++i) out[b.degree(i)].push_back(i);
  return out;
}

/// Matrix of m_1 from degree `from` into degree `to`.
RationalMatrix m1_block(const AInfAlgebra& a, const std::vector<int>& from, const std::vector<int>& to) {
  RationalMatrix mat(static_cast<int>(to.size()), static_cast<int>(from.size()));
  for (std::size_t c = 0; c < from.size(); ++c) {
    for (const auto& [o, v] : a.m().at({from[c]})) {
      auto it = std::find(to.begin(), to.end(), o);
      if (it != to.end()) mat(static_cast<int>(it - to.begin()), static_cast<int>(c)) = v;
    }
  }
  return mat;
}

RationalMatrix from_columns(const std::vector<std::vector<Rational>>& cols, int rows) {
  RationalMatrix m(rows, static_cast<int>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (int r = 0; r < rows; ++r) m(r, static_cast<int>(c)) = cols[c][r];
  return m;
}

}  // namespace

Cohomology cohomology(const AInfAlgebra& a) {
  Cohomology h;
  const auto groups = by_degree(*a.basis());
  static const std::vector<int> kNone;
  for (const auto& [deg, idx] : groups) {
    auto next = groups.find(deg + 1);
    auto prev = groups.find(deg - 1);
    const int n = static_cast<int>(idx.size());
    RationalMatrix d_out = m1_block(a, idx, next == groups.end() ? kNone : next->second);
    auto kernel = d_out.rows() == 0 ? std::vector<std::vector<Rational>>{} : d_out.kernel();
    if (d_out.rows() == 0)
      for (int i = 0; i < n; ++i) {
        std::vector<Rational> e(n);
        e[i] = 1;
        kernel.push_back(e);
      }
    std::vector<std::vector<Rational>> frame;
    if (prev != groups.end()) {
      RationalMatrix d_in = m1_block(a, prev->second, idx);
      RationalMatrix reduced = d_in;
      for (int c : reduced.rref_in_place()) {
        std::vector<Rational> col(n);
        for (int r = 0; r < n; ++r) col[r] = d_in(r, c);
        frame.push_back(col);
      }
    }
    Cohomology::DegreePiece piece;
    piece.degree = deg;
    piece.basis = idx;
    piece.kernel_dim = static_cast<int>(kernel.size());
    piece.image_dim = static_cast<int>(frame.size());
    piece.first_rep = h.dim();
    int rank = piece.image_dim;
    for (const auto& z : kernel) {
      frame.push_back(z);
      if (from_columns(frame, n).rank() == rank + 1) {
        ++rank;
        Combination rep;
        for (int r = 0; r < n; ++r)
          if (z[r] != 0) rep[idx[r]] = z[r];
        h.representatives.push_back(rep);
        h.rep_degrees.push_back(deg);
      } else {
        frame.pop_back();
      }
    }
    piece.frame = from_columns(frame, n);
    h.pieces.push_back(std::move(piece));
  }
  return h;
}

std::vector<Rational> Cohomology::project(const Combination& cocycle) const {
  std::vector<Rational> out(representatives.size());
  std::set<int> covered;
  for (const auto& piece : pieces) {
    const int n = static_cast<int>(piece.basis.size());
    std::vector<Rational> z(n);
    bool any = false;
    for (int r = 0; r < n; ++r) {
      auto it = cocycle.find(piece.basis[r]);
      if (it != cocycle.end()) {
        z[r] = it->second;
        any = true;
        covered.insert(piece.basis[r]);
      }
    }
    if (!any) continue;
    auto x = piece.frame.solve(z);
    if (!x) throw std::invalid_argument("projection of a non-cocycle");
    for (int k = piece.image_dim; k < piece.frame.cols(); ++k)
      out[piece.first_rep + k - piece.image_dim] = (*x)[k];
  }
  if (covered.size() != cocycle.size()) throw std::invalid_argument("cocycle index out of range");
  return out;
}

// ---------------------------------------------------------------- transport

RationalMatrix linear_part(const MultilinearTable& f) {
  const int n = f.source()->size();
  RationalMatrix m(f.target()->size(), n);
  for (int j = 0; j < n; ++j)
    for (const auto& [i, v] : f.at({j})) m(i, j) = v;
  return m;
}

Combination apply_matrix(const RationalMatrix& m, const Combination& v) {
  Combination out;
  for (const auto& [j, x] : v)
    for (int i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0) add_term(out, i, m(i, j) * x);
  return out;
}

std::vector<Combination> apply_blocks(const MultilinearTable& f, const Tuple& t, const std::vector<int>& parts) {
  std::vector<Combination> out;
  out.reserve(parts.size());
  int pos = 0;
  for (int len : parts) {
    out.push_back(f.at(slice(t, pos, len)));
    pos += len;
  }
  return out;
}

AInfAlgebra transport_via_iso(const AInfAlgebra& b, const MultilinearTable& f, int arity_cap) {
  const auto& basis = *b.basis();
  if (f.shifted_degree() != 0) throw StructureError("morphism components must have shifted degree 0");
  auto inv = linear_part(f).inverse();
  if (!inv) throw StructureError("f_1 is singular");
  MultilinearTable ma(b.basis(), b.basis(), 1);
  std::set<int> shifted_present;
  for (int i = 0; i < basis.size(); ++i) shifted_present.insert(basis.shifted(i));
  for (int n = 1; n <= arity_cap; ++n) {
    std::vector<std::pair<Tuple, Combination>> found;
    for_each_tuple(basis.size(), n, [&](const Tuple& t) {
      if (!shifted_present.count(basis.shifted_sum(t) + 1)) return;
      Combination rhs;
      for_each_composition(n, [&](const std::vector<int>& parts) {
        if (static_cast<int>(parts.size()) > b.arity_cap()) return;
        auto args = apply_blocks(f, t, parts);
        add_scaled(rhs, b.m().apply(args), 1);
      });
      int prefix = 0;
      for (int r = 0; r < n; ++r) {
        for (int j = 1; r + j <= n && j < n; ++j) {
          const Combination& inner = ma.at(slice(t, r, j));
          if (inner.empty()) continue;
          std::vector<Combination> args;
          for (int s = 0; s < r; ++s) args.push_back(basis_vector(t[s]));
          args.push_back(inner);
          for (int s = r + j; s < n; ++s) args.push_back(basis_vector(t[s]));
          add_scaled(rhs, f.apply(args), -sign_of(prefix));
        }
        prefix += basis.shifted(t[r]);
      }
      Combination v = apply_matrix(*inv, rhs);
      if (!v.empty()) found.emplace_back(t, std::move(v));
    });
    for (auto& [t, v] : found) ma.set(t, v);
  }
  return AInfAlgebra(b.basis(), std::move(ma), arity_cap);
}

}  // namespace ainf
