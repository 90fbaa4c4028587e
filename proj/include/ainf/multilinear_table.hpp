#pragma once

#include <map>
#include <span>
#include <vector>

#include "ainf/graded_basis.hpp"
#include "ainf/rational.hpp"

namespace ainf {

using Tuple = std::vector<int>;

/// Sparse structure constants of a family of multilinear maps A^{⊗k} -> B, k >= 1.
///
/// Every entry is homogeneous in shifted degrees: |output|' = Σ|input|' + shifted_degree.
/// For m_k (unshifted degree 2-k) the shifted degree is 1; for f_k (unshifted 1-k) it is 0.
class MultilinearTable {
 public:
  MultilinearTable(BasisPtr source, BasisPtr target, int shifted_degree);

  /// Replaces the value on an input tuple. Throws StructureError on degree mismatch.
  void set(const Tuple& inputs, const Combination& value);
  void add(const Tuple& inputs, int output, const Rational& c);
  void add(const Tuple& inputs, const Combination& value, const Rational& c = 1);

  [[nodiscard]] const Combination& at(const Tuple& inputs) const;
  [[nodiscard]] const std::map<Tuple, Combination>& arity(int k) const;
  [[nodiscard]] int max_arity() const;
  [[nodiscard]] std::size_t entry_count() const;

  /// Multilinear extension to linear combinations.
  [[nodiscard]] Combination apply(std::span<const Combination> args) const;

  [[nodiscard]] int shifted_degree() const { return shifted_degree_; }
  [[nodiscard]] const BasisPtr& source() const { return source_; }
  [[nodiscard]] const BasisPtr& target() const { return target_; }

  /// Visits every stored entry in deterministic (arity, tuple) order.
  template <class F>
  void for_each(F&& f) const {
    for (const auto& [k, entries] : by_arity_)
      for (const auto& [t, v] : entries) f(t, v);
  }

  [[nodiscard]] MultilinearTable truncated(int max_arity) const;
  bool operator==(const MultilinearTable& o) const { return by_arity_ == o.by_arity_; }

 private:
  void check_entry(const Tuple& inputs, const Combination& value) const;

  BasisPtr source_;
  BasisPtr target_;
  int shifted_degree_;
  std::map<int, std::map<Tuple, Combination>> by_arity_;
};

/// Calls f(tuple, coefficient) for every basis tuple in the product of supports.
template <class F>
void expand_product(std::span<const Combination> args, F&& f) {
  const std::size_t n = args.size();
  for (const auto& a : args)
    if (a.empty()) return;
  std::vector<Combination::const_iterator> it(n);
  for (std::size_t i = 0; i < n; ++i) it[i] = args[i].begin();
  Tuple t(n);
  while (true) {
    Rational c = 1;
    for (std::size_t i = 0; i < n; ++i) {
      t[i] = it[i]->first;
      c *= it[i]->second;
    }
    f(static_cast<const Tuple&>(t), static_cast<const Rational&>(c));
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (++it[k] != args[k].end()) break;
      it[k] = args[k].begin();
      if (k == 0) return;
    }
    if (n == 0) return;
  }
}

inline Combination basis_vector(int i) { return Combination{{i, Rational(1)}}; }

/// Calls f(tuple) for every tuple in {0..dim-1}^length, lexicographically.
template <class F>
void for_each_tuple(int dim, int length, F&& f) {
  if (length < 0 || (dim <= 0 && length > 0)) return;
  Tuple t(length, 0);
  while (true) {
    f(static_cast<const Tuple&>(t));
    int k = length;
    while (k > 0) {
      --k;
      if (++t[k] < dim) break;
      t[k] = 0;
      if (k == 0) return;
    }
    if (length == 0) return;
  }
}

/// Calls f(parts) for every ordered composition of n into positive parts.
template <class F>
void for_each_composition(int n, F&& f) {
  std::vector<int> parts;
  auto rec = [&](auto& self, int remaining) -> void {
    if (remaining == 0) {
      f(static_cast<const std::vector<int>&>(parts));
      return;
    }
    for (int p = 1; p <= remaining; ++p) {
      parts.push_back(p);
      self(self, remaining - p);
      parts.pop_back();
    }
  };
  if (n > 0) rec(rec, n);
}

/// Sub-tuple [begin, begin+len).
inline Tuple slice(const Tuple& t, int begin, int len) {
  return Tuple(t.begin() + begin, t.begin() + begin + len);
}

/// Renders a combination with basis labels, e.g. "2*theta - 1/3*u".
std::string render(const GradedBasis& basis, const Combination& c);

}  // namespace ainf
