#pragma once

#include <functional>
#include <map>
#include <span>
#include <utility>

#include "ainf/algebra.hpp"

namespace ainf {

/// Sparse family ⟨a_1..a_p, v, b_1..b_q | w⟩_{p,q}.
///
/// An entry is keyed by p and the input word (a..., v, b...); its value is the covector in w.
/// Components with p+q ≤ pq_cap are exact, anything beyond the cap is unknown, so checks
/// never look past it. Absent components inside the cap are zero.
class InnerProductMap {
 public:
  using Key = std::pair<int, Tuple>;

  InnerProductMap(BasisPtr basis, int degree, int pq_cap);

  void set(int p, const Tuple& inputs, const Combination& covector);
  void add(int p, const Tuple& inputs, int w, const Rational& c);

  [[nodiscard]] const Combination& covector(int p, const Tuple& inputs) const;
  [[nodiscard]] Rational value(int p, const Tuple& inputs, int w) const;
  /// Word form: the last letter of `word` is w, the module slot sits at position p.
  [[nodiscard]] Rational at_word(int p, const Tuple& word) const;
  /// Multilinear extension in every slot.
  [[nodiscard]] Rational eval(int p, std::span<const Combination> inputs, const Combination& w) const;

  [[nodiscard]] const std::map<Key, Combination>& entries() const { return entries_; }
  [[nodiscard]] int degree() const { return degree_; }
  [[nodiscard]] int pq_cap() const { return pq_cap_; }
  [[nodiscard]] const BasisPtr& basis() const { return basis_; }
  [[nodiscard]] bool has_higher_components() const;

  bool operator==(const InnerProductMap& o) const {
    return degree_ == o.degree_ && pq_cap_ == o.pq_cap_ && entries_ == o.entries_;
  }

 private:
  BasisPtr basis_;
  int degree_;
  int pq_cap_;
  std::map<Key, Combination> entries_;
};

/// Reduced Hochschild-type cochain α₀: components α₀(x_1..x_i)(w), i ≥ 0.
class HochschildCochain {
 public:
  HochschildCochain(BasisPtr basis, int degree);

  void set(const Tuple& inputs, const Combination& covector);
  void add(const Tuple& inputs, int w, const Rational& c);
  [[nodiscard]] const Combination& covector(const Tuple& inputs) const;
  [[nodiscard]] Rational value(const Tuple& inputs, int w) const;
  [[nodiscard]] Rational eval(std::span<const Combination> inputs, const Combination& w) const;

  [[nodiscard]] const std::map<Tuple, Combination>& entries() const { return entries_; }
  [[nodiscard]] int degree() const { return degree_; }
  [[nodiscard]] int max_length() const;
  [[nodiscard]] const BasisPtr& basis() const { return basis_; }

  bool operator==(const HochschildCochain& o) const { return degree_ == o.degree_ && entries_ == o.entries_; }

 private:
  BasisPtr basis_;
  int degree_;
  std::map<Tuple, Combination> entries_;
};

/// Sum of both sides of the bimodule equation on one basis word (zero iff it holds there).
Rational bimodule_residual(const AInfAlgebra& a, const InnerProductMap& phi, int p, const Tuple& word);

/// [i,j]: the module slot carries a_i and the output slot a_j, arguments read cyclically
/// from a_{j+1}, with the Koszul sign of that rotation.
Rational bracket(const InnerProductMap& phi, const Tuple& family, int i, int j);

Report check_bimodule_map(const AInfAlgebra& a, const InnerProductMap& phi, int max_word);
Report check_skew(const InnerProductMap& phi);
Report check_closed(const InnerProductMap& phi, int max_word);
Report check_homological_nondegeneracy(const AInfAlgebra& a, const InnerProductMap& phi);
Report check_unital_bimodule(const InnerProductMap& phi);
/// Σ_r [r+1, r] = 0 over every basis family of length n ≤ max_word.
Report check_cyclic_sum(const InnerProductMap& phi, int max_word);
Report is_shi(const AInfAlgebra& a, const InnerProductMap& phi, int max_word);

InnerProductMap shi_from_cyclic(const CyclicPairing& p, int pq_cap = 5);
/// α̃₀(a, v, b | w) = α₀(a, v, b)(w) - (-1)^{(Σa+|v|')(Σb+|w|')} α₀(b, w, a)(v).
InnerProductMap shi_from_cocycle(const HochschildCochain& alpha, int pq_cap = 5);
/// α₀ vanishes whenever an input is the unit.
Report check_reduced(const HochschildCochain& alpha);

}  // namespace ainf
