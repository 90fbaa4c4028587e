#pragma once

#include <memory>

#include "ainf/algebra.hpp"
#include "ainf/inner_product.hpp"

namespace ainf {

using AlgebraPtr = std::shared_ptr<const AInfAlgebra>;

/// A∞-morphism f: source -> target; the components f_k all have shifted degree 0, so the
/// morphism equation Σ ± f(.., m(..), ..) = Σ m(f(..), ..., f(..)) only carries signs on the left.
class AInfMorphism {
 public:
  AInfMorphism(AlgebraPtr source, AlgebraPtr target, MultilinearTable f, int arity_cap);

  static AInfMorphism identity(AlgebraPtr a);

  [[nodiscard]] const AlgebraPtr& source() const { return source_; }
  [[nodiscard]] const AlgebraPtr& target() const { return target_; }
  [[nodiscard]] const MultilinearTable& f() const { return f_; }
  [[nodiscard]] int arity_cap() const { return arity_cap_; }

 private:
  AlgebraPtr source_;
  AlgebraPtr target_;
  MultilinearTable f_;
  int arity_cap_;
};

/// Left side minus right side of the morphism equation on one basis tuple.
Combination morphism_residual(const AInfMorphism& f, const Tuple& t);

Report check_morphism(const AInfMorphism& f, int max_word);
/// Whether f_1 induces an isomorphism on cohomology.
bool is_quasi_isomorphism(const AInfMorphism& f);

/// Two-sided inverse up to the arity cap. Throws StructureError if f_1 is singular.
AInfMorphism invert_iso(const AInfMorphism& f);
/// (g ∘ f)_n = Σ g_l(f_{i_1}, ..., f_{i_l}), truncated at the smaller cap.
AInfMorphism compose(const AInfMorphism& g, const AInfMorphism& f);

/// Pull-back of an inner product map on the target to the source, exact for p+q below
/// min(pq cap of phi, arity cap of f - 1).
InnerProductMap pullback_shi(const AInfMorphism& f, const InnerProductMap& phi);

/// Columns of f_1^{-1}. Throws StructureError if f_1 is singular.
std::vector<Combination> inverse_columns(const MultilinearTable& f);

}  // namespace ainf
