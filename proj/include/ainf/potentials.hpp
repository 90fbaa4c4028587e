#pragma once

#include <span>
#include <string>
#include <vector>

#include "ainf/formal_series.hpp"
#include "ainf/inner_product.hpp"
#include "ainf/morphism.hpp"

namespace ainf {

/// Parity rule used unless a caller asks otherwise. The variable x_i takes the parity of
/// the shifted degree of e_i, so the generic element x = Σ e_i x_i has shifted degree 0.
inline constexpr ParityConvention kDefaultParity = ParityConvention::shifted;

enum class Provenance { cyclic, shi, psi, psi_nofrac, pullback };
std::string to_string(Provenance p);

struct PotentialSeries {
  FormalSeries series;
  Provenance provenance;
  int order_cap;
};

/// Element Σ e_i λ_i of A ⊗ (formal series), scalars written to the right.
using SeriesVec = std::vector<FormalSeries>;

/// Evaluates multilinear maps on series-valued arguments with the scalar extraction rule
///   F(e_{i_1}λ_1, ..., e_{i_k}λ_k) = ± F(e_{i_1}, ..., e_{i_k}) λ_1 ⋯ λ_k,
/// where the sign comes from moving each λ_t right past e_{i_{t+1}}, ..., e_{i_k}.
class SeriesContext {
 public:
  SeriesContext(BasisPtr basis, ParityConvention parity, int cap, const std::string& prefix = "x");

  [[nodiscard]] const VarsPtr& vars() const { return vars_; }
  [[nodiscard]] int cap() const { return cap_; }
  [[nodiscard]] ParityConvention parity() const { return parity_; }
  [[nodiscard]] const GradedBasis& basis() const { return *basis_; }

  [[nodiscard]] FormalSeries zero_series() const { return FormalSeries(vars_, cap_); }
  [[nodiscard]] SeriesVec generic() const;
  [[nodiscard]] SeriesVec constant(const Combination& c) const;
  [[nodiscard]] SeriesVec zero() const;

  [[nodiscard]] SeriesVec apply(const MultilinearTable& m, std::span<const SeriesVec> args) const;
  /// m_k(x, ..., x).
  [[nodiscard]] SeriesVec power(const MultilinearTable& m, int k, const SeriesVec& x) const;
  [[nodiscard]] FormalSeries pair(const CyclicPairing& p, const SeriesVec& a, const SeriesVec& b) const;
  [[nodiscard]] FormalSeries pair(const InnerProductMap& phi, int p, std::span<const SeriesVec> inputs,
                                  const SeriesVec& w) const;

 private:
  [[nodiscard]] FormalSeries product(std::span<const SeriesVec> slots, const Tuple& t) const;

  BasisPtr basis_;
  ParityConvention parity_;
  int cap_;
  VarsPtr vars_;
};

/// Σ_k 1/(k+1) ⟨m_k(x, ..., x), x⟩ up to word length n_max.
PotentialSeries potential_cyclic(const AInfAlgebra& a, const CyclicPairing& p, int n_max,
                                 ParityConvention parity = kDefaultParity);
/// Φ_N = 1/(N+1) Σ_{p+q+k=N} ⟨x^p, m_k(x^k), x^q | x⟩ (word length N+1).
FormalSeries potential_shi_part(const AInfAlgebra& a, const InnerProductMap& phi, int n, const SeriesContext& ctx);
PotentialSeries potential_shi(const AInfAlgebra& a, const InnerProductMap& phi, int n_max,
                              ParityConvention parity = kDefaultParity);
/// Σ 1/(p+q+1) ⟨x^p, x, x^q | I⟩.
PotentialSeries potential_psi(const AInfAlgebra& a, const InnerProductMap& phi, int n_max,
                              ParityConvention parity = kDefaultParity);
/// Σ_k ⟨x, x^k | I⟩.
PotentialSeries psi_nofrac(const AInfAlgebra& a, const InnerProductMap& phi, int n_max,
                           ParityConvention parity = kDefaultParity);

/// x_i ↦ Σ_k h_k(y, ..., y)_i for h: B -> A, re-truncated at n_max. Variables of the result are y.
PotentialSeries pullback_potential(const PotentialSeries& phi_a, const AInfMorphism& h, int n_max,
                                   ParityConvention parity = kDefaultParity);

enum class DerivativeSide { left, right };
std::string to_string(DerivativeSide s);

/// Σ_{p+q+k=N} ⟨x^p, m_k(x^k), x^q | e_i⟩.
FormalSeries fundlem_rhs(const AInfAlgebra& a, const InnerProductMap& phi, int i, int n, const SeriesContext& ctx);
/// ∂Φ_N/∂x_i against the fraction-free right side.
Report check_fundlem(const AInfAlgebra& a, const InnerProductMap& phi, int i, int n,
                     ParityConvention parity = kDefaultParity, DerivativeSide side = DerivativeSide::right);
/// All variables, 1 ≤ N ≤ n_max.
Report check_fundlem_all(const AInfAlgebra& a, const InnerProductMap& phi, int n_max,
                         ParityConvention parity = kDefaultParity, DerivativeSide side = DerivativeSide::right);

/// Coefficientwise comparison of two series, reported per differing monomial.
Report compare_series(const std::string& check, const FormalSeries& lhs, const FormalSeries& rhs);

}  // namespace ainf
