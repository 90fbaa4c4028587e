#pragma once

#include <optional>
#include <random>

#include "ainf/artin.hpp"
#include "ainf/inner_product.hpp"
#include "ainf/potentials.hpp"

namespace ainf {

/// Degree-0 gauge parameter c, start b0 and the exact solution b(t) of
///   d/dt b(t) = Σ_k Σ_slots m_k(b, ..., c, ..., b),  b(0) = b0.
struct GaugePath {
  ArtinVec b0;
  ArtinVec c;
  ArtinVec b;
  int iterations = 0;
};

ArtinVec zero_artin(int dim, int eps_order);
/// Σ (coefficient)*label over the nonzero components.
std::string render_artin(const GradedBasis& basis, const ArtinVec& v);
/// Reduction to Q[ε]/ε^eps_order; raising the order pads with zeros.
ArtinVec truncate_eps(const ArtinVec& v, int eps_order);
/// Multilinear extension to Artinian coefficients (no signs: scalars are even).
ArtinVec apply_artin(const MultilinearTable& m, std::span<const ArtinVec> args);

/// Σ_k m_k(b, ..., b); finite because b lies in (ε).
ArtinVec mc_residual(const AInfAlgebra& a, const ArtinVec& b);
Report mc_check(const AInfAlgebra& a, const ArtinVec& b);

/// Right side of the gauge ODE at the given b.
ArtinVec gauge_velocity(const AInfAlgebra& a, const ArtinVec& b, const ArtinVec& c);
/// ε-adic Picard iteration; throws std::invalid_argument for non-nilpotent or misplaced input.
GaugePath gauge_flow(const AInfAlgebra& a, const ArtinVec& b0, const ArtinVec& c);
/// Re-verifies the ODE identically in t and that every b(t) is Maurer-Cartan.
Report check_gauge_path(const AInfAlgebra& a, const GaugePath& path);

/// Σ_k ⟨b, b^k | I⟩ by direct evaluation.
ArtinScalar eval_psi(const AInfAlgebra& a, const InnerProductMap& phi, const ArtinVec& b);
/// Substitutes the components of b into a Ψ series (degree-1 variables are even).
ArtinScalar eval_series(const FormalSeries& psi, const ArtinVec& b);
/// Ψ(b(t)) must not depend on t.
Report check_gauge_invariance(const AInfAlgebra& a, const InnerProductMap& phi, const GaugePath& path);

/// ρ(α₀)(b) = Σ_{i≥1} α₀(b, ..., b)(I).
ArtinScalar holonomy(const HochschildCochain& alpha, const ArtinVec& b);

/// Small random rational with numerator in [-3, 3] and denominator in {1, 2, 3}.
Rational random_rational(std::mt19937_64& rng, bool nonzero = false);
/// Solves the MC equation order by order from a random first-order cocycle.
std::optional<ArtinVec> random_mc_element(const AInfAlgebra& a, int eps_order, std::mt19937_64& rng);
/// f_1 = id plus at most max_entries random f_2, f_3 components that avoid the unit, so the
/// transported algebra stays strictly unital.
MultilinearTable random_unipotent_iso(const BasisPtr& basis, int max_entries, std::mt19937_64& rng);
/// Random degree-0 element with coefficients in (ε), optionally linear in t.
ArtinVec random_gauge_parameter(const AInfAlgebra& a, int eps_order, std::mt19937_64& rng, bool t_dependent);

}  // namespace ainf
