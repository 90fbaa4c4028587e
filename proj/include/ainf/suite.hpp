#pragma once

#include <cstdint>
#include <set>
#include <string>

#include "ainf/document.hpp"
#include "ainf/potentials.hpp"

namespace ainf {

struct SuiteOptions {
  int max_word = 6;
  int order = 6;          ///< truncation N_max for potentials
  int fundlem_order = 5;  ///< largest N in the fraction-free derivative check
  std::uint64_t seed = 1;
  int random_gauge = 5;   ///< random (b0, c) pairs per unital shi
  int random_mc = 5;      ///< random MC elements per cochain
  ParityConvention parity = kDefaultParity;
  DerivativeSide side = DerivativeSide::right;
};

/// Structure checks: ainf, unit, cyclic, and the inner product conditions when phi is given.
Report validate(const AlgebraDocument& doc, const SuiteOptions& opt);
/// Both the document's gauge data and seeded random pairs.
Report gauge_check(const AlgebraDocument& doc, const SuiteOptions& opt);
/// ρ(α₀)(b) against Ψ of the cocycle's inner product, for document and random MC elements.
Report holonomy_check(const AlgebraDocument& doc, const SuiteOptions& opt);
/// Morphism equations and, when the source carries a pairing, Φ_source = h*Φ.
Report pullback_check(const AlgebraDocument& doc, const std::string& morphism_id, const SuiteOptions& opt);
/// Potential identities for the document's inner product.
Report potential_checks(const AlgebraDocument& doc, const SuiteOptions& opt);
Report report_all(const AlgebraDocument& doc, const SuiteOptions& opt);

/// Checks a negative control is judged on: validate plus the ungated gauge and holonomy sweeps.
std::set<std::string> control_failures(const AlgebraDocument& doc, const SuiteOptions& opt);

/// Names of failing direct children.
std::set<std::string> failing_checks(const Report& r);

}  // namespace ainf
