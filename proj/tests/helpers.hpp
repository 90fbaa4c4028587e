#pragma once

#include <doctest.h>

#include "ainf/corpus.hpp"
#include "ainf/deformation.hpp"
#include "ainf/suite.hpp"

namespace ainf::test {

using Q = Rational;

inline BasisPtr basis(std::vector<BasisEntry> e, std::optional<int> unit = std::nullopt) {
  return std::make_shared<const GradedBasis>(std::move(e), unit);
}

inline AlgebraPtr algebra(const BasisPtr& b, MultilinearTable m, int cap = 6) {
  return std::make_shared<const AInfAlgebra>(b, std::move(m), cap);
}

/// Variables named x0, x1, ... with the given parities.
inline VarsPtr vars(std::vector<bool> odd) { return std::make_shared<const VariableSet>(std::move(odd)); }

inline FormalSeries monomial(const VarsPtr& v, int cap, std::vector<int> word, const Rational& c = 1) {
  FormalSeries s(v, cap);
  s.add_word(word, c);
  return s;
}

inline MultilinearTable identity_table(const BasisPtr& b) {
  MultilinearTable f(b, b, 0);
  for (int i = 0; i < b->size(); ++i) f.add({i}, i, 1);
  return f;
}

inline bool all_zero(const ArtinVec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace ainf::test
