#pragma once

#include <string>
#include <vector>

#include "ainf/rational.hpp"

namespace ainf {

/// Element of Q[ε]/(ε^N) ⊗ Q[t]. Both parameters are even, so no signs ever arise.
/// Stored densely as coefficient[ε-power][t-power]; trailing zero t-columns are trimmed.
class ArtinScalar {
 public:
  explicit ArtinScalar(int eps_order = 4);
  static ArtinScalar constant(int eps_order, const Rational& c);
  /// c ε^e t^s.
  static ArtinScalar monomial(int eps_order, int e, int s, const Rational& c);

  [[nodiscard]] int eps_order() const { return n_; }
  [[nodiscard]] int t_degree() const;  ///< -1 for zero
  [[nodiscard]] Rational coefficient(int e, int s) const;
  void add(int e, int s, const Rational& c);

  [[nodiscard]] bool is_zero() const;
  /// No ε^0 part.
  [[nodiscard]] bool nilpotent() const;

  ArtinScalar& operator+=(const ArtinScalar& o);
  ArtinScalar& operator-=(const ArtinScalar& o);
  friend ArtinScalar operator+(ArtinScalar a, const ArtinScalar& b) { return a += b; }
  friend ArtinScalar operator-(ArtinScalar a, const ArtinScalar& b) { return a -= b; }
  friend ArtinScalar operator*(const ArtinScalar& a, const ArtinScalar& b);
  [[nodiscard]] ArtinScalar scaled(const Rational& c) const;

  /// ∫_0^t.
  [[nodiscard]] ArtinScalar integrate_t() const;
  [[nodiscard]] ArtinScalar derivative_t() const;
  [[nodiscard]] ArtinScalar at_t(const Rational& t) const;
  /// Part of t-degree exactly s.
  [[nodiscard]] ArtinScalar t_part(int s) const;

  bool operator==(const ArtinScalar& o) const;

  /// Coefficient rows, ε-power major: row e lists the t-coefficients.
  [[nodiscard]] const std::vector<std::vector<Rational>>& rows() const { return c_; }
  [[nodiscard]] std::string to_string() const;

 private:
  void trim();
  int n_;
  std::vector<std::vector<Rational>> c_;
};

using ArtinVec = std::vector<ArtinScalar>;

}  // namespace ainf
