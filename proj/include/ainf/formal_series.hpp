#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ainf/graded_basis.hpp"
#include "ainf/rational.hpp"

namespace ainf {

/// Formal parameters with their supercommutation parities.
class VariableSet {
 public:
  explicit VariableSet(std::vector<bool> odd, std::vector<std::string> names = {});

  static std::shared_ptr<const VariableSet> from_basis(const GradedBasis& basis, ParityConvention p,
                                                       const std::string& prefix = "x");

  [[nodiscard]] int size() const { return static_cast<int>(odd_.size()); }
  [[nodiscard]] bool odd(int i) const { return odd_[i]; }
  [[nodiscard]] const std::string& name(int i) const { return names_[i]; }

  bool operator==(const VariableSet& o) const { return odd_ == o.odd_; }

 private:
  std::vector<bool> odd_;
  std::vector<std::string> names_;
};

using VarsPtr = std::shared_ptr<const VariableSet>;

/// Sorted multiset of variable indices; odd variables occur at most once.
using Monomial = std::vector<int>;

struct SignedMonomial {
  int sign = 1;
  Monomial monomial;
};

/// Sorts an arbitrary word of variables into canonical order, tracking the sign from
/// transposing odd variables. Empty if an odd variable repeats.
std::optional<SignedMonomial> canonicalize(const VariableSet& vars, std::span<const int> word);

/// Product of two canonical monomials.
std::optional<SignedMonomial> mono_mul(const VariableSet& vars, const Monomial& a, const Monomial& b);

bool monomial_odd(const VariableSet& vars, const Monomial& m);

/// Truncated graded-supercommutative polynomial over Q.
class FormalSeries {
 public:
  FormalSeries(VarsPtr vars, int order_cap);

  static FormalSeries constant(VarsPtr vars, int order_cap, const Rational& c);
  static FormalSeries variable(VarsPtr vars, int order_cap, int i);

  /// Adds c times the (not necessarily canonical) word of variables.
  void add_word(std::span<const int> word, const Rational& c);
  /// Adds c times a monomial already in canonical form.
  void add_canonical(const Monomial& m, const Rational& c);

  [[nodiscard]] const std::map<Monomial, Rational>& terms() const { return terms_; }
  [[nodiscard]] Rational coefficient(const Monomial& m) const;
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] int order_cap() const { return cap_; }
  [[nodiscard]] const VarsPtr& vars() const { return vars_; }

  FormalSeries& operator+=(const FormalSeries& o);
  FormalSeries& operator-=(const FormalSeries& o);
  friend FormalSeries operator+(FormalSeries a, const FormalSeries& b) { return a += b; }
  friend FormalSeries operator-(FormalSeries a, const FormalSeries& b) { return a -= b; }
  friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b);
  [[nodiscard]] FormalSeries scaled(const Rational& c) const;

  /// Negates the odd monomials when flip is set: the sign picked up by moving this
  /// series past an odd symbol.
  [[nodiscard]] FormalSeries twisted(bool flip) const;

  /// Left derivation: the differentiated variable is moved to the front first.
  [[nodiscard]] FormalSeries derivative_left(int i) const;
  /// Right derivation: the differentiated variable is moved to the back first.
  [[nodiscard]] FormalSeries derivative_right(int i) const;

  /// Terms of word length exactly n.
  [[nodiscard]] FormalSeries part(int n) const;
  [[nodiscard]] FormalSeries truncated(int cap) const;
  /// Re-inserts every term through canonicalize(); the identity on valid series.
  [[nodiscard]] FormalSeries renormalized() const;
  /// Splits into even and odd parts.
  [[nodiscard]] FormalSeries parity_part(bool odd) const;

  bool operator==(const FormalSeries& o) const;

  [[nodiscard]] std::string to_string() const;

 private:
  void require_compatible(const FormalSeries& o) const;

  VarsPtr vars_;
  int cap_;
  std::map<Monomial, Rational> terms_;
};

/// Substitutes images[i] for variable i (a ring map when parities agree); truncates at cap.
FormalSeries substitute(const FormalSeries& f, std::span<const FormalSeries> images, VarsPtr target_vars,
                        int cap);

}  // namespace ainf
