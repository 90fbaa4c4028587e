#pragma once

#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ainf {

/// Raised when a structure violates degree bookkeeping or basic well-formedness.
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Degree after the suspension shift, |x|' = deg x - 1.
constexpr int shifted_degree(int degree) { return degree - 1; }

/// Sign of transposing two adjacent blocks of shifted degrees.
int koszul_sign(std::span<const int> block_a, std::span<const int> block_b);

/// How the supercommutation parity of the formal variable x_i is derived from e_i.
enum class ParityConvention {
  shifted,    ///< parity(x_i) = |e_i|' mod 2, so the generic element has shifted degree 0
  unshifted,  ///< parity(x_i) = deg e_i mod 2
};

std::string to_string(ParityConvention p);
ParityConvention parse_parity(const std::string& s);

struct BasisEntry {
  std::string label;
  int degree = 0;
};

/// Ordered labelled basis of a finite-dimensional graded vector space.
class GradedBasis {
 public:
  GradedBasis(std::vector<BasisEntry> entries, std::optional<int> unit_index = std::nullopt);

  [[nodiscard]] int size() const { return static_cast<int>(entries_.size()); }
  [[nodiscard]] const BasisEntry& entry(int i) const { return entries_.at(i); }
  [[nodiscard]] const std::string& label(int i) const { return entries_.at(i).label; }
  [[nodiscard]] int degree(int i) const { return entries_[i].degree; }
  [[nodiscard]] int shifted(int i) const { return entries_[i].degree - 1; }
  [[nodiscard]] std::optional<int> unit() const { return unit_; }
  [[nodiscard]] std::optional<int> index_of(const std::string& label) const;
  [[nodiscard]] const std::vector<BasisEntry>& entries() const { return entries_; }

  /// Parity of the formal variable attached to basis element i.
  [[nodiscard]] bool variable_odd(int i, ParityConvention p) const;

  /// Sum of shifted degrees over a tuple of basis indices.
  [[nodiscard]] int shifted_sum(std::span<const int> tuple) const;

  /// Indices with shifted degree equal to the argument.
  [[nodiscard]] std::vector<int> of_shifted_degree(int d) const;

  [[nodiscard]] std::string describe(std::span<const int> tuple) const;

  bool operator==(const GradedBasis& other) const;

 private:
  std::vector<BasisEntry> entries_;
  std::optional<int> unit_;
};

using BasisPtr = std::shared_ptr<const GradedBasis>;

}  // namespace ainf
