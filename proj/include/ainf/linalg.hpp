#pragma once

#include <optional>
#include <vector>

#include "ainf/rational.hpp"

namespace ainf {

/// Dense matrix over Q, row-major. Only materialized for small linear-algebra steps.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

  static RationalMatrix identity(int n);

  [[nodiscard]] int rows() const { return rows_; }
  [[nodiscard]] int cols() const { return cols_; }
  Rational& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  bool operator==(const RationalMatrix& o) const = default;

  /// Reduced row echelon form; returns pivot columns.
  std::vector<int> rref_in_place();
  [[nodiscard]] int rank() const;
  /// Basis of the null space, one column vector per entry.
  [[nodiscard]] std::vector<std::vector<Rational>> kernel() const;
  [[nodiscard]] std::optional<RationalMatrix> inverse() const;
  /// Some solution x of A x = b, if one exists.
  [[nodiscard]] std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace ainf
