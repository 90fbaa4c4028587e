#include "ainf/linalg.hpp"

#include <stdexcept>

namespace ainf {

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  RationalMatrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

std::vector<int> RationalMatrix::rref_in_place() {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int p = row;
    while (p < rows_ && (*this)(p, col) == 0) ++p;
    if (p == rows_) continue;
    if (p != row)
      for (int j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(row, j));
    Rational inv = 1 / (*this)(row, col);
    for (int j = col; j < cols_; ++j) (*this)(row, j) *= inv;
    for (int r = 0; r < rows_; ++r) {
      if (r == row || (*this)(r, col) == 0) continue;
      Rational f = (*this)(r, col);
      for (int j = col; j < cols_; ++j) (*this)(r, j) -= f * (*this)(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int RationalMatrix::rank() const {
  RationalMatrix c(*this);
  return static_cast<int>(c.rref_in_place().size());
}

std::vector<std::vector<Rational>> RationalMatrix::kernel() const {
  RationalMatrix r(*this);
  auto pivots = r.rref_in_place();
  std::vector<bool> is_pivot(cols_, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols_);
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(static_cast<int>(k), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalMatrix> RationalMatrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  const int n = rows_;
  RationalMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = aug.rref_in_place();
  if (static_cast<int>(pivots.size()) < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  RationalMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::optional<std::vector<Rational>> RationalMatrix::solve(const std::vector<Rational>& b) const {
  if (static_cast<int>(b.size()) != rows_) throw std::invalid_argument("rhs size mismatch");
  RationalMatrix aug(rows_, cols_ + 1);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_) = b[i];
  }
  auto pivots = aug.rref_in_place();
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  std::vector<Rational> x(cols_);
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(static_cast<int>(k), cols_);
  return x;
}

}  // namespace ainf
