#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ainf/graded_basis.hpp"
#include "ainf/linalg.hpp"
#include "ainf/multilinear_table.hpp"
#include "ainf/report.hpp"

namespace ainf {

/// Finite-dimensional A∞-algebra. m_k is stored in the bar convention: every m_k has
/// shifted degree +1 and the Stasheff identity reads
///   Σ (-1)^{|a_1|'+...+|a_r|'} m(a_1..a_r, m_j(a_{r+1}..a_{r+j}), ...) = 0.
/// The structure itself is not assumed valid; check_ainf decides.
class AInfAlgebra {
 public:
  AInfAlgebra(BasisPtr basis, MultilinearTable m, int arity_cap);

  [[nodiscard]] const BasisPtr& basis() const { return basis_; }
  [[nodiscard]] const MultilinearTable& m() const { return m_; }
  [[nodiscard]] int arity_cap() const { return arity_cap_; }
  [[nodiscard]] int dim() const { return basis_->size(); }

  bool operator==(const AInfAlgebra& o) const { return *basis_ == *o.basis_ && m_ == o.m_; }

 private:
  BasisPtr basis_;
  MultilinearTable m_;
  int arity_cap_;
};

/// Bilinear form with ⟨a,b⟩ ≠ 0 only when |a|'+|b|' = degree.
/// Construction enforces homogeneity, skew symmetry ⟨a,b⟩ = -(-1)^{|a|'|b|'}⟨b,a⟩
/// and non-degeneracy.
class CyclicPairing {
 public:
  CyclicPairing(BasisPtr basis, int degree, std::map<std::pair<int, int>, Rational> entries);

  [[nodiscard]] Rational operator()(int a, int b) const;
  /// Bilinear extension.
  [[nodiscard]] Rational eval(const Combination& a, const Combination& b) const;
  [[nodiscard]] int degree() const { return degree_; }
  [[nodiscard]] const BasisPtr& basis() const { return basis_; }
  [[nodiscard]] const std::map<std::pair<int, int>, Rational>& entries() const { return entries_; }

  bool operator==(const CyclicPairing& o) const { return degree_ == o.degree_ && entries_ == o.entries_; }

 private:
  BasisPtr basis_;
  int degree_;
  std::map<std::pair<int, int>, Rational> entries_;
};

/// Signed Stasheff sum on a basis tuple.
Combination stasheff_residual(const AInfAlgebra& a, const Tuple& t);

Report check_ainf(const AInfAlgebra& a, int max_word);
Report check_unit(const AInfAlgebra& a);
/// ⟨m_k(x_1..x_k), x_{k+1}⟩ = (-1)^{|x_1|'(|x_2|'+...+|x_{k+1}|')} ⟨m_k(x_2..x_{k+1}), x_1⟩ for k+1 ≤ max_word.
Report check_cyclic(const AInfAlgebra& a, const CyclicPairing& p, int max_word);

/// H(A, m_1) with lifted representatives.
struct Cohomology {
  struct DegreePiece {
    int degree = 0;
    int kernel_dim = 0;
    int image_dim = 0;
    std::vector<int> basis;  ///< indices of basis elements in this degree
    RationalMatrix frame;    ///< columns: image basis, then representatives (coordinates in `basis`)
    int first_rep = 0;       ///< position of the first representative in the global list
  };

  std::vector<Combination> representatives;
  std::vector<int> rep_degrees;
  std::vector<DegreePiece> pieces;

  [[nodiscard]] int dim() const { return static_cast<int>(representatives.size()); }
  /// Coordinates of the class of a cocycle on the representatives. Throws if not a cocycle.
  [[nodiscard]] std::vector<Rational> project(const Combination& cocycle) const;
};

Cohomology cohomology(const AInfAlgebra& a);

/// Structure on the underlying space of B making f (shifted degree 0, invertible f_1)
/// an A∞-isomorphism A -> B, solved arity by arity. Callers re-verify with check_ainf.
AInfAlgebra transport_via_iso(const AInfAlgebra& b, const MultilinearTable& f, int arity_cap);

/// Matrix of f_1 in the basis, columns indexed by inputs.
RationalMatrix linear_part(const MultilinearTable& f);
Combination apply_matrix(const RationalMatrix& m, const Combination& v);

/// f_{n_1}(block_1), ..., f_{n_l}(block_l) for the consecutive blocks of t given by parts.
std::vector<Combination> apply_blocks(const MultilinearTable& f, const Tuple& t, const std::vector<int>& parts);

}  // namespace ainf
