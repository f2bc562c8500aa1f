#pragma once

#include <cstddef>

#include "ssbranch/numeric.hpp"

namespace ssbranch {

/// Lattice basis stored as a list of columns (lattice = integer combinations
/// of the columns). `cols[j]` is column j; all columns share one length.
struct Basis {
  RatMatrix cols;

  std::size_t dim() const { return cols.size(); }
  std::size_t ambient() const { return cols.empty() ? 0 : cols.front().size(); }

  static Basis from_integer_columns(const IntMatrix& cols);

  bool operator==(const Basis&) const = default;
};

/// Gram-Schmidt coefficients: mu[i][j] for j < i, and ||b*_i||^2.
struct GsoData {
  RatMatrix mu;
  RatVector norms_sq;
};

struct ReductionStats {
  std::size_t swaps = 0;
  std::size_t size_reductions = 0;

  bool operator==(const ReductionStats&) const = default;
};

/// Output of `lll_reduce`: reduced columns B' = B U, with U unimodular.
/// `U[i][k]` is the coefficient of input column i in output column k.
struct ReducedBasis {
  Basis basis;
  IntMatrix U;
  IntMatrix U_inv;
  GsoData gso;
  ReductionStats stats;
};

/// Reduction carried out on a Gram matrix only. `gram` is the Gram matrix of
/// the reduced basis, i.e. U^T G U.
struct GramReduction {
  IntMatrix gram;
  IntMatrix U;
  IntMatrix U_inv;
  ReductionStats stats;
};

inline const Rational kDefaultDelta{3, 4};

RatMatrix gram_matrix(const Basis& basis);

/// Throws RankError if the columns are dependent.
GsoData gram_schmidt(const Basis& basis);
GsoData gram_schmidt_from_gram(const RatMatrix& gram);

/// Integral LLL on a positive definite integer Gram matrix. Swaps always hit
/// the lowest index failing the Lovasz condition; size reduction rounds mu to
/// the nearest integer with halves rounded toward zero. U^{-1} is updated
/// alongside U by the inverse elementary operations.
GramReduction lll_reduce_gram(const IntMatrix& gram, const Rational& delta = kDefaultDelta);

ReducedBasis lll_reduce(const Basis& basis, const Rational& delta = kDefaultDelta);

/// Size reduction (|mu_ij| <= 1/2) and the Lovasz condition, exactly.
bool is_reduced(const Basis& basis, const Rational& delta = kDefaultDelta);
bool is_reduced_gso(const GsoData& gso, const Rational& delta = kDefaultDelta);

}  // namespace ssbranch
