#pragma once

#include <cstddef>

#include "ssbranch/lll.hpp"
#include "ssbranch/numeric.hpp"

namespace ssbranch {

/// Simultaneous approximation q*alpha ~ v.
///
/// Guarantees ||q alpha - v||_inf <= 1/N and 1 <= q <= 2^(n(n+1)/4) N^n.
/// The q bound is irrational for n = 1, 2 (mod 4), so it is kept in
/// fourth-power form: q^4 <= 2^(n(n+1)) N^(4n).
struct ApproxResult {
  Integer q;
  IntVector v;
  Integer N;
  Rational err_inf;
  Integer q_bound_pow4;

  bool error_within_bound() const { return err_inf <= Rational(1, N); }
  bool q_within_bound() const { return q >= 1 && ipow(q, 4) <= q_bound_pow4; }

  bool operator==(const ApproxResult&) const = default;
};

/// Lattice spanned by e_1, ..., e_n (padded with a zero last coordinate) and
/// (alpha_1, ..., alpha_n, c), with c^2 = 2^(-n(n+1)/2) N^(-2(n+1)).
///
/// The corner c itself may be irrational, so the lattice is kept in Gram
/// form: `gram` = scale * (exact Gram matrix), with `scale` the least common
/// denominator of the exact Gram entries.
struct ApproxLattice {
  RatVector alpha;
  Integer N;
  Rational corner_sq;
  Integer scale;
  IntMatrix gram;

  std::size_t dim() const { return gram.size(); }
};

/// 2^(n(n+1)) N^(4n), the fourth power of the q bound.
Integer approx_q_bound_pow4(std::size_t n, const Integer& N);

ApproxLattice build_approx_lattice(const RatVector& alpha, const Integer& N);

ApproxResult dioph_approx(const RatVector& alpha, const Integer& N);

/// N = n 2^(n+2), checked against the three window inequalities exactly.
/// Throws DomainError for n <= 9, where the window is empty.
Integer choose_N(std::size_t n);

/// The window inequalities in fraction-free form:
///   n^4 2^(n(n+1)) N^(4n) <= 2^(8n^2)      (||v||_1 bound)
///   n 2^(n+2) <= N                          (||r||_1 / lambda bound)
///   2^(4n+8) N^(4n) <= 2^(8n^2 - n(n+1))    (lambda bound)
struct NWindowCheck {
  bool v_norm = false;
  bool residual = false;
  bool lambda = false;

  bool all() const { return v_norm && residual && lambda; }
};

NWindowCheck check_N_window(std::size_t n, const Integer& N);

}  // namespace ssbranch
