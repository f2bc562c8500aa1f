#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ssbranch/diophantine.hpp"
#include "ssbranch/instance.hpp"
#include "ssbranch/lll.hpp"
#include "ssbranch/numeric.hpp"

namespace ssbranch {

enum class Method { frank_tardos, lll_rows };

std::string to_string(Method m);
Method method_from_string(const std::string& s);

/// One exactly decided inequality. `lhs`/`rhs` carry the compared values when
/// they are small enough to print; power-cleared checks leave them empty.
struct BoundCheck {
  std::string name;
  bool holds = false;
  std::string lhs;
  std::string rhs;

  bool operator==(const BoundCheck&) const = default;
};

using Provenance = std::variant<ApproxResult, ReductionStats>;

/// a = lambda v + r with v a nonnegative integral direction.
struct Decomposition {
  Method method = Method::frank_tardos;
  IntVector v;
  Rational lambda;
  RatVector r;
  Provenance provenance;
  std::vector<BoundCheck> bounds;
  std::vector<std::string> warnings;

  bool all_bounds_hold() const;

  bool operator==(const Decomposition&) const = default;
};

struct Projection {
  Rational lambda;
  RatVector r;
};

/// lambda = (a.v)/(v.v), r = a - lambda v; r.v = 0.
Projection project_onto(const RatVector& a, const RatVector& v);

struct ParallelismReport {
  Rational sin_sq;
  /// (||r|| / lambda)^2; empty when a is orthogonal to v (lambda = 0).
  std::optional<Rational> ratio_sq;
  /// Bracket of f(a) = 2^(n/4) / ||a||^(1/n).
  Bracket f_a;
};

ParallelismReport parallelism(std::span<const Integer> a, std::span<const Integer> v);

Bracket f_bracket(std::span<const Integer> a);

/// Direction from ||a||_inf-normalised diophantine approximation:
/// lambda = ||a||_inf / q, r = a - lambda v. Needs n >= 10 and
/// ||a||_inf >= 2^(2n^2); verifies ||v||_1 <= 2^(2n^2),
/// ||r||_1/lambda <= 2^-(n+2) and lambda >= 2^(n+2).
Decomposition decompose_ft(const Instance& inst);

struct NearParallelDirection {
  IntVector v;
  ReductionStats stats;
  bool mixed_signs = false;
};

/// Last row of U^{-1} where the columns of (a; I) U are LLL reduced, negated
/// if that makes its coordinate sum positive. No density gate.
NearParallelDirection near_parallel_direction(std::span<const Integer> a);

/// The three reduction-method inequalities in power-cleared form.
std::vector<BoundCheck> near_parallel_checks(std::span<const Integer> a, std::span<const Integer> v,
                                             const Rational& lambda, const RatVector& r);

/// Reduction-based direction with projection (lambda, r). Needs n >= 2 and
/// ||a||_inf^2 >= 2^(n(n+2)). A mixed-sign direction is returned with a
/// warning instead of an error.
Decomposition decompose_lll(const Instance& inst);

/// Dispatches on `method`; lll_rows falls back to frank_tardos when the
/// reduction direction has mixed signs.
Decomposition decompose(const Instance& inst, Method method);

/// a = lambda v + r, coordinate-wise.
bool satisfies_identity(std::span<const Integer> a, const Decomposition& dec);

/// lambda >= 1 and ||r||_1 / lambda < 1.
bool satisfies_branching_hypotheses(const Decomposition& dec);

inline constexpr const char* kMixedSignWarning = "mixed_sign_direction";

}  // namespace ssbranch
