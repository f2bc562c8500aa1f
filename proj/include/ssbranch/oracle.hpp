#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ssbranch/branching.hpp"
#include "ssbranch/numeric.hpp"

namespace ssbranch {

struct FeasibilityAnswer {
  Integer beta;
  bool feasible = false;
  /// 0/1 vector with a . witness = beta, present iff feasible.
  std::optional<std::vector<int>> witness;
};

inline constexpr std::size_t kMaxFeasibleN = 32;
inline constexpr std::size_t kMaxSumSetN = 24;
inline constexpr std::size_t kMaxGoodClaimN = 10;
inline constexpr unsigned long kMaxGoodClaimTotal = 10'000;
inline constexpr std::size_t kMaxCor1ExactN = 20;
inline constexpr std::uint64_t kDefaultBetaCap = 10'000'000;

/// Meet in the middle over the two halves of a; n <= 32.
FeasibilityAnswer feasible(const IntVector& a, const Integer& beta);

/// Sorted distinct subset sums of a; n <= 24.
IntVector all_feasible_sums(const IntVector& a);

struct GoodClaimResult {
  bool equal = true;
  /// Right-hand sides where the definition and the interval union disagree.
  IntVector discrepancies;
};

/// For every beta in [0, ||a||_1], compares membership in G(a, v) (via the
/// LP range of v x) with membership in a good interval.
GoodClaimResult check_good_claim(const IntVector& a, const IntVector& v);

struct Cor1Report {
  CoverageMode mode = CoverageMode::exact;
  Integer infeasible_count;
  Integer certified_infeasible_count;
  /// certified / infeasible; 1 when nothing is infeasible.
  Rational fraction;
  /// 1 - 1/2^n
  Rational bound;
  std::uint64_t sample_size = 0;
  std::optional<std::uint64_t> seed;
  /// Sampled mode: uncertified draws were decided by the exhaustive oracle.
  bool cross_checked = false;
  bool meets_bound = false;

  bool operator==(const Cor1Report&) const = default;
};

struct Cor1Options {
  CoverageMode mode = CoverageMode::exact;
  std::uint64_t sample_size = 10'000;
  std::uint64_t seed = 0;
  std::uint64_t beta_cap = kDefaultBetaCap;
};

Cor1Report cor1_report(const IntVector& a, const IntVector& v, const Cor1Options& options);

}  // namespace ssbranch
