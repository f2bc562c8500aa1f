#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ssbranch/numeric.hpp"

namespace ssbranch {

enum class Sense { min, max };

/// Optimum of a one-constraint LP together with an optimal vertex
/// (at most one fractional coordinate).
struct LpExtreme {
  Rational value;
  RatVector arg;
};

/// Proof that a x = beta has no 0/1 solution: over
/// P = {x : a x = beta, 0 <= x <= e} the form v x stays in (ell, ell + 1).
struct Certificate {
  Integer beta;
  Integer ell;
  Rational vmin;
  Rational vmax;
  RatVector arg_min;
  RatVector arg_max;

  bool operator==(const Certificate&) const = default;
};

enum class CertifyStatus { certified, no_certificate, trivially_infeasible, trivially_infeasible_gcd };

std::string to_string(CertifyStatus s);
CertifyStatus certify_status_from_string(const std::string& s);

struct CertifyOutcome {
  CertifyStatus status = CertifyStatus::no_certificate;
  Integer beta;
  std::optional<Certificate> certificate;
  /// LP range of v x, present whenever beta is in [0, ||a||_1].
  std::optional<Rational> vmin;
  std::optional<Rational> vmax;
};

struct Interval {
  Rational lo;
  Rational hi;

  bool operator==(const Interval&) const = default;
};

/// Bad intervals [min(a,k), max(a,k)] for k in [k_lo, k_hi] and good
/// intervals (max(a,k), min(a,k+1)) for k in [k_lo, k_hi).
struct IntervalCover {
  Integer k_lo;
  Integer k_hi;
  std::vector<Interval> bad;
  std::vector<Interval> good;
  /// min(a,k) <= max(a,k) < min(a,k+1) along the whole range.
  bool interlaced = false;
  /// Every good interval is at least lambda - ||r||_1 long.
  bool good_lengths_ok = false;
  Rational length_floor;
  /// Full range only: first bad starts at 0 and last bad ends at ||a||_1.
  std::optional<bool> partitions_range;

  bool operator==(const IntervalCover&) const = default;
};

enum class CoverageMode { exact, sampled };

std::string to_string(CoverageMode m);
CoverageMode coverage_mode_from_string(const std::string& s);

struct CoverageStats {
  CoverageMode mode = CoverageMode::exact;
  /// Exact: integers in good / bad intervals of [0, ||a||_1].
  /// Sampled: certified / uncertified draws.
  Integer g;
  Integer b;
  Rational bad_fraction;
  /// 2 (||r||_1 + 1) / lambda
  Rational coverage_bound;
  /// 1 / 2^n
  Rational two_pow_n_bound;
  std::uint64_t sample_size = 0;
  std::optional<std::uint64_t> seed;
  /// Exact: bad_fraction <= coverage_bound. Sampled: the 10x + 3 sigma rule.
  bool within_bound = false;

  bool operator==(const CoverageStats&) const = default;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

/// One-constraint LPs and certificates for a fixed pair (a, v). Sort orders
/// are computed once; every comparison is exact (cross-multiplied ratios,
/// ties by smaller index).
class Brancher {
 public:
  /// Requires a_i >= 1, v_i >= 0, v != 0 and equal lengths.
  Brancher(IntVector a, IntVector v);

  const IntVector& a() const { return a_; }
  const IntVector& v() const { return v_; }
  const Integer& a_total() const { return a_total_; }
  const Integer& v_total() const { return v_total_; }

  /// min/max of v x over {a x = beta, 0 <= x <= e}; empty when beta is
  /// outside [0, ||a||_1] (the relaxation is infeasible).
  std::optional<LpExtreme> lp_extreme_eq(const Integer& beta, Sense sense) const;

  /// max{a x : v x <= ell, 0 <= x <= e} for ell >= 0 and
  /// min{a x : v x >= ell, 0 <= x <= e} for ell <= ||v||_1.
  LpExtreme lp_extreme_ineq(const Integer& ell, Sense sense) const;

  CertifyOutcome certify(const Integer& beta) const;

  /// Accepts iff max(a, ell) < beta < min(a, ell + 1), recomputed here.
  bool verify(const Certificate& cert) const;

  IntervalCover enumerate_intervals(const Rational& lambda, const RatVector& r, const Integer& k_lo,
                                    const Integer& k_hi, std::uint64_t cap = kDefaultEnumerationCap) const;

 private:
  IntVector a_;
  IntVector v_;
  Integer a_total_;
  Integer v_total_;
  std::vector<std::size_t> eq_min_order_;
  std::vector<std::size_t> eq_max_order_;
  std::vector<std::size_t> ineq_max_order_;
  std::vector<std::size_t> ineq_min_order_;
};

std::optional<LpExtreme> lp_extreme_eq(const IntVector& a, const IntVector& v, const Integer& beta, Sense sense);
LpExtreme lp_extreme_ineq(const IntVector& a, const IntVector& v, const Integer& ell, Sense sense);

/// Requires gcd(a) = 1 in addition to the Brancher preconditions.
CertifyOutcome certify(const IntVector& a, const IntVector& v, const Integer& beta);

/// Never throws; malformed input is rejected.
bool verify_certificate(const IntVector& a, const IntVector& v, const Certificate& cert);

/// Third-party check of the certificate's own content: witnesses lie in P,
/// attain vmin / vmax, and ell < vmin <= vmax < ell + 1.
bool check_certificate_witnesses(const IntVector& a, const IntVector& v, const Certificate& cert);

IntervalCover enumerate_intervals(const IntVector& a, const IntVector& v, const Rational& lambda,
                                  const RatVector& r, const Integer& k_lo, const Integer& k_hi,
                                  std::uint64_t cap = kDefaultEnumerationCap);

/// Uniform draw j from {0, ..., ||a||_1} on stream j + 1 of `seed`.
Integer sample_beta(const Integer& a_total, std::uint64_t seed, std::uint64_t j);

/// True when b/m <= 10 p + 3 sqrt(p (1 - p) / m), decided exactly.
bool within_sampling_tolerance(const Integer& uncertified, std::uint64_t m, const Rational& p);

struct CoverageOptions {
  CoverageMode mode = CoverageMode::exact;
  std::uint64_t sample_size = 10'000;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::uint64_t cap = kDefaultEnumerationCap;
};

CoverageStats coverage_stats(const IntVector& a, const IntVector& v, const Rational& lambda, const RatVector& r,
                             const CoverageOptions& options);

}  // namespace ssbranch
