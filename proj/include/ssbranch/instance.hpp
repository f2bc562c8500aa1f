#pragma once

#include <cstdint>
#include <optional>

#include "ssbranch/numeric.hpp"

namespace ssbranch {

/// Subset sum weights `a` (row vector). Norms are computed on demand.
class Instance {
 public:
  /// Validates a_i >= 1, n >= 1 and, unless `allow_common_divisor`,
  /// gcd(a) == 1. Throws DomainError otherwise.
  explicit Instance(IntVector weights, std::optional<std::uint64_t> seed = std::nullopt,
                    bool allow_common_divisor = false);

  std::size_t n() const { return weights_.size(); }
  const IntVector& weights() const { return weights_; }
  const std::optional<std::uint64_t>& seed() const { return seed_; }

  Integer l1() const { return l1_norm(weights_); }
  Integer linf() const { return linf_norm(weights_); }
  Integer gcd() const { return gcd_of(weights_); }

  /// Divides all weights by their gcd.
  Instance normalized() const;

  bool operator==(const Instance&) const = default;

 private:
  IntVector weights_;
  std::optional<std::uint64_t> seed_;
};

struct DensityReport {
  std::size_t n = 0;
  Bracket log2_ainf;
  Bracket density;
  /// d(a) <= 1/(2n), decided by the integer test ||a||_inf >= 2^(2n^2).
  bool satisfies_half_over_n = false;
};

DensityReport density(std::span<const Integer> a);

/// ||a||_inf >= 2^(2n^2), i.e. d(a) <= 1/(2n).
bool has_low_density(std::span<const Integer> a);

/// ||a||_inf^2 >= 2^(n(n+2)), i.e. d(a) <= 1/(n/2 + 1).
bool has_half_n_density(std::span<const Integer> a);

/// Weights drawn uniformly from [1, 2^(2n^2+1)], resampled until
/// max a_i >= 2^(2n^2) and gcd(a) = 1. Deterministic in (n, seed).
Instance generate_instance(std::size_t n, std::uint64_t seed);

inline constexpr int kMaxGenerationAttempts = 1000;

}  // namespace ssbranch
