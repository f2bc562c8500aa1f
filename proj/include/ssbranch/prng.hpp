#pragma once

#include <cstdint>

#include "ssbranch/numeric.hpp"

namespace ssbranch {

/// Counter-based SplitMix64 generator.
///
/// The generator is a pure function of (seed, stream, counter), so any
/// implementation reproduces the same words:
///
///   mix(z)   = SplitMix64 finalizer
///              z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///              z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///              z ^ (z >> 31)
///   key      = mix(seed + mix(stream + 0x9E3779B97F4A7C15))
///   word(i)  = mix(key + (i + 1) * 0x9E3779B97F4A7C15)
///
/// `next()` returns word(0), word(1), ... in order. Streams split the seed
/// space: instance generation uses stream 0, sampled right-hand side j uses
/// stream j + 1.
class CounterRng {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  CounterRng(std::uint64_t seed, std::uint64_t stream);

  static std::uint64_t mix(std::uint64_t z);
  std::uint64_t word(std::uint64_t index) const;
  std::uint64_t next() { return word(counter_++); }
  std::uint64_t counter() const { return counter_; }

  /// Uniform integer in [0, 2^bits), words concatenated least significant first.
  Integer bits(unsigned long bits);
  /// Uniform integer in [0, bound) by rejection on the bit length of bound - 1.
  Integer below(const Integer& bound);
  /// Uniform 64-bit value in [0, bound).
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace ssbranch
