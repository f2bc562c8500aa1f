#include "ssbranch/instance.hpp"

#include <string>

#include "ssbranch/errors.hpp"
#include "ssbranch/prng.hpp"

namespace ssbranch {

Instance::Instance(IntVector weights, std::optional<std::uint64_t> seed, bool allow_common_divisor)
    : weights_(std::move(weights)), seed_(seed) {
  if (weights_.empty()) throw DomainError("instance needs n >= 1");
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] < 1) throw DomainError("weight a_" + std::to_string(i + 1) + " is not positive");
  }
  if (!allow_common_divisor && gcd_of(weights_) != 1) throw DomainError("weights not coprime");
}

Instance Instance::normalized() const {
  const Integer g = gcd();
  IntVector scaled;
  scaled.reserve(weights_.size());
  for (const auto& w : weights_) scaled.emplace_back(w / g);
  return Instance(std::move(scaled), seed_);
}

bool has_low_density(std::span<const Integer> a) {
  const unsigned long n = a.size();
  return linf_norm(a) >= pow2(2 * n * n);
}

bool has_half_n_density(std::span<const Integer> a) {
  const unsigned long n = a.size();
  const Integer m = linf_norm(a);
  return m * m >= pow2(n * (n + 2));
}

DensityReport density(std::span<const Integer> a) {
  if (a.empty()) throw DomainError("density of an empty vector");
  for (const auto& x : a) {
    if (x < 1) throw DomainError("density needs positive weights");
  }
  const Integer m = linf_norm(a);
  if (m < 2) throw DomainError("density undefined: log2 ||a||_inf = 0");

  DensityReport report;
  report.n = a.size();
  report.log2_ainf = log2_bracket(m);
  const Rational n(static_cast<unsigned long>(a.size()));
  report.density = {n / report.log2_ainf.hi, n / report.log2_ainf.lo};
  report.satisfies_half_over_n = has_low_density(a);
  return report;
}

Instance generate_instance(std::size_t n, std::uint64_t seed) {
  if (n < 2) throw DomainError("generate_instance needs n >= 2");
  const unsigned long exponent = 2 * n * n;
  const Integer threshold = pow2(exponent);
  CounterRng rng(seed, 0);
  for (int attempt = 0; attempt < kMaxGenerationAttempts; ++attempt) {
    // [1, 2^(2n^2+1)] has exactly 2^(2n^2+1) elements.
    IntVector a;
    a.reserve(n);
    for (std::size_t i = 0; i < n; ++i) a.push_back(rng.bits(exponent + 1) + 1);
    if (linf_norm(a) >= threshold && gcd_of(a) == 1) return Instance(std::move(a), seed);
  }
  throw GenerationError("no admissible instance after " + std::to_string(kMaxGenerationAttempts) +
                        " resamples");
}

}  // namespace ssbranch
