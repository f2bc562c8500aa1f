#include "ssbranch/prng.hpp"

#include "ssbranch/errors.hpp"

namespace ssbranch {

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(mix(seed + mix(stream + kGamma))) {}

std::uint64_t CounterRng::mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t CounterRng::word(std::uint64_t index) const { return mix(key_ + (index + 1) * kGamma); }

Integer CounterRng::bits(unsigned long bits) {
  Integer out = 0;
  unsigned long filled = 0;
  while (filled < bits) {
    std::uint64_t w = next();
    unsigned long take = bits - filled < 64 ? bits - filled : 64;
    if (take < 64) w &= (std::uint64_t{1} << take) - 1;
    Integer chunk;
    mpz_import(chunk.get_mpz_t(), 1, -1, sizeof(w), 0, 0, &w);
    out += chunk << filled;
    filled += take;
  }
  return out;
}

Integer CounterRng::below(const Integer& bound) {
  if (bound <= 0) throw DomainError("uniform sampling needs a positive bound");
  if (bound == 1) return 0;
  const unsigned long width = bit_length(Integer(bound - 1));
  for (;;) {
    Integer candidate = bits(width);
    if (candidate < bound) return candidate;
  }
}

std::uint64_t CounterRng::below(std::uint64_t bound) {
  if (bound == 0) throw DomainError("uniform sampling needs a positive bound");
  return below(Integer(static_cast<unsigned long>(bound))).get_ui();
}

}  // namespace ssbranch
