#pragma once

// Exact integer / rational helpers on top of GMP.

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ssbranch {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Square matrix / list of columns. Row-major, `m[i][j]` is row i column j.
using IntMatrix = std::vector<IntVector>;
using RatMatrix = std::vector<RatVector>;

/// Closed rational bracket [lo, hi].
struct Bracket {
  Rational lo;
  Rational hi;

  bool operator==(const Bracket&) const = default;
};

Integer pow2(unsigned long e);
Integer ipow(const Integer& base, unsigned long e);
Rational rpow(const Rational& base, unsigned long e);

Rational make_rational(const Integer& num, const Integer& den);

Integer floor_of(const Rational& x);
Integer ceil_of(const Rational& x);
/// Nearest integer, exact halves rounded toward zero.
Integer round_half_to_zero(const Rational& x);

std::size_t bit_length(const Integer& x);

Integer gcd_of(std::span<const Integer> xs);
Integer l1_norm(std::span<const Integer> xs);
Integer linf_norm(std::span<const Integer> xs);
Rational l1_norm(std::span<const Rational> xs);
Rational linf_norm(std::span<const Rational> xs);

Integer dot(std::span<const Integer> x, std::span<const Integer> y);
Rational dot(std::span<const Rational> x, std::span<const Rational> y);
Rational dot(std::span<const Integer> x, std::span<const Rational> y);

RatVector to_rational(std::span<const Integer> xs);
IntMatrix identity_matrix(std::size_t d);

/// Decimal rendering; rationals always as "num/den", den > 0, lowest terms.
std::string to_decimal(const Integer& x);
std::string to_fraction(const Rational& x);

/// Strict decimal parse ("-?[0-9]+"). Returns false on malformed input.
bool parse_integer(std::string_view text, Integer& out);
/// Accepts "p/q" or "p"; rejects zero denominators. Result is canonical.
bool parse_rational(std::string_view text, Rational& out);

/// Rigorous bracket of x^(1/k) for x > 0, width at most 2^-precision_bits.
Bracket root_bracket(const Rational& x, unsigned long k, unsigned long precision_bits);

/// Rigorous bracket of log2(x) for an integer x >= 1, width at most 2^-20.
/// Exact (lo == hi) when x is a power of two.
Bracket log2_bracket(const Integer& x);

}  // namespace ssbranch
