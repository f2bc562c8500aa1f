#include "ssbranch/numeric.hpp"

#include <algorithm>
#include <cctype>

#include "ssbranch/errors.hpp"

namespace ssbranch {

Integer pow2(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rational rpow(const Rational& base, unsigned long e) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
  return r;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer floor_of(const Rational& x) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& x) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

Integer round_half_to_zero(const Rational& x) {
  // |x| = k + f with 0 <= f < 1; round up only when f > 1/2.
  Rational ax = abs(x);
  Integer k = floor_of(ax);
  Rational frac = ax - k;
  if (frac > Rational(1, 2)) k += 1;
  return sgn(x) < 0 ? Integer(-k) : k;
}

std::size_t bit_length(const Integer& x) {
  if (x == 0) return 0;
  return mpz_sizeinbase(x.get_mpz_t(), 2);
}

Integer gcd_of(std::span<const Integer> xs) {
  Integer g = 0;
  for (const auto& x : xs) g = gcd(g, x);
  return g;
}

Integer l1_norm(std::span<const Integer> xs) {
  Integer s = 0;
  for (const auto& x : xs) s += abs(x);
  return s;
}

Integer linf_norm(std::span<const Integer> xs) {
  Integer m = 0;
  for (const auto& x : xs) {
    Integer ax = abs(x);
    if (ax > m) m = ax;
  }
  return m;
}

Rational l1_norm(std::span<const Rational> xs) {
  Rational s = 0;
  for (const auto& x : xs) s += abs(x);
  return s;
}

Rational linf_norm(std::span<const Rational> xs) {
  Rational m = 0;
  for (const auto& x : xs) {
    Rational ax = abs(x);
    if (ax > m) m = ax;
  }
  return m;
}

Integer dot(std::span<const Integer> x, std::span<const Integer> y) {
  Integer s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

Rational dot(std::span<const Rational> x, std::span<const Rational> y) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

Rational dot(std::span<const Integer> x, std::span<const Rational> y) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += Rational(x[i]) * y[i];
  return s;
}

RatVector to_rational(std::span<const Integer> xs) {
  RatVector out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.emplace_back(x);
  return out;
}

IntMatrix identity_matrix(std::size_t d) {
  IntMatrix m(d, IntVector(d, 0));
  for (std::size_t i = 0; i < d; ++i) m[i][i] = 1;
  return m;
}

std::string to_decimal(const Integer& x) { return x.get_str(10); }

std::string to_fraction(const Rational& x) {
  return x.get_num().get_str(10) + "/" + x.get_den().get_str(10);
}

bool parse_integer(std::string_view text, Integer& out) {
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (digits.empty()) return false;
  if (!std::all_of(digits.begin(), digits.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }))
    return false;
  return out.set_str(std::string(text), 10) == 0;
}

bool parse_rational(std::string_view text, Rational& out) {
  auto slash = text.find('/');
  Integer num;
  Integer den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, num)) return false;
  } else {
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && den_text.front() == '-') return false;
    if (!parse_integer(text.substr(0, slash), num) || !parse_integer(den_text, den)) return false;
    if (den == 0) return false;
  }
  out = Rational(num, den);
  out.canonicalize();
  return true;
}

Bracket root_bracket(const Rational& x, unsigned long k, unsigned long precision_bits) {
  if (sgn(x) <= 0 || k == 0) throw DomainError("root_bracket needs x > 0 and k >= 1");
  // floor(x * 2^(k P)) <= x 2^(kP) < floor + 1, so the k-th roots bracket x^(1/k) 2^P.
  Integer scaled = floor_of(x * Rational(pow2(k * precision_bits)));
  Integer root;
  mpz_root(root.get_mpz_t(), scaled.get_mpz_t(), k);
  Integer denom = pow2(precision_bits);
  return {make_rational(root, denom), make_rational(root + 1, denom)};
}

Bracket log2_bracket(const Integer& x) {
  if (x < 1) throw DomainError("log2 of a non-positive integer");
  const unsigned long e = bit_length(x) - 1;
  if (x == pow2(e)) return {Rational(e), Rational(e)};

  constexpr unsigned long kScale = 160;
  constexpr unsigned kDigits = 24;
  const Integer one = pow2(kScale);
  const Integer two = one * 2;

  // Fixed-point mantissa y = x / 2^e in [1, 2), rounded down and up.
  Integer lo_state = (x << kScale) >> e;
  Integer hi_state;
  mpz_cdiv_q_2exp(hi_state.get_mpz_t(), Integer(x << kScale).get_mpz_t(), e);

  Integer lo_digits = 0;
  Integer hi_digits = 0;
  for (unsigned i = 0; i < kDigits; ++i) {
    lo_state = (lo_state * lo_state) >> kScale;
    Integer sq = hi_state * hi_state;
    mpz_cdiv_q_2exp(hi_state.get_mpz_t(), sq.get_mpz_t(), kScale);
    lo_digits <<= 1;
    hi_digits <<= 1;
    if (lo_state >= two) {
      lo_digits += 1;
      lo_state >>= 1;
    }
    if (hi_state >= two) {
      hi_digits += 1;
      Integer t = hi_state;
      mpz_cdiv_q_2exp(hi_state.get_mpz_t(), t.get_mpz_t(), 1);
    }
  }
  const Integer denom = pow2(kDigits);
  Rational lo = Rational(e) + make_rational(lo_digits, denom);
  Rational hi = Rational(e) + make_rational(hi_digits + 1, denom);
  return {lo, hi};
}

}  // namespace ssbranch
