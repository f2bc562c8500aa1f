#include "ssbranch/decompose.hpp"

#include <algorithm>

#include "ssbranch/errors.hpp"

namespace ssbranch {

std::string to_string(Method m) { return m == Method::frank_tardos ? "frank_tardos" : "lll_rows"; }

Method method_from_string(const std::string& s) {
  if (s == "frank_tardos") return Method::frank_tardos;
  if (s == "lll_rows") return Method::lll_rows;
  throw DomainError("unknown method '" + s + "'");
}

bool Decomposition::all_bounds_hold() const {
  return std::all_of(bounds.begin(), bounds.end(), [](const BoundCheck& b) { return b.holds; });
}

Projection project_onto(const RatVector& a, const RatVector& v) {
  if (a.size() != v.size()) throw DomainError("projection needs vectors of equal length");
  const Rational vv = dot(std::span<const Rational>(v), std::span<const Rational>(v));
  if (vv == 0) throw DomainError("projection onto the zero vector");
  Projection p;
  p.lambda = dot(std::span<const Rational>(a), std::span<const Rational>(v)) / vv;
  p.r.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) p.r.push_back(a[i] - p.lambda * v[i]);
  return p;
}

Bracket f_bracket(std::span<const Integer> a) {
  const unsigned long n = a.size();
  const Integer a_sq = dot(a, a);
  if (a_sq == 0) throw DomainError("f(a) undefined for a = 0");
  // f^(4n) = 2^(n^2) / ||a||^4
  const Rational power = make_rational(pow2(n * n), a_sq * a_sq);
  const unsigned long precision = 24 + (bit_length(a_sq) + 2 * n - 1) / (2 * n);
  return root_bracket(power, 4 * n, precision);
}

ParallelismReport parallelism(std::span<const Integer> a, std::span<const Integer> v) {
  if (a.size() != v.size()) throw DomainError("parallelism needs vectors of equal length");
  const Integer a_sq = dot(a, a);
  if (a_sq == 0) throw DomainError("parallelism needs a != 0");
  const Projection p = project_onto(to_rational(a), to_rational(v));
  const Rational r_sq = dot(std::span<const Rational>(p.r), std::span<const Rational>(p.r));
  ParallelismReport out;
  out.sin_sq = r_sq / Rational(a_sq);
  if (p.lambda != 0) out.ratio_sq = r_sq / (p.lambda * p.lambda);
  out.f_a = f_bracket(a);
  return out;
}

namespace {

// Bounds for the approximation method. Values are small enough to print exactly.
std::vector<BoundCheck> ft_checks(std::size_t n, const IntVector& v, const Rational& lambda, const RatVector& r) {
  const unsigned long nn = n;
  std::vector<BoundCheck> out;
  const Integer v1 = l1_norm(std::span<const Integer>(v));
  const Integer v_cap = pow2(2 * nn * nn);
  out.push_back({"v_l1_le_2^(2n^2)", v1 <= v_cap, to_decimal(v1), to_decimal(v_cap)});

  const Rational ratio = l1_norm(std::span<const Rational>(r)) / lambda;
  const Rational ratio_cap = make_rational(1, pow2(nn + 2));
  out.push_back({"r_l1_over_lambda_le_2^-(n+2)", ratio <= ratio_cap, to_fraction(ratio), to_fraction(ratio_cap)});

  const Rational lambda_floor(pow2(nn + 2));
  out.push_back({"lambda_ge_2^(n+2)", lambda >= lambda_floor, to_fraction(lambda), to_fraction(lambda_floor)});
  return out;
}

}  // namespace

std::vector<BoundCheck> near_parallel_checks(std::span<const Integer> a, std::span<const Integer> v,
                                             const Rational& lambda, const RatVector& r) {
  const unsigned long n = a.size();
  const Rational a_sq(dot(a, a));
  const Rational v_sq(dot(v, v));
  const Rational r_sq = dot(std::span<const Rational>(r), std::span<const Rational>(r));
  const Rational two_n_sq(pow2(n * n));
  std::vector<BoundCheck> out;

  // ||v|| (1 + ||r||^2)^(1/2) <= ||a|| f(a), raised to the 4n-th power.
  const bool item1 = rpow(v_sq, 2 * n) * rpow(1 + r_sq, 2 * n) <= rpow(a_sq, 2 * n - 2) * two_n_sq;
  out.push_back({"v_norm_times_sqrt(1+r^2)_le_a_norm_f(a)", item1, "", ""});

  // lambda >= 1 / f(a)
  const bool item2 = sgn(lambda) > 0 && rpow(lambda, 4 * n) * two_n_sq >= a_sq * a_sq;
  out.push_back({"lambda_ge_1/f(a)", item2, "", ""});

  // ||r|| / lambda <= 2 f(a)
  const bool item3 =
      sgn(lambda) > 0 && rpow(r_sq / (lambda * lambda), 2 * n) * a_sq * a_sq <= Rational(pow2(4 * n)) * two_n_sq;
  out.push_back({"r_norm_over_lambda_le_2f(a)", item3, "", ""});
  return out;
}

Decomposition decompose_ft(const Instance& inst) {
  const std::size_t n = inst.n();
  if (n < 10) throw DomainError("Frank-Tardos decomposition needs n >= 10");
  const auto& a = inst.weights();
  if (!has_low_density(a)) throw DomainError("density above 1/(2n): need ||a||_inf >= 2^(2n^2)");

  const Integer a_inf = inst.linf();
  RatVector alpha;
  alpha.reserve(n);
  for (const auto& x : a) alpha.push_back(make_rational(x, a_inf));

  ApproxResult approx = dioph_approx(alpha, choose_N(n));

  Decomposition dec;
  dec.method = Method::frank_tardos;
  dec.v = approx.v;
  for (const auto& x : dec.v) {
    if (x < 0) throw InternalError("approximation produced a negative direction entry");
  }
  if (l1_norm(std::span<const Integer>(dec.v)) == 0) throw InternalError("approximation produced v = 0");
  dec.lambda = make_rational(a_inf, approx.q);
  dec.r.reserve(n);
  for (std::size_t i = 0; i < n; ++i) dec.r.push_back(Rational(a[i]) - dec.lambda * dec.v[i]);
  dec.bounds = ft_checks(n, dec.v, dec.lambda, dec.r);
  dec.provenance = std::move(approx);

  if (!dec.all_bounds_hold()) throw InternalError("Frank-Tardos bounds violated");
  if (!satisfies_branching_hypotheses(dec)) throw InternalError("decomposition violates lambda >= 1, ||r||_1/lambda < 1");
  return dec;
}

NearParallelDirection near_parallel_direction(std::span<const Integer> a) {
  const std::size_t n = a.size();
  if (n < 2) throw DomainError("reduction direction needs n >= 2");
  IntMatrix cols(n, IntVector(n + 1, 0));
  for (std::size_t i = 0; i < n; ++i) {
    cols[i][0] = a[i];
    cols[i][i + 1] = 1;
  }
  const ReducedBasis red = lll_reduce(Basis::from_integer_columns(cols));

  NearParallelDirection out;
  out.v = red.U_inv[n - 1];
  out.stats = red.stats;
  Integer sum = 0;
  for (const auto& x : out.v) sum += x;
  if (sum < 0) {
    for (auto& x : out.v) x = -x;
  }
  bool has_pos = false;
  bool has_neg = false;
  for (const auto& x : out.v) {
    has_pos = has_pos || x > 0;
    has_neg = has_neg || x < 0;
  }
  out.mixed_signs = has_pos && has_neg;
  if (!has_pos && !has_neg) throw InternalError("last row of a unimodular inverse is zero");
  return out;
}

Decomposition decompose_lll(const Instance& inst) {
  const auto& a = inst.weights();
  if (inst.n() < 2) throw DomainError("reduction decomposition needs n >= 2");
  if (!has_half_n_density(a)) throw DomainError("density above 1/(n/2+1): need ||a||_inf^2 >= 2^(n(n+2))");

  NearParallelDirection dir = near_parallel_direction(a);
  const Projection p = project_onto(to_rational(a), to_rational(dir.v));

  Decomposition dec;
  dec.method = Method::lll_rows;
  dec.v = std::move(dir.v);
  dec.lambda = p.lambda;
  dec.r = p.r;
  dec.provenance = dir.stats;
  dec.bounds = near_parallel_checks(a, dec.v, dec.lambda, dec.r);
  if (dir.mixed_signs) dec.warnings.emplace_back(kMixedSignWarning);
  return dec;
}

Decomposition decompose(const Instance& inst, Method method) {
  if (method == Method::frank_tardos) return decompose_ft(inst);
  Decomposition dec = decompose_lll(inst);
  if (dec.warnings.empty()) return dec;
  Decomposition fallback = decompose_ft(inst);
  fallback.warnings = dec.warnings;
  fallback.warnings.emplace_back("fell_back_to_frank_tardos");
  return fallback;
}

bool satisfies_identity(std::span<const Integer> a, const Decomposition& dec) {
  if (dec.v.size() != a.size() || dec.r.size() != a.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (Rational(a[i]) != dec.lambda * dec.v[i] + dec.r[i]) return false;
  }
  return true;
}

bool satisfies_branching_hypotheses(const Decomposition& dec) {
  return dec.lambda >= 1 && l1_norm(std::span<const Rational>(dec.r)) < dec.lambda;
}

}  // namespace ssbranch
