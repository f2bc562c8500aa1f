#include "ssbranch/diophantine.hpp"

#include <string>

#include "ssbranch/errors.hpp"

namespace ssbranch {

namespace {

struct Candidate {
  Integer q;
  IntVector v;
  Rational err;
};

Candidate candidate_from_column(const RatVector& alpha, const IntMatrix& U, std::size_t col) {
  const std::size_t n = alpha.size();
  Candidate c;
  c.q = U[n][col];
  c.v.resize(n);
  // Column = sum_i x_i e_i + q (alpha, c), so q alpha_i + x_i is the error and v = -x.
  for (std::size_t i = 0; i < n; ++i) c.v[i] = -U[i][col];
  if (c.q < 0) {
    c.q = -c.q;
    for (auto& x : c.v) x = -x;
  }
  c.err = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Rational e = abs(Rational(c.q) * alpha[i] - c.v[i]);
    if (e > c.err) c.err = e;
  }
  return c;
}

}  // namespace

Integer approx_q_bound_pow4(std::size_t n, const Integer& N) {
  return pow2(n * (n + 1)) * ipow(N, 4 * n);
}

ApproxLattice build_approx_lattice(const RatVector& alpha, const Integer& N) {
  if (N < 1) throw DomainError("diophantine approximation needs N >= 1");
  if (alpha.empty()) throw DomainError("diophantine approximation needs n >= 1");
  const std::size_t n = alpha.size();

  ApproxLattice lat;
  lat.alpha = alpha;
  lat.N = N;
  // c^2 = 2^(-n(n+1)/2) N^(-2(n+1)); n(n+1) is always even.
  lat.corner_sq = make_rational(1, pow2(n * (n + 1) / 2) * ipow(N, 2 * (n + 1)));

  RatMatrix exact(n + 1, RatVector(n + 1, 0));
  for (std::size_t i = 0; i < n; ++i) {
    exact[i][i] = 1;
    exact[i][n] = alpha[i];
    exact[n][i] = alpha[i];
  }
  exact[n][n] = dot(std::span<const Rational>(alpha), std::span<const Rational>(alpha)) + lat.corner_sq;

  lat.scale = 1;
  for (const auto& row : exact) {
    for (const auto& x : row) lat.scale = lcm(lat.scale, Integer(x.get_den()));
  }
  lat.gram.assign(n + 1, IntVector(n + 1));
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= n; ++j) lat.gram[i][j] = exact[i][j].get_num() * (lat.scale / exact[i][j].get_den());
  }
  return lat;
}

ApproxResult dioph_approx(const RatVector& alpha, const Integer& N) {
  const ApproxLattice lat = build_approx_lattice(alpha, N);
  const std::size_t n = alpha.size();
  const GramReduction red = lll_reduce_gram(lat.gram, kDefaultDelta);

  ApproxResult out;
  out.N = N;
  out.q_bound_pow4 = approx_q_bound_pow4(n, N);

  // The first reduced vector has norm <= 2^(n/4) c^(1/(n+1)) = 1/N, which
  // forces q != 0 once N >= 2. Later columns are scanned only for N = 1.
  bool found = false;
  for (std::size_t col = 0; col <= n && !found; ++col) {
    Candidate c = candidate_from_column(alpha, red.U, col);
    if (c.q == 0) continue;
    ApproxResult trial{c.q, c.v, N, c.err, out.q_bound_pow4};
    if (trial.error_within_bound() && trial.q_within_bound()) {
      out = std::move(trial);
      found = true;
    }
  }
  if (!found && N == 1) {
    // q = 1 and nearest integers give error <= 1/2.
    out.q = 1;
    out.v.clear();
    out.err_inf = 0;
    for (const auto& x : alpha) {
      out.v.push_back(round_half_to_zero(x));
      Rational e = abs(x - out.v.back());
      if (e > out.err_inf) out.err_inf = e;
    }
    found = true;
  }
  if (!found) throw InternalError("reduced approximation lattice has no vector with q != 0 within bounds");
  return out;
}

NWindowCheck check_N_window(std::size_t n, const Integer& N) {
  const unsigned long nn = n;
  NWindowCheck c;
  c.v_norm = ipow(Integer(nn), 4) * pow2(nn * (nn + 1)) * ipow(N, 4 * nn) <= pow2(8 * nn * nn);
  c.residual = Integer(nn) * pow2(nn + 2) <= N;
  c.lambda = pow2(4 * nn + 8) * ipow(N, 4 * nn) <= pow2(8 * nn * nn - nn * (nn + 1));
  return c;
}

Integer choose_N(std::size_t n) {
  if (n < 10) {
    throw DomainError("no admissible N for n = " + std::to_string(n) +
                      ": the window n 2^(n+2) <= N <= 2^(2n - (n+1)/4 - 1 - 2/n) needs n >= 10");
  }
  Integer N = Integer(static_cast<unsigned long>(n)) * pow2(n + 2);
  if (!check_N_window(n, N).all()) throw InternalError("N = n 2^(n+2) violates the window for n = " + std::to_string(n));
  return N;
}

}  // namespace ssbranch
