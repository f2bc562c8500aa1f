#include "ssbranch/lll.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "ssbranch/errors.hpp"

namespace ssbranch {

namespace {

void check_delta(const Rational& delta) {
  if (!(delta > Rational(1, 4) && delta < 1)) throw DomainError("LLL delta must lie in (1/4, 1)");
}

Integer exact_div(const Integer& num, const Integer& den) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

// Integral LLL state, indices 1-based to follow the classical presentation.
// dd[i] is the Gram determinant of the first i vectors, lam[k][j] = dd[j] mu_kj.
class IntegralLll {
 public:
  IntegralLll(const IntMatrix& gram, const Rational& delta)
      : d_(gram.size()),
        p_(delta.get_num()),
        q_(delta.get_den()),
        gram_(gram),
        U_(identity_matrix(d_)),
        U_inv_(identity_matrix(d_)),
        dd_(d_ + 1, 0),
        lam_(d_ + 1, IntVector(d_ + 1, 0)) {}

  GramReduction run() {
    if (d_ == 0) return {gram_, U_, U_inv_, stats_};
    dd_[0] = 1;
    dd_[1] = g(1, 1);
    if (dd_[1] <= 0) throw RankError("LLL input has a zero column");
    std::size_t k = 2;
    std::size_t kmax = 1;
    while (k <= d_) {
      if (k > kmax) {
        kmax = k;
        incremental_gso(k);
      }
      reduce(k, k - 1);
      const Integer& lam = lam_[k][k - 1];
      if (q_ * dd_[k] * dd_[k - 2] < p_ * dd_[k - 1] * dd_[k - 1] - q_ * lam * lam) {
        swap(k, kmax);
        k = std::max<std::size_t>(2, k - 1);
      } else {
        for (std::size_t l = k - 1; l-- > 1;) reduce(k, l);
        ++k;
      }
    }
    return {gram_, U_, U_inv_, stats_};
  }

 private:
  Integer& g(std::size_t i, std::size_t j) { return gram_[i - 1][j - 1]; }

  void incremental_gso(std::size_t k) {
    for (std::size_t j = 1; j <= k; ++j) {
      Integer u = g(k, j);
      for (std::size_t i = 1; i < j; ++i) u = exact_div(dd_[i] * u - lam_[k][i] * lam_[j][i], dd_[i - 1]);
      if (j < k) {
        lam_[k][j] = u;
      } else {
        if (u <= 0) throw RankError("LLL input columns are linearly dependent");
        dd_[k] = u;
      }
    }
  }

  // b_k <- b_k - r b_l
  void reduce(std::size_t k, std::size_t l) {
    Integer twice = 2 * abs(lam_[k][l]);
    if (twice <= dd_[l]) return;
    const Integer r = round_half_to_zero(make_rational(lam_[k][l], dd_[l]));
    ++stats_.size_reductions;

    for (std::size_t i = 0; i < d_; ++i) U_[i][k - 1] -= r * U_[i][l - 1];
    for (std::size_t j = 0; j < d_; ++j) U_inv_[l - 1][j] += r * U_inv_[k - 1][j];

    // Row k first (G_kk picks up -r G_lk here), then the second -r G'_kl.
    for (std::size_t i = 1; i <= d_; ++i) g(k, i) -= r * g(l, i);
    g(k, k) -= r * g(k, l);
    for (std::size_t i = 1; i <= d_; ++i) {
      if (i != k) g(i, k) = g(k, i);
    }

    lam_[k][l] -= r * dd_[l];
    for (std::size_t i = 1; i < l; ++i) lam_[k][i] -= r * lam_[l][i];
  }

  void swap(std::size_t k, std::size_t kmax) {
    ++stats_.swaps;
    for (std::size_t i = 0; i < d_; ++i) std::swap(U_[i][k - 1], U_[i][k - 2]);
    std::swap(U_inv_[k - 1], U_inv_[k - 2]);
    std::swap(gram_[k - 1], gram_[k - 2]);
    for (auto& row : gram_) std::swap(row[k - 1], row[k - 2]);

    for (std::size_t j = 1; j + 2 <= k; ++j) std::swap(lam_[k][j], lam_[k - 1][j]);
    const Integer lam = lam_[k][k - 1];
    const Integer b = exact_div(dd_[k - 2] * dd_[k] + lam * lam, dd_[k - 1]);
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      const Integer t = lam_[i][k];
      lam_[i][k] = exact_div(dd_[k] * lam_[i][k - 1] - lam * t, dd_[k - 1]);
      lam_[i][k - 1] = exact_div(b * t + lam * lam_[i][k], dd_[k]);
    }
    dd_[k - 1] = b;
  }

  std::size_t d_;
  Integer p_;
  Integer q_;
  IntMatrix gram_;
  IntMatrix U_;
  IntMatrix U_inv_;
  IntVector dd_;
  IntMatrix lam_;
  ReductionStats stats_;
};

void check_columns(const Basis& basis) {
  const std::size_t m = basis.ambient();
  for (const auto& c : basis.cols) {
    if (c.size() != m) throw DomainError("basis columns have different lengths");
  }
  if (basis.dim() > m) throw RankError("more columns than coordinates");
}

}  // namespace

Basis Basis::from_integer_columns(const IntMatrix& cols) {
  Basis b;
  b.cols.reserve(cols.size());
  for (const auto& c : cols) b.cols.push_back(to_rational(c));
  return b;
}

RatMatrix gram_matrix(const Basis& basis) {
  check_columns(basis);
  const std::size_t d = basis.dim();
  RatMatrix g(d, RatVector(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      g[i][j] = dot(std::span<const Rational>(basis.cols[i]), std::span<const Rational>(basis.cols[j]));
      g[j][i] = g[i][j];
    }
  }
  return g;
}

GsoData gram_schmidt_from_gram(const RatMatrix& gram) {
  const std::size_t d = gram.size();
  GsoData out;
  out.mu.assign(d, RatVector(d, 0));
  out.norms_sq.assign(d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Rational s = gram[i][j];
      for (std::size_t k = 0; k < j; ++k) s -= out.mu[j][k] * out.mu[i][k] * out.norms_sq[k];
      out.mu[i][j] = s / out.norms_sq[j];
    }
    out.mu[i][i] = 1;
    Rational n = gram[i][i];
    for (std::size_t k = 0; k < i; ++k) n -= out.mu[i][k] * out.mu[i][k] * out.norms_sq[k];
    if (sgn(n) <= 0) throw RankError("columns are linearly dependent (zero Gram-Schmidt norm at index " +
                                     std::to_string(i) + ")");
    out.norms_sq[i] = n;
  }
  return out;
}

GsoData gram_schmidt(const Basis& basis) { return gram_schmidt_from_gram(gram_matrix(basis)); }

GramReduction lll_reduce_gram(const IntMatrix& gram, const Rational& delta) {
  check_delta(delta);
  for (const auto& row : gram) {
    if (row.size() != gram.size()) throw DomainError("Gram matrix is not square");
  }
  return IntegralLll(gram, delta).run();
}

ReducedBasis lll_reduce(const Basis& basis, const Rational& delta) {
  check_delta(delta);
  check_columns(basis);

  // Scale to integer columns; LLL decisions are invariant under scaling.
  Integer scale = 1;
  for (const auto& c : basis.cols) {
    for (const auto& x : c) scale = lcm(scale, Integer(x.get_den()));
  }
  const std::size_t d = basis.dim();
  IntMatrix int_cols(d);
  for (std::size_t j = 0; j < d; ++j) {
    for (const auto& x : basis.cols[j]) int_cols[j].push_back(x.get_num() * (scale / x.get_den()));
  }
  IntMatrix gram(d, IntVector(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      gram[i][j] = dot(std::span<const Integer>(int_cols[i]), std::span<const Integer>(int_cols[j]));
      gram[j][i] = gram[i][j];
    }
  }

  GramReduction red = lll_reduce_gram(gram, delta);

  ReducedBasis out;
  out.basis.cols.assign(d, RatVector(basis.ambient(), 0));
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t i = 0; i < d; ++i) {
      if (red.U[i][k] == 0) continue;
      for (std::size_t r = 0; r < basis.ambient(); ++r) out.basis.cols[k][r] += basis.cols[i][r] * red.U[i][k];
    }
  }
  out.U = std::move(red.U);
  out.U_inv = std::move(red.U_inv);
  out.stats = red.stats;
  out.gso = gram_schmidt(out.basis);
  return out;
}

bool is_reduced_gso(const GsoData& gso, const Rational& delta) {
  const std::size_t d = gso.norms_sq.size();
  const Rational half(1, 2);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (abs(gso.mu[i][j]) > half) return false;
    }
  }
  for (std::size_t i = 1; i < d; ++i) {
    const Rational& mu = gso.mu[i][i - 1];
    if (gso.norms_sq[i] < (delta - mu * mu) * gso.norms_sq[i - 1]) return false;
  }
  return true;
}

bool is_reduced(const Basis& basis, const Rational& delta) { return is_reduced_gso(gram_schmidt(basis), delta); }

}  // namespace ssbranch
