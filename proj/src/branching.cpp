#include "ssbranch/branching.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "ssbranch/errors.hpp"
#include "ssbranch/prng.hpp"

namespace ssbranch {

std::string to_string(CertifyStatus s) {
  switch (s) {
    case CertifyStatus::certified:
      return "certified";
    case CertifyStatus::no_certificate:
      return "no_certificate";
    case CertifyStatus::trivially_infeasible:
      return "trivially_infeasible";
    case CertifyStatus::trivially_infeasible_gcd:
      return "trivially_infeasible_gcd";
  }
  return "unknown";
}

CertifyStatus certify_status_from_string(const std::string& s) {
  for (auto st : {CertifyStatus::certified, CertifyStatus::no_certificate, CertifyStatus::trivially_infeasible,
                  CertifyStatus::trivially_infeasible_gcd}) {
    if (to_string(st) == s) return st;
  }
  throw DomainError("unknown certify status '" + s + "'");
}

std::string to_string(CoverageMode m) { return m == CoverageMode::exact ? "exact" : "sampled"; }

CoverageMode coverage_mode_from_string(const std::string& s) {
  if (s == "exact") return CoverageMode::exact;
  if (s == "sampled") return CoverageMode::sampled;
  throw DomainError("unknown coverage mode '" + s + "'");
}

namespace {

// Indices sorted by num_i / den_i (den_i > 0), ascending or descending,
// ties by smaller index.
std::vector<std::size_t> ratio_order(const IntVector& num, const IntVector& den, std::vector<std::size_t> idx,
                                     bool ascending) {
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
    Integer lhs = num[i] * den[j];
    Integer rhs = num[j] * den[i];
    return ascending ? lhs < rhs : lhs > rhs;
  });
  return idx;
}

std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  return idx;
}

}  // namespace

Brancher::Brancher(IntVector a, IntVector v) : a_(std::move(a)), v_(std::move(v)) {
  if (a_.empty() || a_.size() != v_.size()) throw DomainError("a and v must be nonempty and of equal length");
  for (const auto& x : a_) {
    if (x < 1) throw DomainError("weights must be positive");
  }
  for (const auto& x : v_) {
    if (x < 0) throw DomainError("branching direction must be nonnegative");
  }
  a_total_ = l1_norm(std::span<const Integer>(a_));
  v_total_ = l1_norm(std::span<const Integer>(v_));
  if (v_total_ == 0) throw DomainError("branching direction must be nonzero");

  const std::size_t n = a_.size();
  eq_min_order_ = ratio_order(v_, a_, all_indices(n), true);
  eq_max_order_ = ratio_order(v_, a_, all_indices(n), false);

  std::vector<std::size_t> positive;
  for (std::size_t i = 0; i < n; ++i) {
    if (v_[i] > 0) positive.push_back(i);
  }
  ineq_max_order_ = ratio_order(a_, v_, positive, false);
  ineq_min_order_ = ratio_order(a_, v_, positive, true);
}

std::optional<LpExtreme> Brancher::lp_extreme_eq(const Integer& beta, Sense sense) const {
  if (beta < 0 || beta > a_total_) return std::nullopt;
  const auto& order = sense == Sense::min ? eq_min_order_ : eq_max_order_;
  LpExtreme out;
  out.arg.assign(a_.size(), 0);
  out.value = 0;
  Integer remaining = beta;
  for (std::size_t i : order) {
    if (remaining == 0) break;
    if (a_[i] <= remaining) {
      out.arg[i] = 1;
      out.value += v_[i];
      remaining -= a_[i];
    } else {
      out.arg[i] = make_rational(remaining, a_[i]);
      out.value += out.arg[i] * v_[i];
      remaining = 0;
    }
  }
  return out;
}

LpExtreme Brancher::lp_extreme_ineq(const Integer& ell, Sense sense) const {
  const std::size_t n = a_.size();
  LpExtreme out;
  out.arg.assign(n, 0);
  out.value = 0;
  if (sense == Sense::max) {
    if (ell < 0) throw DomainError("max(a, ell) needs ell >= 0");
    for (std::size_t i = 0; i < n; ++i) {
      if (v_[i] == 0) {
        out.arg[i] = 1;
        out.value += a_[i];
      }
    }
    Integer capacity = ell;
    for (std::size_t i : ineq_max_order_) {
      if (capacity == 0) break;
      if (v_[i] <= capacity) {
        out.arg[i] = 1;
        out.value += a_[i];
        capacity -= v_[i];
      } else {
        out.arg[i] = make_rational(capacity, v_[i]);
        out.value += out.arg[i] * a_[i];
        capacity = 0;
      }
    }
    return out;
  }

  if (ell > v_total_) throw DomainError("min(a, ell) needs ell <= ||v||_1");
  Integer need = ell;
  for (std::size_t i : ineq_min_order_) {
    if (need <= 0) break;
    if (v_[i] <= need) {
      out.arg[i] = 1;
      out.value += a_[i];
      need -= v_[i];
    } else {
      out.arg[i] = make_rational(need, v_[i]);
      out.value += out.arg[i] * a_[i];
      need = 0;
    }
  }
  return out;
}

CertifyOutcome Brancher::certify(const Integer& beta) const {
  CertifyOutcome out;
  out.beta = beta;
  auto lo = lp_extreme_eq(beta, Sense::min);
  auto hi = lp_extreme_eq(beta, Sense::max);
  if (!lo || !hi) {
    out.status = CertifyStatus::trivially_infeasible;
    return out;
  }
  out.vmin = lo->value;
  out.vmax = hi->value;
  if (floor_of(hi->value) < lo->value) {
    out.status = CertifyStatus::certified;
    out.certificate = Certificate{beta, floor_of(lo->value), lo->value, hi->value, std::move(lo->arg),
                                  std::move(hi->arg)};
  } else {
    out.status = CertifyStatus::no_certificate;
  }
  return out;
}

bool Brancher::verify(const Certificate& cert) const {
  if (cert.ell < 0 || cert.ell + 1 > v_total_) return false;
  const Rational below = lp_extreme_ineq(cert.ell, Sense::max).value;
  const Rational above = lp_extreme_ineq(cert.ell + 1, Sense::min).value;
  const Rational beta(cert.beta);
  return below < beta && beta < above;
}

IntervalCover Brancher::enumerate_intervals(const Rational& lambda, const RatVector& r, const Integer& k_lo,
                                            const Integer& k_hi, std::uint64_t cap) const {
  if (k_lo < 0 || k_lo > k_hi || k_hi > v_total_) {
    throw DomainError("interval range must satisfy 0 <= k_lo <= k_hi <= ||v||_1 = " + to_decimal(v_total_));
  }
  if (Integer(k_hi - k_lo) > Integer(static_cast<unsigned long>(cap))) {
    throw CapacityError("range [" + to_decimal(k_lo) + ", " + to_decimal(k_hi) + "] exceeds the enumeration cap of " +
                        std::to_string(cap) + " levels; request a partial range (||v||_1 = " +
                        to_decimal(v_total_) + ")");
  }
  IntervalCover cover;
  cover.k_lo = k_lo;
  cover.k_hi = k_hi;
  cover.length_floor = lambda - l1_norm(std::span<const Rational>(r));
  cover.interlaced = true;
  cover.good_lengths_ok = true;

  std::optional<Rational> prev_max;
  for (Integer k = k_lo; k <= k_hi; ++k) {
    Rational lo = lp_extreme_ineq(k, Sense::min).value;
    Rational hi = lp_extreme_ineq(k, Sense::max).value;
    if (lo > hi) cover.interlaced = false;
    if (prev_max) {
      if (!(*prev_max < lo)) cover.interlaced = false;
      Interval good{*prev_max, lo};
      if (good.hi - good.lo < cover.length_floor) cover.good_lengths_ok = false;
      cover.good.push_back(std::move(good));
    }
    prev_max = hi;
    cover.bad.push_back({std::move(lo), std::move(hi)});
  }
  if (k_lo == 0 && k_hi == v_total_) {
    cover.partitions_range = cover.interlaced && cover.bad.front().lo == 0 && cover.bad.back().hi == a_total_;
  }
  return cover;
}

std::optional<LpExtreme> lp_extreme_eq(const IntVector& a, const IntVector& v, const Integer& beta, Sense sense) {
  return Brancher(a, v).lp_extreme_eq(beta, sense);
}

LpExtreme lp_extreme_ineq(const IntVector& a, const IntVector& v, const Integer& ell, Sense sense) {
  return Brancher(a, v).lp_extreme_ineq(ell, sense);
}

CertifyOutcome certify(const IntVector& a, const IntVector& v, const Integer& beta) {
  if (gcd_of(a) != 1) throw DomainError("weights not coprime");
  return Brancher(a, v).certify(beta);
}

bool verify_certificate(const IntVector& a, const IntVector& v, const Certificate& cert) {
  try {
    return Brancher(a, v).verify(cert);
  } catch (const Error&) {
    return false;
  }
}

bool check_certificate_witnesses(const IntVector& a, const IntVector& v, const Certificate& cert) {
  if (cert.arg_min.size() != a.size() || cert.arg_max.size() != a.size() || v.size() != a.size()) return false;
  if (!(Rational(cert.ell) < cert.vmin && cert.vmin <= cert.vmax && cert.vmax < Rational(cert.ell + 1))) return false;
  for (const RatVector* x : {&cert.arg_min, &cert.arg_max}) {
    for (const auto& xi : *x) {
      if (xi < 0 || xi > 1) return false;
    }
    if (dot(std::span<const Integer>(a), std::span<const Rational>(*x)) != Rational(cert.beta)) return false;
  }
  return dot(std::span<const Integer>(v), std::span<const Rational>(cert.arg_min)) == cert.vmin &&
         dot(std::span<const Integer>(v), std::span<const Rational>(cert.arg_max)) == cert.vmax;
}

IntervalCover enumerate_intervals(const IntVector& a, const IntVector& v, const Rational& lambda, const RatVector& r,
                                  const Integer& k_lo, const Integer& k_hi, std::uint64_t cap) {
  return Brancher(a, v).enumerate_intervals(lambda, r, k_lo, k_hi, cap);
}

Integer sample_beta(const Integer& a_total, std::uint64_t seed, std::uint64_t j) {
  CounterRng rng(seed, j + 1);
  return rng.below(Integer(a_total + 1));
}

bool within_sampling_tolerance(const Integer& uncertified, std::uint64_t m, const Rational& p) {
  if (m == 0) throw DomainError("sampling tolerance needs m >= 1");
  if (10 * p >= 1) return true;
  const Rational mm(static_cast<unsigned long>(m));
  const Rational excess = Rational(uncertified) / mm - 10 * p;
  if (excess <= 0) return true;
  return excess * excess <= 9 * p * (1 - p) / mm;
}

namespace {

Integer count_open(const Interval& iv) {
  // Integers strictly inside (lo, hi).
  Integer c = ceil_of(iv.hi) - floor_of(iv.lo) - 1;
  return c > 0 ? c : Integer(0);
}

}  // namespace

CoverageStats coverage_stats(const IntVector& a, const IntVector& v, const Rational& lambda, const RatVector& r,
                             const CoverageOptions& options) {
  const Brancher br(a, v);
  CoverageStats stats;
  stats.mode = options.mode;
  stats.coverage_bound = 2 * (l1_norm(std::span<const Rational>(r)) + 1) / lambda;
  stats.two_pow_n_bound = make_rational(1, pow2(a.size()));

  if (options.mode == CoverageMode::exact) {
    const IntervalCover cover = br.enumerate_intervals(lambda, r, 0, br.v_total(), options.cap);
    stats.g = 0;
    for (const auto& good : cover.good) stats.g += count_open(good);
    const Integer total = br.a_total() + 1;
    stats.b = total - stats.g;
    stats.bad_fraction = make_rational(stats.b, total);
    stats.within_bound = stats.bad_fraction <= stats.coverage_bound;
    return stats;
  }

  if (options.sample_size == 0) throw DomainError("sampled coverage needs sample_size >= 1");
  const std::uint64_t m = options.sample_size;
  const unsigned workers = std::max(1u, options.workers);
  std::vector<std::uint64_t> certified(workers, 0);
  auto classify = [&](unsigned w) {
    const std::uint64_t begin = m * w / workers;
    const std::uint64_t end = m * (w + 1) / workers;
    for (std::uint64_t j = begin; j < end; ++j) {
      if (br.certify(sample_beta(br.a_total(), options.seed, j)).status == CertifyStatus::certified) ++certified[w];
    }
  };
  if (workers == 1) {
    classify(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(classify, w);
    for (auto& t : pool) t.join();
  }
  const std::uint64_t good = std::accumulate(certified.begin(), certified.end(), std::uint64_t{0});
  stats.sample_size = m;
  stats.seed = options.seed;
  stats.g = Integer(static_cast<unsigned long>(good));
  stats.b = Integer(static_cast<unsigned long>(m - good));
  stats.bad_fraction = make_rational(stats.b, Integer(static_cast<unsigned long>(m)));
  stats.within_bound = within_sampling_tolerance(stats.b, m, stats.coverage_bound);
  return stats;
}

}  // namespace ssbranch
