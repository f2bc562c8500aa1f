#include "ssbranch/oracle.hpp"

#include <algorithm>
#include <string>

#include "ssbranch/errors.hpp"

namespace ssbranch {

namespace {

struct HalfSum {
  Integer sum;
  std::uint32_t mask;
};

std::vector<HalfSum> half_sums(const IntVector& a, std::size_t begin, std::size_t end) {
  const std::size_t k = end - begin;
  std::vector<HalfSum> out;
  out.reserve(std::size_t{1} << k);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
    Integer s = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::uint32_t{1} << i)) s += a[begin + i];
    }
    out.push_back({std::move(s), mask});
  }
  return out;
}

}  // namespace

FeasibilityAnswer feasible(const IntVector& a, const Integer& beta) {
  const std::size_t n = a.size();
  if (n > kMaxFeasibleN) {
    throw CapacityError("exhaustive feasibility supports n <= " + std::to_string(kMaxFeasibleN));
  }
  FeasibilityAnswer out;
  out.beta = beta;
  const std::size_t split = (n + 1) / 2;
  const std::vector<HalfSum> left = half_sums(a, 0, split);
  std::vector<HalfSum> right = half_sums(a, split, n);
  std::sort(right.begin(), right.end(), [](const HalfSum& x, const HalfSum& y) { return x.sum < y.sum; });

  for (const auto& l : left) {
    const Integer target = beta - l.sum;
    auto it = std::lower_bound(right.begin(), right.end(), target,
                               [](const HalfSum& x, const Integer& t) { return x.sum < t; });
    if (it == right.end() || it->sum != target) continue;
    std::vector<int> w(n, 0);
    for (std::size_t i = 0; i < split; ++i) w[i] = (l.mask >> i) & 1U;
    for (std::size_t i = split; i < n; ++i) w[i] = (it->mask >> (i - split)) & 1U;
    Integer check = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (w[i]) check += a[i];
    }
    if (check != beta) throw InternalError("subset sum witness does not reproduce beta");
    out.feasible = true;
    out.witness = std::move(w);
    return out;
  }
  return out;
}

IntVector all_feasible_sums(const IntVector& a) {
  if (a.size() > kMaxSumSetN) {
    throw CapacityError("subset sum enumeration supports n <= " + std::to_string(kMaxSumSetN));
  }
  IntVector sums{0};
  for (const auto& x : a) {
    IntVector shifted;
    shifted.reserve(sums.size());
    for (const auto& s : sums) shifted.push_back(s + x);
    IntVector merged;
    merged.reserve(2 * sums.size());
    std::merge(sums.begin(), sums.end(), shifted.begin(), shifted.end(), std::back_inserter(merged));
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    sums = std::move(merged);
  }
  return sums;
}

GoodClaimResult check_good_claim(const IntVector& a, const IntVector& v) {
  if (a.size() > kMaxGoodClaimN) {
    throw CapacityError("good-interval check supports n <= " + std::to_string(kMaxGoodClaimN));
  }
  const Brancher br(a, v);
  if (br.a_total() > kMaxGoodClaimTotal) {
    throw CapacityError("good-interval check supports ||a||_1 <= " + std::to_string(kMaxGoodClaimTotal));
  }
  const IntervalCover cover = br.enumerate_intervals(0, RatVector(a.size(), 0), 0, br.v_total());

  GoodClaimResult out;
  std::size_t next_good = 0;
  for (Integer beta = 0; beta <= br.a_total(); ++beta) {
    const Rational b(beta);
    while (next_good < cover.good.size() && cover.good[next_good].hi <= b) ++next_good;
    bool in_good = false;
    for (std::size_t i = next_good; i < cover.good.size() && cover.good[i].lo < b; ++i) {
      if (cover.good[i].lo < b && b < cover.good[i].hi) {
        in_good = true;
        break;
      }
    }
    const bool by_definition = br.certify(beta).status == CertifyStatus::certified;
    if (in_good != by_definition) {
      out.equal = false;
      out.discrepancies.push_back(beta);
    }
  }
  return out;
}

Cor1Report cor1_report(const IntVector& a, const IntVector& v, const Cor1Options& options) {
  const std::size_t n = a.size();
  const Brancher br(a, v);
  Cor1Report rep;
  rep.mode = options.mode;
  rep.bound = 1 - make_rational(1, pow2(n));
  rep.infeasible_count = 0;
  rep.certified_infeasible_count = 0;

  if (options.mode == CoverageMode::exact) {
    if (n > kMaxCor1ExactN) throw CapacityError("exact infeasible-coverage report supports n <= " + std::to_string(kMaxCor1ExactN));
    if (br.a_total() >= Integer(static_cast<unsigned long>(options.beta_cap))) {
      throw CapacityError("exact infeasible-coverage report needs ||a||_1 < " + std::to_string(options.beta_cap));
    }
    const IntVector sums = all_feasible_sums(a);
    std::size_t next_sum = 0;
    for (Integer beta = 0; beta <= br.a_total(); ++beta) {
      while (next_sum < sums.size() && sums[next_sum] < beta) ++next_sum;
      const bool is_feasible = next_sum < sums.size() && sums[next_sum] == beta;
      const bool certified = br.certify(beta).status == CertifyStatus::certified;
      if (certified && is_feasible) throw InternalError("certified a feasible right-hand side " + to_decimal(beta));
      if (!is_feasible) {
        ++rep.infeasible_count;
        if (certified) ++rep.certified_infeasible_count;
      }
    }
    rep.fraction = rep.infeasible_count == 0 ? Rational(1)
                                             : make_rational(rep.certified_infeasible_count, rep.infeasible_count);
    rep.meets_bound = rep.fraction >= rep.bound;
    return rep;
  }

  if (options.sample_size == 0) throw DomainError("sampled infeasible-coverage report needs sample_size >= 1");
  rep.sample_size = options.sample_size;
  rep.seed = options.seed;
  rep.cross_checked = n <= kMaxFeasibleN;
  for (std::uint64_t j = 0; j < options.sample_size; ++j) {
    const Integer beta = sample_beta(br.a_total(), options.seed, j);
    if (br.certify(beta).status == CertifyStatus::certified) {
      if (rep.cross_checked && feasible(a, beta).feasible) {
        throw InternalError("certified a feasible right-hand side " + to_decimal(beta));
      }
      ++rep.infeasible_count;
      ++rep.certified_infeasible_count;
    } else if (!rep.cross_checked || !feasible(a, beta).feasible) {
      // Without the oracle an uncertified draw is counted as infeasible.
      ++rep.infeasible_count;
    }
  }
  if (rep.infeasible_count == 0) {
    rep.fraction = 1;
    rep.meets_bound = true;
  } else {
    rep.fraction = make_rational(rep.certified_infeasible_count, rep.infeasible_count);
    const Integer missed = rep.infeasible_count - rep.certified_infeasible_count;
    rep.meets_bound = rep.infeasible_count.fits_ulong_p() &&
                      within_sampling_tolerance(missed, rep.infeasible_count.get_ui(), 1 - rep.bound);
  }
  return rep;
}

}  // namespace ssbranch
