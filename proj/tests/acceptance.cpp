// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "ssbranch/branching.hpp"
#include "ssbranch/decompose.hpp"
#include "ssbranch/diophantine.hpp"
#include "ssbranch/instance.hpp"
#include "ssbranch/lll.hpp"
#include "ssbranch/oracle.hpp"
#include "test_support.hpp"

namespace ts = ssbranch::testing;
using namespace ssbranch;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Small fractions in machine integers, den > 0.
struct Frac {
  long num;
  long den;
};
bool less(const Frac& x, const Frac& y) { return static_cast<__int128>(x.num) * y.den < static_cast<__int128>(y.num) * x.den; }
bool equal(const Frac& x, const Rational& y) { return make_rational(x.num, x.den) == y; }
long floor_div(long p, long q) { return p >= 0 ? p / q : -((-p + q - 1) / q); }
long ceil_div(long p, long q) { return -floor_div(-p, q); }

std::vector<long> small(const IntVector& xs) {
  std::vector<long> out;
  for (const auto& x : xs) out.push_back(x.get_si());
  return out;
}

// All subsets with their a- and v-weights.
struct Subsets {
  std::vector<long> sa;
  std::vector<long> sv;
  std::vector<std::uint32_t> mask;
  Subsets(const std::vector<long>& a, const std::vector<long>& v) {
    const std::size_t n = a.size();
    for (std::uint32_t m = 0; m < (1U << n); ++m) {
      long x = 0;
      long y = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (m >> i & 1U) {
          x += a[i];
          y += v[i];
        }
      sa.push_back(x);
      sv.push_back(y);
      mask.push_back(m);
    }
  }
};

// min and max of v x over {a x = beta, 0 <= x <= e} from the vertex list.
std::optional<std::pair<Frac, Frac>> eq_range(const std::vector<long>& a, const std::vector<long>& v, const Subsets& s,
                                              long beta) {
  std::optional<Frac> lo;
  std::optional<Frac> hi;
  auto consider = [&](Frac f) {
    if (!lo || less(f, *lo)) lo = f;
    if (!hi || less(*hi, f)) hi = f;
  };
  for (std::size_t k = 0; k < s.sa.size(); ++k) {
    const long rest = beta - s.sa[k];
    if (rest == 0) consider({s.sv[k], 1});
    for (std::size_t f = 0; f < a.size(); ++f) {
      if ((s.mask[k] >> f & 1U) || rest <= 0 || rest >= a[f]) continue;
      consider({s.sv[k] * a[f] + v[f] * rest, a[f]});
    }
  }
  if (!lo) return std::nullopt;
  return std::pair{*lo, *hi};
}

// max{a x : v x <= ell} (maximize) or min{a x : v x >= ell}, over vertices.
Frac ineq_value(const std::vector<long>& a, const std::vector<long>& v, const Subsets& s, long ell, bool maximize) {
  std::optional<Frac> best;
  auto consider = [&](Frac f) {
    if (!best || (maximize ? less(*best, f) : less(f, *best))) best = f;
  };
  for (std::size_t k = 0; k < s.sa.size(); ++k) {
    if (maximize ? s.sv[k] <= ell : s.sv[k] >= ell) consider({s.sa[k], 1});
    const long rest = ell - s.sv[k];
    for (std::size_t f = 0; f < a.size(); ++f) {
      if ((s.mask[k] >> f & 1U) || v[f] == 0 || rest <= 0 || rest >= v[f]) continue;
      consider({s.sa[k] * v[f] + a[f] * rest, v[f]});
    }
  }
  return *best;
}

// Reachable subset sums by a value DP (independent of the library's oracle).
std::vector<char> reachable(const std::vector<long>& a) {
  long total = 0;
  for (long x : a) total += x;
  std::vector<char> r(total + 1, 0);
  r[0] = 1;
  for (long x : a)
    for (long s = total; s >= x; --s) r[s] = r[s] || r[s - x];
  return r;
}

// Hand-scale decomposition a = lambda v + r with lambda >= 1 and
// ||r||_1 <= lambda / 4, gcd(a) = 1.
struct Toy {
  IntVector a;
  IntVector v;
  Rational lambda;
  RatVector r;
};

Toy make_toy(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    Toy t;
    const long q = ts::uniform(rng, 0, 1) == 0 ? 1 : ts::uniform(rng, 2, 7);
    t.lambda = Rational(ts::uniform(rng, 40 * q, 150 * q), q);
    t.lambda.canonicalize();
    const long budget = floor_of(t.lambda / 4).get_si();
    long used = 0;
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) {
      t.v.emplace_back(ts::uniform(rng, 1, 3));
      const Integer base = round_half_to_zero(t.lambda * t.v[i]);
      long delta = ts::uniform(rng, -3, 3);
      Integer ai = base + delta;
      Rational ri = Rational(ai) - t.lambda * t.v[i];
      used += ceil_of(abs(ri)).get_si();
      t.a.push_back(ai);
      t.r.push_back(ri);
      if (ai < 1) ok = false;
    }
    if (!ok || used > budget || gcd_of(t.a) != 1) continue;
    return t;
  }
}

Toy reference_toy() {
  Toy t;
  t.a = {100, 101, 102};
  t.v = {1, 1, 1};
  t.lambda = 101;
  t.r = {-1, 0, 1};
  return t;
}

std::vector<Toy> soundness_family() {
  std::mt19937_64 rng(20260);
  std::vector<Toy> out{reference_toy()};
  // (m, m+1, ..., m+n-1) = (m + (n-1)/2) e + r, as in the reference toy.
  for (long m : {60L, 97L, 150L}) {
    Toy t;
    const std::size_t n = 5;
    for (std::size_t i = 0; i < n; ++i) {
      t.a.emplace_back(m + static_cast<long>(i));
      t.v.emplace_back(1);
    }
    t.lambda = m + 2;
    for (std::size_t i = 0; i < n; ++i) t.r.push_back(Rational(t.a[i]) - t.lambda);
    out.push_back(t);
  }
  while (out.size() < 50) out.push_back(make_toy(rng, 2 + out.size() % 15));
  return out;
}

// --- criteria ----------------------------------------------------------------

Outcome criterion_ft_bounds() {
  Outcome o;
  int checked = 0;
  for (std::size_t n : {10u, 11u, 12u}) {
    for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
      const Instance inst = generate_instance(n, seed);
      const Decomposition dec = decompose_ft(inst);
      const unsigned long nn = n;
      bool ok = l1_norm(std::span<const Integer>(dec.v)) <= pow2(2 * nn * nn) &&
                l1_norm(std::span<const Rational>(dec.r)) * pow2(nn + 2) <= dec.lambda &&
                dec.lambda >= Rational(pow2(nn + 2));
      for (std::size_t i = 0; i < n; ++i) {
        ok = ok && dec.v[i] >= 0 && dec.lambda * dec.v[i] + dec.r[i] == Rational(inst.weights()[i]);
      }
      if (!ok) {
        o.pass = false;
        o.detail += " fail(n=" + std::to_string(n) + ",seed=" + std::to_string(seed) + ")";
      }
      ++checked;
    }
  }
  o.detail = std::to_string(checked) + " decompositions checked" + o.detail;
  return o;
}

Outcome criterion_dioph() {
  Outcome o;
  std::mt19937_64 rng(500);
  int bad = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + trial % 6;
    RatVector alpha;
    for (std::size_t i = 0; i < n; ++i) {
      Rational x(ts::uniform(rng, -1000, 1000), ts::uniform(rng, 1, 1000));
      x.canonicalize();
      alpha.push_back(x);
    }
    const Integer N(ts::uniform(rng, 1, 64));
    const ApproxResult r = dioph_approx(alpha, N);
    Rational err = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Rational e = abs(alpha[i] * r.q - r.v[i]);
      if (e > err) err = e;
    }
    const unsigned long nn = n;
    const bool ok = r.q >= 1 && err * N <= 1 && ipow(r.q, 4) <= pow2(nn * (nn + 1)) * ipow(N, 4 * nn);
    if (!ok) ++bad;
  }
  o.pass = bad == 0;
  o.detail = "500 cases, " + std::to_string(bad) + " violations";
  return o;
}

struct SoundnessTally {
  long certified = 0;
  long checked = 0;
  long counterexamples = 0;
};

Outcome criterion_soundness(const std::vector<Toy>& family, std::vector<long>& uncertified_counts) {
  Outcome o;
  SoundnessTally t;
  std::size_t max_n = 0;
  for (const Toy& toy : family) {
    max_n = std::max(max_n, toy.a.size());
    const std::vector<long> a = small(toy.a);
    const std::vector<char> reach = reachable(a);
    const long total = static_cast<long>(reach.size()) - 1;
    Brancher br(toy.a, toy.v);
    long uncertified = 0;
    for (long beta = -5; beta <= total + 5; ++beta) {
      ++t.checked;
      const CertifyOutcome out = br.certify(Integer(beta));
      const bool in_range = beta >= 0 && beta <= total;
      if (out.status == CertifyStatus::certified) {
        ++t.certified;
        const bool sound = in_range && !reach[beta] && br.verify(*out.certificate) &&
                           check_certificate_witnesses(toy.a, toy.v, *out.certificate);
        if (!sound) ++t.counterexamples;
      } else if (in_range) {
        ++uncertified;
      }
      if (out.status == CertifyStatus::trivially_infeasible && in_range) ++t.counterexamples;
    }
    uncertified_counts.push_back(uncertified);
  }
  o.pass = t.counterexamples == 0 && family.size() >= 50 && max_n <= 16;
  o.detail = std::to_string(family.size()) + " instances (n <= " + std::to_string(max_n) + "), " +
             std::to_string(t.checked) + " right-hand sides, " + std::to_string(t.certified) + " certified, " +
             std::to_string(t.counterexamples) + " counterexamples";
  return o;
}

Outcome criterion_good_claim() {
  Outcome o;
  std::mt19937_64 rng(200);
  int disagreements = 0;
  long betas = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const IntVector A = ts::random_weights(rng, n, 500 / static_cast<long>(n));
    const IntVector V = ts::random_direction(rng, n, 3);
    const std::vector<long> a = small(A);
    const std::vector<long> v = small(V);
    const Subsets s(a, v);
    long total = 0;
    long vt = 0;
    for (std::size_t i = 0; i < n; ++i) {
      total += a[i];
      vt += v[i];
    }
    std::vector<std::pair<Frac, Frac>> good;
    for (long k = 0; k < vt; ++k) good.push_back({ineq_value(a, v, s, k, true), ineq_value(a, v, s, k + 1, false)});

    const GoodClaimResult lib = check_good_claim(A, V);
    if (!lib.equal) ++disagreements;
    const Brancher br(A, V);
    for (long beta = 0; beta <= total; ++beta, ++betas) {
      auto range = eq_range(a, v, s, beta);
      const bool by_definition = floor_div(range->second.num, range->second.den) <
                                 ceil_div(range->first.num, range->first.den);
      bool by_union = false;
      for (const auto& [lo, hi] : good) by_union = by_union || (less(lo, {beta, 1}) && less({beta, 1}, hi));
      bool lib_certified = false;
      if (gcd_of(A) == 1) lib_certified = br.certify(Integer(beta)).status == CertifyStatus::certified;
      else lib_certified = by_definition;
      if (by_definition != by_union || by_definition != lib_certified) ++disagreements;
    }
  }
  o.pass = disagreements == 0;
  o.detail = "200 pairs, " + std::to_string(betas) + " right-hand sides, " + std::to_string(disagreements) +
             " discrepancies";
  return o;
}

// Interval and counting properties of one decomposition, with the number of
// uncertified right-hand sides in [0, ||a||_1] counted by `certify`.
bool counting_holds(const Toy& t, long uncertified) {
  const Brancher br(t.a, t.v);
  const IntervalCover cover = br.enumerate_intervals(t.lambda, t.r, 0, br.v_total());
  CoverageOptions opt;
  const CoverageStats st = coverage_stats(t.a, t.v, t.lambda, t.r, opt);
  const Rational r1 = l1_norm(std::span<const Rational>(t.r));
  bool ok = st.within_bound && st.bad_fraction <= 2 * (r1 + 1) / t.lambda;
  ok = ok && st.g + st.b == br.a_total() + 1 && st.b == uncertified;
  ok = ok && Integer(static_cast<unsigned long>(cover.good.size())) <= br.v_total();
  ok = ok && Rational(st.b) <= (br.v_total() + 1) * (r1 + 1);
  for (const auto& g : cover.good) ok = ok && g.hi - g.lo >= t.lambda - r1 && g.hi - g.lo > 0;
  for (std::size_t k = 0; k < cover.bad.size(); ++k) {
    ok = ok && cover.bad[k].lo <= cover.bad[k].hi && cover.bad[k].hi - cover.bad[k].lo <= r1;
    if (k + 1 < cover.bad.size()) ok = ok && cover.bad[k].hi < cover.bad[k + 1].lo;
  }
  return ok && cover.bad.front().lo == 0 && cover.bad.back().hi == Rational(br.a_total());
}

Outcome criterion_counting(const std::vector<Toy>& family, const std::vector<long>& uncertified_counts) {
  Outcome o;
  int failures = 0;
  for (std::size_t idx = 0; idx < family.size(); ++idx) {
    if (!counting_holds(family[idx], uncertified_counts[idx])) ++failures;
  }

  // Projection decompositions of random pairs that meet lambda >= 1 and
  // ||r||_1 < lambda.
  std::mt19937_64 rng(55);
  int projected = 0;
  while (projected < 300) {
    const std::size_t n = 1 + projected % 6;
    Toy t;
    t.a = ts::random_weights(rng, n, 200);
    t.v = ts::random_direction(rng, n, 3);
    const Projection p = project_onto(to_rational(t.a), to_rational(t.v));
    if (!(p.lambda >= 1 && l1_norm(std::span<const Rational>(p.r)) < p.lambda)) continue;
    t.lambda = p.lambda;
    t.r = p.r;
    const Brancher br(t.a, t.v);
    long uncertified = 0;
    for (Integer beta = 0; beta <= br.a_total(); ++beta) {
      if (br.certify(beta).status != CertifyStatus::certified) ++uncertified;
    }
    if (!counting_holds(t, uncertified)) ++failures;
    ++projected;
  }

  // Reference numbers for a = (100, 101, 102) = 101 (1, 1, 1) + (-1, 0, 1).
  const Toy& toy = family.front();
  const IntervalCover cover = enumerate_intervals(toy.a, toy.v, toy.lambda, toy.r, 0, 3);
  const CoverageStats st = coverage_stats(toy.a, toy.v, toy.lambda, toy.r, CoverageOptions{});
  std::vector<Rational> lengths;
  for (const auto& g : cover.good) lengths.push_back(g.hi - g.lo);
  const bool reference = lengths == std::vector<Rational>{100, 99, 100} && st.b == 8 && st.b <= 12 &&
                         st.bad_fraction == make_rational(8, 304);

  o.pass = failures == 0 && reference;
  o.detail = std::to_string(family.size() + projected) + " enumerable decompositions, " + std::to_string(failures) +
             " failures; reference toy: lengths (100, 99, 100), b = 8 <= 12, bad fraction 8/304" +
             (reference ? "" : " MISMATCH");
  return o;
}

Outcome criterion_sampled() {
  Outcome o;
  std::ostringstream detail;
  for (std::uint64_t seed : {42u, 7u, 99u}) {
    const Instance inst = generate_instance(10, seed);
    const Decomposition dec = decompose_ft(inst);
    CoverageOptions opt;
    opt.mode = CoverageMode::sampled;
    opt.sample_size = 10'000;
    opt.seed = 1000 + seed;
    const CoverageStats st = coverage_stats(inst.weights(), dec.v, dec.lambda, dec.r, opt);
    // Tolerance rule restated: b/m <= 10 p + 3 sqrt(p(1-p)/m), so with
    // t = b/m - 10p either t <= 0 or t^2 m <= 9 p (1 - p).
    const Rational p = 2 * (l1_norm(std::span<const Rational>(dec.r)) + 1) / dec.lambda;
    const Rational excess = make_rational(st.b, 10'000) - 10 * p;
    const bool rule = excess <= 0 || excess * excess * 10'000 <= 9 * p * (1 - p);

    // Soundness on the drawn right-hand sides: certified ones are not subset sums.
    const IntVector sums = all_feasible_sums(inst.weights());
    const std::set<Integer> sum_set(sums.begin(), sums.end());
    const Brancher br(inst.weights(), dec.v);
    long unsound = 0;
    for (std::uint64_t j = 0; j < 10'000; ++j) {
      const Integer beta = sample_beta(inst.l1(), opt.seed, j);
      const CertifyOutcome c = br.certify(beta);
      if (c.status == CertifyStatus::certified && (sum_set.count(beta) || !br.verify(*c.certificate))) ++unsound;
    }
    Cor1Options copt;
    copt.mode = CoverageMode::sampled;
    copt.sample_size = 10'000;
    copt.seed = opt.seed;
    const Cor1Report rep = cor1_report(inst.weights(), dec.v, copt);

    o.pass = o.pass && rule && st.within_bound && unsound == 0 && st.g + st.b == 10'000 && rep.meets_bound &&
             rep.cross_checked;
    detail << " seed " << seed << ": " << st.b << "/10000 uncertified, certified share of infeasible draws "
           << rep.fraction.get_str() << ";";
  }
  o.detail = "n = 10, 3 instances:" + detail.str();
  return o;
}

Outcome criterion_lll() {
  Outcome o;
  std::mt19937_64 rng(1000);
  int quality_fail = 0;
  int invariant_fail = 0;
  int quality_checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t d = 1 + trial % 8;
    const IntMatrix cols = ts::random_basis(rng, d, -50, 50);
    const Basis b = Basis::from_integer_columns(cols);
    const ReducedBasis red = lll_reduce(b);

    // Reduction conditions, from an independent Gram-Schmidt.
    auto [mu, norms] = ts::classical_gso(red.basis.cols);
    bool ok = true;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < i; ++j) ok = ok && abs(mu[i][j]) <= Rational(1, 2);
      if (i > 0) ok = ok && norms[i] >= (kDefaultDelta - mu[i][i - 1] * mu[i][i - 1]) * norms[i - 1];
    }
    // Unimodularity and lattice preservation.
    ok = ok && ts::multiply(red.U, red.U_inv) == identity_matrix(d);
    for (std::size_t k = 0; k < d && ok; ++k) {
      for (std::size_t row = 0; row < d; ++row) {
        Integer s = 0;
        for (std::size_t i = 0; i < d; ++i) s += cols[i][row] * red.U[i][k];
        ok = ok && Rational(s) == red.basis.cols[k][row];
      }
    }
    ok = ok && ts::determinant(ts::gram_of_columns(red.basis.cols)) == ts::determinant(ts::gram_of_columns(b.cols));
    if (!ok) ++invariant_fail;

    if (d <= 5) {
      IntMatrix reduced(d, IntVector(d));
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t row = 0; row < d; ++row) reduced[k][row] = red.basis.cols[k][row].get_num();
      const long l1 = ts::lambda1_sq_small(reduced);
      Rational first = 0;
      for (const auto& x : red.basis.cols[0]) first += x * x;
      if (first > Rational(pow2(d - 1) * l1)) ++quality_fail;
      ++quality_checked;
    }
  }
  o.pass = quality_fail == 0 && invariant_fail == 0;
  o.detail = "1000 bases (d <= 8): " + std::to_string(invariant_fail) + " invariant failures; " +
             std::to_string(quality_checked) + " bases (d <= 5): " + std::to_string(quality_fail) +
             " first-vector bound failures";
  return o;
}

Outcome criterion_lp() {
  Outcome o;
  std::mt19937_64 rng(8);
  long comparisons = 0;
  long mismatches = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + trial % 8;
    const IntVector A = ts::random_weights(rng, n, 1000);
    IntVector V;
    for (std::size_t i = 0; i < n; ++i) V.emplace_back(ts::uniform(rng, 0, 10));
    if (l1_norm(std::span<const Integer>(V)) == 0) V[0] = 1;
    const std::vector<long> a = small(A);
    const std::vector<long> v = small(V);
    const Subsets s(a, v);
    long total = 0;
    long vt = 0;
    for (std::size_t i = 0; i < n; ++i) {
      total += a[i];
      vt += v[i];
    }
    const Brancher br(A, V);
    std::vector<long> betas{0, total, ts::uniform(rng, 0, total), ts::uniform(rng, 0, total), ts::uniform(rng, 0, total)};
    for (long beta : betas) {
      auto range = eq_range(a, v, s, beta);
      for (Sense sense : {Sense::min, Sense::max}) {
        ++comparisons;
        const auto e = br.lp_extreme_eq(Integer(beta), sense);
        if (!e) {
          ++mismatches;
          continue;
        }
        const Frac want = sense == Sense::min ? range->first : range->second;
        Rational ax = 0;
        Rational vx = 0;
        int fractional = 0;
        bool in_box = true;
        for (std::size_t i = 0; i < n; ++i) {
          ax += e->arg[i] * A[i];
          vx += e->arg[i] * V[i];
          in_box = in_box && e->arg[i] >= 0 && e->arg[i] <= 1;
          if (e->arg[i] != 0 && e->arg[i] != 1) ++fractional;
        }
        if (!equal(want, e->value) || ax != beta || vx != e->value || !in_box || fractional > 1) ++mismatches;
      }
    }
    for (long ell : {0L, vt, ts::uniform(rng, 0, vt), ts::uniform(rng, 0, vt)}) {
      for (Sense sense : {Sense::min, Sense::max}) {
        ++comparisons;
        const LpExtreme e = br.lp_extreme_ineq(Integer(ell), sense);
        const Frac want = ineq_value(a, v, s, ell, sense == Sense::max);
        Rational ax = 0;
        Rational vx = 0;
        for (std::size_t i = 0; i < n; ++i) {
          ax += e.arg[i] * A[i];
          vx += e.arg[i] * V[i];
        }
        const bool feasible = sense == Sense::max ? vx <= ell : vx >= ell;
        if (!equal(want, e.value) || ax != e.value || !feasible) ++mismatches;
      }
    }
    // Outside [0, ||a||_1] the relaxation is empty.
    comparisons += 2;
    if (br.lp_extreme_eq(Integer(total + 1), Sense::max) || br.lp_extreme_eq(Integer(-1), Sense::min)) ++mismatches;
  }
  o.pass = mismatches == 0;
  o.detail = "1000 instances, " + std::to_string(comparisons) + " LP comparisons, " + std::to_string(mismatches) +
             " mismatches";
  return o;
}

}  // namespace

int main() {
  std::vector<long> uncertified;
  const std::vector<Toy> family = soundness_family();

  struct Entry {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Entry> entries{
      {1, "approximation-method decomposition bounds, n in {10, 11, 12} x 5 seeds", criterion_ft_bounds},
      {2, "simultaneous approximation error and multiplier bounds", criterion_dioph},
      {3, "certificate soundness, every right-hand side in [-5, ||a||_1 + 5]",
       [&] { return criterion_soundness(family, uncertified); }},
      {4, "certified set equals good-interval union", criterion_good_claim},
      {5, "interval counting and coverage bound", [&] { return criterion_counting(family, uncertified); }},
      {6, "sampled coverage at n = 10 within tolerance", criterion_sampled},
      {7, "LLL first-vector quality and reduction invariants", criterion_lll},
      {8, "greedy LPs equal vertex enumeration", criterion_lp},
  };

  int failed = 0;
  for (const auto& e : entries) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = e.run();
    } catch (const std::exception& ex) {
      out.pass = false;
      out.detail = std::string("exception: ") + ex.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %d: %s: %s (%.1fs)\n", out.pass ? "PASS" : "FAIL", e.id, e.name, out.detail.c_str(),
                secs);
    std::fflush(stdout);
    if (!out.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
