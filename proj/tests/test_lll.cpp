#include <gtest/gtest.h>

#include "ssbranch/errors.hpp"
#include "ssbranch/lll.hpp"
#include "test_support.hpp"

namespace ssbranch {
namespace {

namespace ts = ssbranch::testing;

Basis cols(std::initializer_list<std::initializer_list<long>> cs) {
  IntMatrix m;
  for (auto c : cs) {
    IntVector col;
    for (long x : c) col.emplace_back(x);
    m.push_back(col);
  }
  return Basis::from_integer_columns(m);
}

TEST(GramSchmidt, Identity) {
  GsoData g = gram_schmidt(cols({{1, 0}, {0, 1}}));
  EXPECT_EQ(g.mu[1][0], 0);
  EXPECT_EQ(g.norms_sq, (RatVector{1, 1}));
}

TEST(GramSchmidt, HandExample) {
  GsoData g = gram_schmidt(cols({{1, 1}, {0, 1}}));
  EXPECT_EQ(g.mu[1][0], Rational(1, 2));
  EXPECT_EQ(g.norms_sq, (RatVector{2, Rational(1, 2)}));
}

TEST(GramSchmidt, ProductOfNormsIsGramDeterminant) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    IntMatrix c = ts::random_basis(rng, 4, -20, 20);
    Basis b = Basis::from_integer_columns(c);
    GsoData g = gram_schmidt(b);
    Rational prod = 1;
    for (const auto& x : g.norms_sq) prod *= x;
    EXPECT_EQ(prod, ts::determinant(ts::gram_of_columns(b.cols)));
  }
}

TEST(GramSchmidt, DependentColumnsRaise) {
  EXPECT_THROW(gram_schmidt(cols({{1, 2}, {2, 4}})), RankError);
  EXPECT_THROW(lll_reduce(cols({{1, 2, 3}, {2, 4, 6}})), RankError);
  EXPECT_THROW(is_reduced(cols({{1, 2}, {2, 4}})), RankError);
}

TEST(IsReduced, Examples) {
  EXPECT_TRUE(is_reduced(cols({{1, 0}, {0, 1}})));
  EXPECT_FALSE(is_reduced(cols({{1, 1}, {0, 1}})));
}

TEST(Lll, IdentityUnchanged) {
  Basis id = cols({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  ReducedBasis r = lll_reduce(id);
  EXPECT_EQ(r.basis, id);
  EXPECT_EQ(r.U, identity_matrix(3));
  EXPECT_EQ(r.U_inv, identity_matrix(3));
  EXPECT_EQ(r.stats.swaps, 0u);
}

TEST(Lll, UnitSquare) {
  ReducedBasis r = lll_reduce(cols({{1, 1}, {0, 1}}));
  EXPECT_EQ(r.basis.cols[0][0] * r.basis.cols[0][0] + r.basis.cols[0][1] * r.basis.cols[0][1], 1);
  EXPECT_EQ(ts::lambda1_sq(r.basis.cols), 1);
  EXPECT_EQ(abs(ts::determinant(ts::columns_to_matrix(r.basis.cols))), 1);
  EXPECT_TRUE(is_reduced(r.basis));
}

TEST(Lll, FirstVectorWithinFactorOfShortest) {
  Basis b = cols({{201, 0}, {188, 1}});
  ReducedBasis r = lll_reduce(b);
  // Exhaustive shortest vector over coefficients in [-300, 300]^2.
  const Rational shortest = ts::shortest_in_box(b.cols, {300, 300});
  EXPECT_EQ(shortest, ts::lambda1_sq(r.basis.cols));
  Rational first = 0;
  for (const auto& x : r.basis.cols[0]) first += x * x;
  EXPECT_LE(first, 2 * shortest);
  EXPECT_TRUE(is_reduced(r.basis));
}

TEST(Lll, TransformationsAgreeWithMatrixInverse) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t d = 2 + trial % 5;
    IntMatrix c = ts::random_basis(rng, d, -30, 30);
    Basis b = Basis::from_integer_columns(c);
    ReducedBasis r = lll_reduce(b);
    // U_inv tracked incrementally must be the exact inverse of U.
    auto inv = ts::inverse(ts::to_rat(r.U));
    ASSERT_TRUE(inv.has_value());
    EXPECT_EQ(*inv, ts::to_rat(r.U_inv));
    EXPECT_EQ(ts::multiply(r.U, r.U_inv), identity_matrix(d));
    // B' = B U with columns: b'_k = sum_i U[i][k] b_i.
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t row = 0; row < d; ++row) {
        Rational s = 0;
        for (std::size_t i = 0; i < d; ++i) s += b.cols[i][row] * r.U[i][k];
        EXPECT_EQ(s, r.basis.cols[k][row]);
      }
    }
    EXPECT_EQ(ts::determinant(ts::gram_of_columns(r.basis.cols)), ts::determinant(ts::gram_of_columns(b.cols)));
  }
}

TEST(Lll, RationalBasis) {
  Basis b;
  b.cols = {{Rational(1, 2), Rational(1, 3)}, {Rational(5, 7), Rational(-2, 9)}};
  ReducedBasis r = lll_reduce(b);
  EXPECT_TRUE(is_reduced(r.basis));
  EXPECT_EQ(ts::multiply(r.U, r.U_inv), identity_matrix(2));
  EXPECT_EQ(r.gso.norms_sq, gram_schmidt(r.basis).norms_sq);
}

TEST(Lll, OtherDelta) {
  std::mt19937_64 rng(9);
  const Rational delta(99, 100);
  for (int trial = 0; trial < 20; ++trial) {
    Basis b = Basis::from_integer_columns(ts::random_basis(rng, 5, -40, 40));
    ReducedBasis r = lll_reduce(b, delta);
    EXPECT_TRUE(is_reduced(r.basis, delta));
  }
  Basis b = cols({{1, 0}, {0, 1}});
  EXPECT_THROW(lll_reduce(b, Rational(1, 4)), DomainError);
  EXPECT_THROW(lll_reduce(b, Rational(1)), DomainError);
}

TEST(Lll, GramFormMatchesBasisForm) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    IntMatrix c = ts::random_basis(rng, 4, -15, 15);
    Basis b = Basis::from_integer_columns(c);
    IntMatrix gram(4, IntVector(4, 0));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t k = 0; k < 4; ++k) gram[i][j] += c[i][k] * c[j][k];
    GramReduction g = lll_reduce_gram(gram);
    ReducedBasis r = lll_reduce(b);
    EXPECT_EQ(g.U, r.U);
    EXPECT_EQ(ts::to_rat(g.gram), ts::gram_of_columns(r.basis.cols));
  }
}

}  // namespace
}  // namespace ssbranch
