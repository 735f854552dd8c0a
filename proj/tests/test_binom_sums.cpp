#include "bincert/binom_sums.hpp"

#include "bincert/lucas.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace bincert;

namespace {

const oracle::Pascal& pascal() {
  static const oracle::Pascal C(640);
  return C;
}

}  // namespace

TEST(CentralBinomials, StreamMatchesPascal) {
  const auto& C = pascal();
  const auto v = central_binomials(301);
  ASSERT_EQ(v.size(), 301u);
  for (long k = 0; k <= 300; ++k) ASSERT_EQ(v[static_cast<std::size_t>(k)], C(2 * k, k));

  CentralBinomialStream s;
  for (long k = 0; k < 40; ++k) {
    ASSERT_EQ(s.index(), static_cast<std::uint64_t>(k));
    ASSERT_EQ(s.value(), C(2 * k, k));
    s.advance();
  }
}

TEST(Sums, KnownValues) {
  EXPECT_EQ(central_sum(1), 1);
  EXPECT_EQ(central_sum(3), 9);
  EXPECT_EQ(nu(3, central_sum(3)), ExtendedValuation(2 * 1 + 0));
  for (long m : {-7L, 1L, 4L, 13L}) {
    EXPECT_EQ(scaled_sum(m, 1), 1);
    EXPECT_EQ(alt_sum(m, 1), 1);
  }
  EXPECT_EQ(scaled_sum(4, 2), Rational(3, 2));
  EXPECT_EQ(alt_sum(1, 3), 3);
  EXPECT_GE(nu(3, alt_sum(1, 3)), ExtendedValuation(1));
}

TEST(Sums, MatchTermByTermOracle) {
  const auto& C = pascal();
  for (long n = 1; n <= 120; ++n) ASSERT_EQ(central_sum(static_cast<std::uint64_t>(n)), oracle::central_sum(C, n));
  for (long m : {-10L, -3L, -1L, 1L, 2L, 4L, 7L, 10L, 20L}) {
    for (long n = 1; n <= 60; ++n) {
      ASSERT_EQ(scaled_sum(m, static_cast<std::uint64_t>(n)), oracle::scaled_sum(C, m, n)) << m << " " << n;
      ASSERT_EQ(alt_sum(m, static_cast<std::uint64_t>(n)), oracle::alt_sum(C, m, n)) << m << " " << n;
    }
  }
}

TEST(Sums, ScaledDenominatorDividesPower) {
  for (long m : {-6L, 4L, 7L, 12L}) {
    for (std::uint64_t n = 1; n <= 40; ++n) {
      const Rational s = scaled_sum(m, n);
      EXPECT_TRUE(mpz_divisible_p(power(m, n - 1).get_mpz_t(), s.get_den_mpz_t())) << m << " " << n;
    }
  }
}

TEST(SunTauraso, KnownValues) {
  const auto s = sun_tauraso_sides(4, 2);
  EXPECT_EQ(s.lhs, 6);
  EXPECT_EQ(s.rhs, 6);
  EXPECT_TRUE(check_sun_tauraso(1, 1));
}

TEST(SunTauraso, RightSideFromOracle) {
  const auto& C = pascal();
  for (long m : {-5L, 3L, 7L}) {
    for (long n = 1; n <= 30; ++n) {
      oracle::Int rhs = 0;
      for (long k = 0; k < n; ++k) rhs += C(2 * n, k) * oracle::lucas(m - 2, 1, n - k);
      EXPECT_EQ(sun_tauraso_sides(m, static_cast<std::uint64_t>(n)).rhs, oracle::Rat(rhs));
    }
  }
}

TEST(Identities, ChainOnGrid) {
  for (long m = -10; m <= 20; ++m) {
    if (m == 0) continue;
    for (std::uint64_t n = 1; n <= 60; ++n) {
      ASSERT_TRUE(check_sun_tauraso(m, n)) << m << " " << n;
      ASSERT_TRUE(check_st2(m, n)) << m << " " << n;
      ASSERT_TRUE(check_sun32(m, n)) << m << " " << n;
    }
  }
}

TEST(Rewrite, KnownValuesAndRange) {
  const auto s = rewrite_identity_sides(1, 0);
  EXPECT_EQ(s.lhs, 1);
  EXPECT_EQ(s.rhs, 1);
  const auto t = rewrite_identity_sides(5, 0);
  EXPECT_EQ(t.lhs, Rational(1, 5));
  EXPECT_EQ(t.rhs, Rational(1, 5));
  for (std::uint64_t n = 1; n <= 200; ++n) {
    for (std::uint64_t k = 0; k < n; ++k) ASSERT_TRUE(check_rewrite_identity(n, k)) << n << " " << k;
  }
  EXPECT_THROW(rewrite_identity_sides(4, 4), DomainError);
}

TEST(St2, KnownValues) {
  EXPECT_TRUE(check_st2(4, 1));
  const auto s = st2_sides(7, 3);
  EXPECT_EQ(s.lhs, s.rhs);
  EXPECT_EQ(s.lhs, Rational(49, 3) * scaled_sum(7, 3));
}

TEST(Sun32, KnownValues) {
  EXPECT_TRUE(check_sun32(1, 1));
  const auto s = sun32_sides(4, 3);
  EXPECT_EQ(s.lhs, alt_sum(4, 3) / 3);
  EXPECT_EQ(s.lhs, s.rhs);
}

TEST(Convolution, KnownValues) {
  for (const Rational& x : {Rational(0), Rational(7, 3), Rational(-2)}) {
    const auto [l, r] = convolution_sides(0, x);
    EXPECT_EQ(l, 1);
    EXPECT_EQ(r, 1);
  }
  const auto [l, r] = convolution_sides(1, 1);
  EXPECT_EQ(l, -1);
  EXPECT_EQ(r, -1);
}

TEST(Convolution, ZeroPointIsFourPower) {
  const auto& C = pascal();
  for (long n = 0; n <= 60; ++n) {
    oracle::Int conv = 0;
    for (long j = 0; j <= n; ++j) conv += C(2 * j, j) * C(2 * (n - j), n - j);
    EXPECT_EQ(conv, power(4, static_cast<std::uint64_t>(n)));
    const auto [l, r] = convolution_sides(static_cast<std::uint64_t>(n), 0);
    EXPECT_EQ(l, 1);
    EXPECT_EQ(r, 1);
  }
}

TEST(Convolution, PolynomialIdentityOnEightPoints) {
  const std::vector<Rational> xs = {0, 1, -1, Rational(1, 2), 2, Rational(-3, 4), 5, Rational(1, 4)};
  const auto& C = pascal();
  for (std::uint64_t n = 0; n <= 60; ++n) {
    for (const auto& x : xs) {
      const auto [l, r] = convolution_sides(n, x);
      ASSERT_EQ(l, r) << n << " " << to_string(x);
    }
  }
  // Left side against a direct oracle sum.
  for (long n = 0; n <= 20; ++n) {
    oracle::Rat lhs = 0;
    for (long k = 0; k <= n; ++k) lhs += oracle::Rat(C(2 * k, k) * C(n, k)) * oracle::rat_pow(oracle::Rat(-1, 2), k);
    EXPECT_EQ(convolution_sides(static_cast<std::uint64_t>(n), Rational(1, 2)).first, lhs);
  }
}

TEST(X1Specialization, KnownValuesAndRange) {
  EXPECT_TRUE(check_x1_specialization(1));
  const auto s = x1_specialization_sides(3);
  EXPECT_EQ(s.lhs, 3);
  EXPECT_EQ(s.rhs, 3);
  for (std::uint64_t n = 1; n <= 300; ++n) ASSERT_TRUE(check_x1_specialization(n)) << n;
}

TEST(QuarterPower, ClosedFormForFour) {
  const auto& C = pascal();
  for (long k = 1; k <= 200; ++k) {
    const auto s = quarter_power_sides(static_cast<std::uint64_t>(k));
    ASSERT_TRUE(s.holds());
    ASSERT_EQ(scaled_sum(4, static_cast<std::uint64_t>(k)) * Rational(power(2, static_cast<std::uint64_t>(2 * k - 1))),
              Rational(k * C(2 * k, k)));
  }
}

TEST(HalfBinomialChain, HoldsToHundred) {
  for (std::uint64_t k = 1; k <= 100; ++k) ASSERT_TRUE(half_binomial_chain_sides(k).holds()) << k;
  const auto s = half_binomial_chain_sides(2);
  EXPECT_EQ(s.lhs, Rational(3, 2));  // 1 + 1/2
}

TEST(FOfA, ResidueIsMinusOneAndIndependentOfM) {
  for (int a : {2, 3}) {
    for (long m : {7L, 10L, 13L}) EXPECT_EQ(f_of_a(a, m).residue, 2) << a << " " << m;
  }
  EXPECT_EQ(f_of_a(4, 7).residue, 2);
  EXPECT_THROW(f_of_a(2, 9), DomainError);
  EXPECT_THROW(f_of_a(1, 7), DomainError);
}

TEST(FOfA, SmallCaseAgainstOracle) {
  const auto& C = pascal();
  const long m = 7, N = 9;
  oracle::Rat f = 0;
  for (long k = 1; k <= N; ++k) {
    oracle::Int inner = 0;
    for (long l = 0; l < k; ++l) {
      const long j = k - l - 1;
      inner += (2 * C(2 * k - 1, l) - C(2 * k, l)) * (j >= 2 ? C(j, 2) : oracle::Int(0));
    }
    oracle::Rat t = oracle::Rat(C(N - 1, k - 1) * inner) / oracle::rat_pow(oracle::Rat(m), static_cast<unsigned long>(k - 1));
    f += (k % 2 == 1) ? t : oracle::Rat(-t);
  }
  f.canonicalize();
  EXPECT_EQ(f_of_a(2, m).value, f);
}

TEST(TripleBlock, AdoptedReadingHoldsToFiveHundred) {
  for (std::uint64_t k = 1; k <= 500; ++k) ASSERT_TRUE(check_triple_block(k)) << k;
}

TEST(TripleBlock, LiteralReadingBreaks) {
  std::vector<std::uint64_t> broken;
  for (std::uint64_t k = 1; k <= 40; ++k) {
    if (!triple_block(k).literal_holds) broken.push_back(k);
  }
  ASSERT_GE(broken.size(), 4u);
  EXPECT_EQ(broken[0], 1u);
  EXPECT_EQ(broken[1], 4u);
  EXPECT_EQ(broken[2], 10u);
  EXPECT_EQ(broken[3], 13u);
  for (auto k : broken) EXPECT_NE(k % 3, 0u);
}

TEST(TripleBlock, BlockSumFromOracle) {
  const auto& C = pascal();
  for (long k = 1; k <= 200; ++k) {
    oracle::Int s = 0;
    for (long l = 0; l < k; ++l) {
      if ((k - l) % 3 == 0) s += 2 * C(2 * k - 1, l) - C(2 * k, l);
    }
    ASSERT_EQ(triple_block(static_cast<std::uint64_t>(k)).block_sum, s);
  }
  const auto t = triple_block(3);
  EXPECT_EQ(t.reduced_binomial, 1);  // k' = 1
  EXPECT_EQ(t.target, 1);
}

TEST(RowFacts, KnownValuesAndRange) {
  const auto r = row_facts(1);
  EXPECT_TRUE(r.alternating_row);
  EXPECT_TRUE(r.truncated_row_sum);
  for (int a = 1; a <= 6; ++a) EXPECT_TRUE(check_row_facts(a)) << a;
}
