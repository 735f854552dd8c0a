#include "bincert/lucas.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace bincert;

TEST(Lucas, KnownValues) {
  for (std::uint64_t n = 0; n <= 100; ++n) EXPECT_EQ(lucas_u({2, 1}, n), BigInt(static_cast<long>(n)));
  EXPECT_EQ(lucas_u({-1, 1}, 4), 1);
  EXPECT_EQ(lucas_u({5, 1}, 2), 5);
  EXPECT_EQ(lucas_u({5, 1}, 0), 0);
}

TEST(Lucas, DiscriminantIsRecomputed) {
  for (long m = -20; m <= 40; ++m) {
    EXPECT_EQ(LucasParams::for_m(m).discriminant(), BigInt(m) * (m - 4));
  }
  EXPECT_EQ((LucasParams{3, -2}).discriminant(), 17);
}

TEST(Lucas, MatchesOracleAndPrefix) {
  for (long A = -6; A <= 6; ++A) {
    for (long B = -3; B <= 3; ++B) {
      const auto prefix = lucas_u_prefix({A, B}, 60);
      ASSERT_EQ(prefix.size(), 61u);
      for (long n = 0; n <= 60; ++n) {
        ASSERT_EQ(prefix[static_cast<std::size_t>(n)], oracle::lucas(A, B, n));
        ASSERT_EQ(lucas_u({A, B}, static_cast<std::uint64_t>(n)), oracle::lucas(A, B, n));
      }
    }
  }
}

TEST(LucasClosed, KnownValues) {
  EXPECT_EQ(lucas_u_closed(7, 2), 5);
  for (std::uint64_t n = 1; n <= 50; ++n) EXPECT_EQ(lucas_u_closed(4, n), Rational(static_cast<long>(n)));
  for (long m = -5; m <= 10; ++m) EXPECT_EQ(lucas_u_closed(m, 1), 1);
  EXPECT_THROW(lucas_u_closed(7, 0), DomainError);
}

TEST(LucasClosed, AgreesWithRecurrence) {
  for (long m = -20; m <= 40; ++m) {
    const auto prefix = lucas_u_prefix(LucasParams::for_m(m), 120);
    for (std::uint64_t n = 1; n <= 120; ++n) {
      ASSERT_EQ(lucas_u_closed(m, n), Rational(prefix[n])) << "m=" << m << " n=" << n;
    }
  }
}

TEST(NegOneOne, CycleAndResidue) {
  EXPECT_EQ(u_neg11_fast(0), 0);
  EXPECT_EQ(u_neg11_fast(5), -1);
  const auto prefix = lucas_u_prefix({-1, 1}, 10003);
  for (std::uint64_t n = 0; n <= 10000; ++n) {
    ASSERT_EQ(BigInt(u_neg11_fast(n)), prefix[n]);
    ASSERT_EQ(prefix[n + 3], prefix[n]);
    ASSERT_EQ(((u_neg11_fast(n) - static_cast<long>(n % 3)) % 3 + 3) % 3, 0);
  }
}

namespace {

const ClaimResult& part(const ClaimResult& r, int k) {
  for (const auto& p : r.parts) {
    if (p.param("part") == k) return p;
  }
  throw std::runtime_error("missing part");
}

}  // namespace

TEST(Lemma21, KnownValues) {
  const ClaimResult a = check_lemma21(4, 5);
  EXPECT_TRUE(a.pass);
  EXPECT_EQ(part(a, 2).measured.valuation, ExtendedValuation(1));

  const ClaimResult b = check_lemma21(7, 1);
  EXPECT_TRUE(b.pass);
  EXPECT_TRUE(part(b, 1).measured.valuation.is_infinite());

  for (std::uint64_t n = 1; n <= 300; ++n) {
    const ClaimResult r = check_lemma21(10, n);
    ASSERT_TRUE(r.pass) << n;
    ASSERT_EQ(part(r, 1).required.bound, 2);
  }
}

TEST(Lemma21, PartsPresentPerCase) {
  const ClaimResult four = check_lemma21(4, 7);
  ASSERT_EQ(four.parts.size(), 2u);
  EXPECT_EQ(four.parts[0].param("part"), 2);
  EXPECT_EQ(four.parts[1].param("part"), 3);
  EXPECT_TRUE(four.parts[1].vacuous);  // modulus 3^0

  const ClaimResult seven = check_lemma21(7, 7);
  ASSERT_EQ(seven.parts.size(), 2u);
  EXPECT_EQ(seven.parts[0].param("part"), 1);
  EXPECT_EQ(seven.parts[1].param("part"), 3);
}

TEST(Lemma21, DomainErrors) {
  EXPECT_THROW(check_lemma21(5, 3), DomainError);
  EXPECT_THROW(check_lemma21(4, 0), DomainError);
  EXPECT_THROW(check_lemma21(1, 3), DomainError);
}

// At m = 4 the middle congruence asks u_n(2,1)/n = 1 to match
// u_n(-1,1)/n mod 3, but u_n(-1,1) = 0 whenever 3 | n.
TEST(Lemma21, MiddleCongruenceFailsAtFourForMultiplesOfThree) {
  for (std::uint64_t n = 1; n <= 300; ++n) {
    const ClaimResult r = check_lemma21(4, n);
    const ClaimResult& mid = part(r, 2);
    EXPECT_EQ(mid.pass, n % 3 != 0) << n;
    if (n % 3 == 0) {
      EXPECT_EQ(mid.measured.valuation, ExtendedValuation(0));
      EXPECT_FALSE(r.pass);
      EXPECT_EQ(r.measured.valuation, ExtendedValuation(0));  // parent mirrors the failing part
    }
    EXPECT_TRUE(part(r, 3).pass);
  }
}

TEST(Lemma21, EveryOtherSubclaimHoldsOnGrid) {
  for (long m = 7; m <= 100; m += 3) {
    for (std::uint64_t n = 1; n <= 300; ++n) {
      const ClaimResult r = check_lemma21(m, n);
      ASSERT_TRUE(r.pass) << "m=" << m << " n=" << n;
    }
  }
}

TEST(Lemma21, MeasuredMatchesOracle) {
  for (long m : {7L, 10L, 28L}) {
    const long t = oracle::nu(3, oracle::Int(m - 1));
    for (long n = 1; n <= 60; ++n) {
      const oracle::Rat diff = oracle::frac(oracle::lucas(m - 2, 1, n), n) - oracle::frac(oracle::lucas(-1, 1, n), n);
      const oracle::Rat c2 = oracle::Rat((n - 1) * (n - 2) / 2);
      const oracle::Rat d1 = diff - oracle::Rat((m - 1) / 3) * c2;
      const ClaimResult r = check_lemma21(m, static_cast<std::uint64_t>(n));
      const auto v1 = part(r, 1).measured.valuation;
      if (d1 == 0) {
        EXPECT_TRUE(v1.is_infinite());
      } else {
        EXPECT_EQ(v1.value(), oracle::nu(3, d1));
      }
      EXPECT_EQ(part(r, 3).required.bound, t - 1);
    }
  }
}
