#include "bincert/padic.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace bincert;

namespace {

Rational random_3_integral(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-100000, 100000);
  std::uniform_int_distribution<long> den(1, 2000);
  long d = den(rng);
  while (d % 3 == 0) d = den(rng);
  Rational r(num(rng), d);
  r.canonicalize();
  return r;
}

// x == y (mod 3^t) as exact rationals.
bool rational_agrees(const TruncatedPadic& x, const Rational& y, std::int64_t t) {
  return congruent_mod_power(3, t, x.to_rational(), y);
}

}  // namespace

TEST(TruncatedPadic, Normalization) {
  const auto x = TruncatedPadic::from_int(3, 18, 10);
  EXPECT_EQ(x.exponent(), 2);
  EXPECT_EQ(x.precision(), 10);
  EXPECT_EQ(x.unit(), static_cast<u128>(2));
  EXPECT_EQ(x.valuation(), ExtendedValuation(2));
  EXPECT_EQ(x.absolute_precision(), 12);

  const auto z = TruncatedPadic::from_int(3, 0, 10);
  EXPECT_TRUE(z.is_zero());
  EXPECT_TRUE(z.valuation().is_infinite());
  EXPECT_EQ(z.absolute_precision(), 10);

  const auto r = TruncatedPadic::from_residue(3, 27 * 5, 5);  // 135 mod 243
  EXPECT_EQ(r.exponent(), 3);
  EXPECT_EQ(r.precision(), 2);

  const auto hidden = TruncatedPadic::from_residue(3, 243, 5);  // 0 mod 3^5
  EXPECT_TRUE(hidden.is_zero());
  EXPECT_EQ(hidden.absolute_precision(), 5);

  EXPECT_EQ(TruncatedPadic::max_precision(3), 79);
  EXPECT_THROW(TruncatedPadic::from_int(3, 1, 80), PrecisionError);
}

TEST(TruncatedPadic, RationalEmbeddingIsExact) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const Rational r = random_3_integral(rng);
    for (int n : {1, 7, 30, 60}) {
      const auto x = TruncatedPadic::from_rational(3, r, n);
      if (r == 0) continue;
      EXPECT_EQ(x.valuation(), nu(3, r));
      EXPECT_TRUE(rational_agrees(x, r, x.absolute_precision()));
    }
  }
  const auto third = TruncatedPadic::from_rational(3, Rational(20, 27), 5);
  EXPECT_EQ(third.exponent(), -3);
}

TEST(TruncatedPadic, EmbeddingIsHomomorphism) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    const Rational r = random_3_integral(rng), s = random_3_integral(rng);
    for (int n : {5, 20, 45, 60}) {
      const auto er = TruncatedPadic::from_rational(3, r, n);
      const auto es = TruncatedPadic::from_rational(3, s, n);
      EXPECT_TRUE((er * es).congruent(TruncatedPadic::from_rational(3, r * s, n)));
      EXPECT_TRUE((er + es).congruent(TruncatedPadic::from_rational(3, r + s, n)));
      EXPECT_TRUE((er - es).congruent(TruncatedPadic::from_rational(3, r - s, n)));
      if (s != 0) EXPECT_TRUE((er / es).congruent(TruncatedPadic::from_rational(3, r / s, n)));
    }
  }
}

TEST(TruncatedPadic, RingLaws) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const int n = 30;
    const auto x = TruncatedPadic::from_rational(3, random_3_integral(rng), n);
    const auto y = TruncatedPadic::from_rational(3, random_3_integral(rng), n);
    const auto z = TruncatedPadic::from_rational(3, random_3_integral(rng), n);
    EXPECT_TRUE(((x + y) + z).congruent(x + (y + z)));
    EXPECT_TRUE((x * (y + z)).congruent(x * y + x * z));
    EXPECT_TRUE((x * y).congruent(y * x));
  }
}

TEST(TruncatedPadic, PrecisionIsNeverOverclaimed) {
  // 1 and 1 + 3^5 are indistinguishable at absolute precision 5.
  const auto a = TruncatedPadic::from_int(3, 1, 5);
  const auto b = TruncatedPadic::from_int(3, 1 + 243, 20);
  const auto d = b - a;
  EXPECT_TRUE(d.is_zero());
  EXPECT_EQ(d.absolute_precision(), 5);

  // Cancellation: 1 - 10 = -9 keeps only what the operands knew.
  const auto c = TruncatedPadic::from_int(3, 1, 8) - TruncatedPadic::from_int(3, 10, 8);
  EXPECT_EQ(c.exponent(), 2);
  EXPECT_EQ(c.absolute_precision(), 8);
  EXPECT_EQ(c.precision(), 6);

  // Multiplication by a multiple of 3 shifts the window, losing nothing.
  const auto m = TruncatedPadic::from_int(3, 5, 10) * TruncatedPadic::from_int(3, 3, 10);
  EXPECT_EQ(m.precision(), 10);
  EXPECT_EQ(m.absolute_precision(), 11);
}

TEST(TruncatedPadic, ResidueAndShift) {
  const auto x = TruncatedPadic::from_rational(3, Rational(1, 2), 10);
  EXPECT_EQ(x.residue(2), 5);
  EXPECT_THROW((void)x.residue(11), PrecisionError);
  EXPECT_THROW((void)x.shifted(-1).residue(1), DomainError);
  EXPECT_EQ(x.shifted(3).exponent(), 3);
  EXPECT_EQ(x.shifted(3).residue(4), 27 * 2);
}

TEST(TruncatedPadic, InverseOfUnits) {
  for (long u = 1; u < 500; ++u) {
    if (u % 3 == 0) continue;
    const auto x = TruncatedPadic::from_int(3, u, 40);
    EXPECT_TRUE((x * x.inverse()).congruent(TruncatedPadic::from_int(3, 1, 40))) << u;
  }
  EXPECT_THROW(TruncatedPadic::zero(3, 4).inverse(), DomainError);
}

TEST(QuadExt, ArithmeticRules) {
  const int n = 20;
  const auto x = QuadExtElement::from_rationals(Rational(2), Rational(1, 2), n);
  const auto y = QuadExtElement::from_rationals(Rational(-5, 7), Rational(3), n);
  // (2 + r/2)(-5/7 + 3r) = (-10/7 - 3*3/2) + (6 - 5/14) r
  const auto expected = QuadExtElement::from_rationals(Rational(-10, 7) - Rational(9, 2), Rational(6) - Rational(5, 14), n);
  const auto prod = x * y;
  EXPECT_TRUE((prod - expected).is_zero());
  EXPECT_TRUE(((prod / y) - x).is_zero());
  EXPECT_EQ(QuadExtElement::root(n).valuation(), ExtendedValuation(1));
  EXPECT_EQ(QuadExtElement::from_rationals(3, 0, n).valuation(), ExtendedValuation(2));
  EXPECT_TRUE((QuadExtElement::root(n) * QuadExtElement::root(n) - QuadExtElement::from_rationals(-3, 0, n)).is_zero());
}

TEST(QuadExt, NormValuationIsTwiceElementValuation) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 100; ++i) {
    const auto x = QuadExtElement::from_rationals(random_3_integral(rng), random_3_integral(rng), 30);
    if (x.is_zero()) continue;
    // In half digits nu(x) + nu(conj x) = nu(N(x)) = 2 nu_3(N(x)).
    EXPECT_EQ(2 * x.norm().valuation().value(), 2 * x.valuation().value());
    EXPECT_EQ(x.conjugate().valuation(), x.valuation());
  }
}

TEST(CubeRoot, OmegaCubedIsOne) {
  for (int n : {1, 5, 20, 39, 40}) EXPECT_TRUE(cube_root_check(n)) << n;
  EXPECT_THROW(cube_root_check(0), DomainError);
}

TEST(Log, TrivialAndDivergent) {
  const auto one = TruncatedPadic::from_int(3, 1, 20);
  const auto l = padic_log(one, 5);
  EXPECT_TRUE(l.value.is_zero());
  EXPECT_THROW(padic_log(TruncatedPadic::from_int(3, 2, 20), 30), DomainError);
  EXPECT_THROW(padic_log(TruncatedPadic::from_int(3, 4, 30), 3), PrecisionError);
}

TEST(Log, MatchesExactPartialSum) {
  const int n = 30;
  const auto l = padic_log(TruncatedPadic::from_int(3, 4, n), 60);
  Rational s = 0;
  for (long k = 1; k <= 60; ++k) s += Rational(power(3, static_cast<std::uint64_t>(k)) * (k % 2 ? 1 : -1), k);
  s.canonicalize();
  EXPECT_GE(l.certified, n);
  EXPECT_TRUE(rational_agrees(l.value, s, l.certified));
}

TEST(Log, TailBoundIsSound) {
  // Brute force: min over n in (T, 4000] of n v - digit nu_3(n).
  for (std::int64_t v : {1, 2, 3}) {
    for (std::int64_t digit : {1, 2}) {
      for (std::uint64_t t = 1; t <= 200; t += 7) {
        std::int64_t best = 1L << 40;
        for (std::uint64_t k = t + 1; k <= 4000; ++k) {
          best = std::min<std::int64_t>(best, static_cast<std::int64_t>(k) * v - digit * oracle::nu(3, oracle::Int(static_cast<unsigned long>(k))));
        }
        EXPECT_EQ(log_tail_bound(v, t, digit), best) << v << " " << digit << " " << t;
      }
    }
  }
}

TEST(Log, Multiplicativity) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> dist(-3000, 3000);
  const int n = 30;
  for (int i = 0; i < 20; ++i) {
    const auto x = TruncatedPadic::from_rational(3, Rational(1) + Rational(3 * dist(rng), 1 + 3 * (i + 1) + 1), n);
    const auto y = TruncatedPadic::from_rational(3, Rational(1) + Rational(9 * dist(rng), 2), n);
    const auto terms = log_terms_for(1, n, 1);
    const auto lx = padic_log(x, terms), ly = padic_log(y, terms), lxy = padic_log(x * y, terms);
    const std::int64_t cert = std::min({lx.certified, ly.certified, lxy.certified});
    EXPECT_GE(cert, n - 4);
    EXPECT_TRUE(congruent_mod_power(3, cert, (lx.value + ly.value).to_rational(), lxy.value.to_rational()));
  }
}

TEST(Log, OmegaVanishes) {
  for (int n : {5, 20, 40}) {
    const auto l = padic_log(QuadExtElement::omega(n), log_terms_for(1, 2 * n, 2));
    EXPECT_GE(l.certified, 2 * n);
    EXPECT_TRUE(l.value.is_zero());
    EXPECT_GE(l.value.absolute_precision(), 2 * n);
  }
}

TEST(Lemma42, PartialSums) {
  EXPECT_EQ(lemma42_partial(1), 1);
  EXPECT_EQ(lemma42_partial(2), 0);
  EXPECT_EQ(lemma42_partial(3), Rational(9, 5));
  EXPECT_EQ(ceil_log3(1), 0);
  EXPECT_EQ(ceil_log3(3), 1);
  EXPECT_EQ(ceil_log3(4), 2);
  EXPECT_EQ(ceil_log3(9), 2);
  EXPECT_EQ(ceil_log3(10), 3);
}

TEST(Lemma42, TailBoundConfirmedTermByTerm) {
  // Every term k >= K has nu_3 >= K - ceil(log3(2K+1)), since nu(2k+1) grows
  // at most logarithmically; check terms up to k = 600.
  for (std::uint64_t K = 3; K <= 80; ++K) {
    const std::int64_t bound = static_cast<std::int64_t>(K) - ceil_log3(2 * K + 1);
    for (std::uint64_t k = K; k <= 600; ++k) {
      const long v = static_cast<long>(k) - oracle::nu(3, oracle::Int(static_cast<unsigned long>(2 * k + 1)));
      ASSERT_GE(v, bound) << K << " " << k;
    }
  }
}

TEST(Lemma42, ValuationUnbounded) {
  // Past K = 30 the certified bound already exceeds 20.
  for (std::uint64_t K = 30; K <= 80; ++K) EXPECT_GT(nu(3, lemma42_partial(K)), ExtendedValuation(20)) << K;
}

TEST(Lemma42, ClosedFormRoutes) {
  EXPECT_TRUE(lemma42_closed_form_check(5, 30));
  EXPECT_TRUE(lemma42_closed_form_check(20, 60));
  EXPECT_THROW(lemma42_closed_form_check(20, 10), PrecisionError);
}

TEST(Lemma42, SeriesRouteMatchesRationalPartialSum) {
  for (std::uint64_t T : {60ULL, 75ULL, 90ULL}) {
    const auto routes = lemma42_routes(20, T);
    EXPECT_TRUE(routes.series.b().is_zero());
    EXPECT_TRUE(rational_agrees(routes.series.a(), lemma42_partial(T), routes.series.a().absolute_precision()));
  }
}
