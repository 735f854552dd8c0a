#include "bincert/lucas.hpp"

#include <stdexcept>
#include <string>

namespace bincert {

BigInt lucas_u(const LucasParams& params, std::uint64_t n) {
  BigInt prev = 0;
  BigInt cur = 1;
  if (n == 0) return prev;
  const BigInt a(static_cast<long>(params.A));
  const BigInt b(static_cast<long>(params.B));
  for (std::uint64_t i = 1; i < n; ++i) {
    BigInt next = a * cur - b * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<BigInt> lucas_u_prefix(const LucasParams& params, std::uint64_t n) {
  std::vector<BigInt> u;
  u.reserve(n + 1);
  u.emplace_back(0);
  if (n == 0) return u;
  u.emplace_back(1);
  const BigInt a(static_cast<long>(params.A));
  const BigInt b(static_cast<long>(params.B));
  for (std::uint64_t i = 1; i < n; ++i) u.push_back(a * u[i] - b * u[i - 1]);
  return u;
}

Rational lucas_u_closed(std::int64_t m, std::uint64_t n) {
  if (n == 0) throw DomainError("lucas_u_closed: n must be positive");
  const BigInt delta = LucasParams::for_m(m).discriminant();
  const auto nn = static_cast<std::int64_t>(n);
  Rational sum(0);
  for (std::int64_t k = 1; k <= nn; k += 2) {
    Rational term = make_rational(BigInt(static_cast<long>(nn)), BigInt(static_cast<long>(k)));
    term *= Rational(binomial(nn - 1, k - 1));
    term *= Rational(power(m - 2, static_cast<std::uint64_t>(nn - k)));
    BigInt d;
    mpz_pow_ui(d.get_mpz_t(), delta.get_mpz_t(), static_cast<unsigned long>((k - 1) / 2));
    term *= Rational(d);
    sum += term;
  }
  sum /= Rational(power(2, n - 1));
  sum.canonicalize();
  if (sum.get_den() != 1) {
    throw std::logic_error("lucas_u_closed: non-integral result for m=" + std::to_string(m) +
                           ", n=" + std::to_string(n));
  }
  return sum;
}

int u_neg11_fast(std::uint64_t n) {
  static constexpr int kCycle[3] = {0, 1, -1};
  return kCycle[n % 3];
}

ClaimResult check_lemma21(std::int64_t m, std::uint64_t n) {
  if (((m % 3) + 3) % 3 != 1) throw DomainError("check_lemma21: m must be 1 mod 3");
  if (n == 0) throw DomainError("check_lemma21: n must be positive");
  if (m == 1) throw DomainError("check_lemma21: m = 1 makes nu_3(m-1) infinite");

  const auto t = nu(3, m - 1).value();
  const Rational nq(static_cast<unsigned long>(n));
  const Rational lhs = Rational(lucas_u(LucasParams::for_m(m), n)) / nq;
  const Rational base = Rational(u_neg11_fast(n)) / nq;
  const Rational diff = lhs - base;
  const auto ni = static_cast<std::int64_t>(n);

  auto params = [&](std::int64_t part) -> Params { return {{"m", m}, {"n", ni}, {"part", part}}; };

  std::vector<ClaimResult> parts;
  if (m != 4) {
    Rational d1 = diff - make_rational(BigInt(static_cast<long>(m - 1)), BigInt(3)) * Rational(binomial(ni - 1, 2));
    parts.push_back(make_result(ClaimId::LEMMA21, params(1), Measured::of_valuation(nu(3, d1)),
                                Requirement::at_least(t), false, Mode::Exact));
  } else {
    parts.push_back(make_result(ClaimId::LEMMA21, params(2), Measured::of_valuation(nu(3, diff)),
                                Requirement::at_least(1), false, Mode::Exact));
  }
  // For m = 4 the modulus is 3^0 and the statement carries no information.
  parts.push_back(make_result(ClaimId::LEMMA21, params(3), Measured::of_valuation(nu(3, diff)),
                              Requirement::at_least(t - 1), t - 1 <= 0, Mode::Exact));
  return combine_parts(ClaimId::LEMMA21, {{"m", m}, {"n", ni}}, std::move(parts));
}

}  // namespace bincert
