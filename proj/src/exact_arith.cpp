#include "bincert/exact_arith.hpp"

#include <string>

namespace bincert {

std::int64_t ExtendedValuation::value() const {
  if (infinite_) throw std::logic_error("value() of an infinite valuation");
  return value_;
}

std::string ExtendedValuation::to_string() const {
  return infinite_ ? std::string("infinity") : std::to_string(value_);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

void require_odd_prime(std::uint64_t p) {
  if (p == 3) return;
  if (p == 2 || !is_prime(p)) {
    throw DomainError("expected an odd prime, got " + std::to_string(p));
  }
}

ExtendedValuation nu(std::uint64_t p, const BigInt& x) {
  require_odd_prime(p);
  if (sgn(x) == 0) return ExtendedValuation::infinity();
  BigInt rest;
  BigInt prime(static_cast<unsigned long>(p));
  return static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t()));
}

ExtendedValuation nu(std::uint64_t p, const Rational& x) {
  if (sgn(x) == 0) {
    require_odd_prime(p);
    return ExtendedValuation::infinity();
  }
  return ExtendedValuation(nu(p, x.get_num()).value() - nu(p, x.get_den()).value());
}

ExtendedValuation nu(std::uint64_t p, std::int64_t x) {
  require_odd_prime(p);
  if (x == 0) return ExtendedValuation::infinity();
  std::uint64_t u = x < 0 ? 0 - static_cast<std::uint64_t>(x) : static_cast<std::uint64_t>(x);
  std::int64_t v = 0;
  while (u % p == 0) {
    u /= p;
    ++v;
  }
  return v;
}

std::uint64_t digit_sum(std::uint64_t p, std::uint64_t n) {
  std::uint64_t s = 0;
  for (; n != 0; n /= p) s += n % p;
  return s;
}

std::int64_t nu_factorial(std::uint64_t p, std::uint64_t n) {
  require_odd_prime(p);
  return static_cast<std::int64_t>((n - digit_sum(p, n)) / (p - 1));
}

ExtendedValuation nu_binomial(std::uint64_t p, std::int64_t n, std::int64_t k) {
  require_odd_prime(p);
  if (n < 0) throw DomainError("nu_binomial: negative upper index");
  if (k < 0 || k > n) return ExtendedValuation::infinity();
  auto a = static_cast<std::uint64_t>(k);
  auto b = static_cast<std::uint64_t>(n - k);
  std::int64_t carries = 0;
  std::uint64_t carry = 0;
  while (a != 0 || b != 0 || carry != 0) {
    carry = (a % p + b % p + carry) >= p ? 1 : 0;
    carries += static_cast<std::int64_t>(carry);
    a /= p;
    b /= p;
  }
  return carries;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0) throw DomainError("binomial: negative lower index");
  BigInt result;
  if (n >= 0) {
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return result;
  }
  // Falling factorial n(n-1)...(n-k+1) / k!; each partial quotient is an
  // integer binomial up to sign, so the division is exact at every step.
  result = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    result *= BigInt(static_cast<long>(n - i));
    mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), static_cast<unsigned long>(i + 1));
  }
  return result;
}

Rational generalized_binomial(const Rational& alpha, std::uint64_t k) {
  Rational result(1);
  Rational factor = alpha;
  for (std::uint64_t i = 0; i < k; ++i) {
    result *= factor;
    result /= Rational(static_cast<unsigned long>(i + 1));
    factor -= 1;
  }
  result.canonicalize();
  return result;
}

bool congruent_mod_power(std::uint64_t p, std::int64_t t, const Rational& a, const Rational& b) {
  Rational diff = a - b;
  return nu(p, diff) >= ExtendedValuation(t);
}

std::optional<BigInt> residue_mod_power(std::uint64_t p, std::int64_t t, const Rational& x) {
  if (t < 0) throw DomainError("residue_mod_power: negative exponent");
  if (nu(p, x) < ExtendedValuation(0)) return std::nullopt;
  BigInt modulus = power(static_cast<std::int64_t>(p), static_cast<std::uint64_t>(t));
  if (modulus == 1) return BigInt(0);
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), x.get_den().get_mpz_t(), modulus.get_mpz_t());
  BigInt r = x.get_num() * inv;
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

BigInt power(std::int64_t base, std::uint64_t exponent) {
  BigInt b(static_cast<long>(base));
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exponent));
  return r;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw DomainError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    return make_rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw DomainError("not a rational number: '" + text + "'");
  }
}

std::string to_string(const BigInt& x) { return x.get_str(); }
std::string to_string(const Rational& x) { return x.get_str(); }

}  // namespace bincert
