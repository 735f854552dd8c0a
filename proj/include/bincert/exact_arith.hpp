#pragma once

// Exact integer/rational arithmetic, p-adic orders and binomial coefficients.
//
// Integers and rationals are GMP's mpz_class / mpq_class.  Every Rational
// handed out by this library is canonical (reduced, positive denominator).

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace bincert {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Thrown when an argument falls outside an operation's parameter domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A p-adic order: a finite integer, or +infinity (the order of 0).
/// Infinity absorbs addition and compares above every finite value.
class ExtendedValuation {
 public:
  constexpr ExtendedValuation() = default;
  constexpr ExtendedValuation(std::int64_t v) : value_(v) {}  // NOLINT(implicit)

  static constexpr ExtendedValuation infinity() {
    ExtendedValuation v;
    v.infinite_ = true;
    return v;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }

  /// Finite value; throws std::logic_error on infinity.
  std::int64_t value() const;

  std::string to_string() const;

  friend constexpr bool operator==(const ExtendedValuation& a, const ExtendedValuation& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const ExtendedValuation& a,
                                                    const ExtendedValuation& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }
  friend constexpr ExtendedValuation operator+(const ExtendedValuation& a,
                                               const ExtendedValuation& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return ExtendedValuation(a.value_ + b.value_);
  }
  friend constexpr ExtendedValuation operator-(const ExtendedValuation& a, std::int64_t b) {
    if (a.infinite_) return infinity();
    return ExtendedValuation(a.value_ - b);
  }

 private:
  std::int64_t value_ = 0;
  bool infinite_ = false;
};

bool is_prime(std::uint64_t n);

/// Throws DomainError unless p is an odd prime.
void require_odd_prime(std::uint64_t p);

ExtendedValuation nu(std::uint64_t p, const BigInt& x);
ExtendedValuation nu(std::uint64_t p, const Rational& x);
ExtendedValuation nu(std::uint64_t p, std::int64_t x);

std::uint64_t digit_sum(std::uint64_t p, std::uint64_t n);

/// nu_p(n!) by Legendre's formula; n! is never formed.
std::int64_t nu_factorial(std::uint64_t p, std::uint64_t n);

/// nu_p(binom(n, k)) as the number of carries when adding k and n - k in
/// base p.  Infinity when k is outside [0, n].
ExtendedValuation nu_binomial(std::uint64_t p, std::int64_t n, std::int64_t k);

/// binom(n, k) for any integer n and k >= 0, using the falling factorial
/// n(n-1)...(n-k+1)/k! (so binom(n, k) = 0 for 0 <= n < k).
BigInt binomial(std::int64_t n, std::int64_t k);

/// alpha(alpha-1)...(alpha-k+1)/k!.
Rational generalized_binomial(const Rational& alpha, std::uint64_t k);

/// a == b (mod p^t) in the rational sense: nu_p(a - b) >= t.
bool congruent_mod_power(std::uint64_t p, std::int64_t t, const Rational& a, const Rational& b);

/// The residue of x in [0, p^t) when nu_p(x) >= 0; nullopt otherwise.
std::optional<BigInt> residue_mod_power(std::uint64_t p, std::int64_t t, const Rational& x);

BigInt power(std::int64_t base, std::uint64_t exponent);

/// Canonical num/den; throws DomainError for den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

/// Parses "a", "-a", "a/b".
Rational parse_rational(const std::string& text);

std::string to_string(const BigInt& x);
std::string to_string(const Rational& x);

}  // namespace bincert
