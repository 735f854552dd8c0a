#pragma once

// Truncated p-adic numbers with explicit precision, the ramified extension
// Q_3(sqrt(-3)), and the 3-adic logarithm series.

#include "bincert/exact_arith.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bincert {

__extension__ typedef unsigned __int128 u128;

class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// unit * p^exponent, known modulo p^(exponent + precision).
///
/// `precision` counts the known digits of the unit (relative precision).
/// A value whose known digits are all zero is a zero marker: unit 0,
/// precision 0, and `exponent` holds the absolute precision, i.e. the value
/// is only known to be divisible by p^exponent.
///
/// Results never claim more digits than the operands justify.  Units are
/// held in 128-bit words, so p^precision must stay below 2^126.
class TruncatedPadic {
 public:
  TruncatedPadic() = default;

  static int max_precision(std::uint64_t p);

  static TruncatedPadic zero(std::uint64_t p, std::int64_t absolute_precision);
  static TruncatedPadic from_integer(std::uint64_t p, const BigInt& x, int precision);
  static TruncatedPadic from_int(std::uint64_t p, std::int64_t x, int precision);
  static TruncatedPadic from_rational(std::uint64_t p, const Rational& x, int precision);
  /// The element of Z_p represented by `residue` mod p^absolute_precision.
  static TruncatedPadic from_residue(std::uint64_t p, u128 residue, std::int64_t absolute_precision);

  std::uint64_t prime() const { return p_; }
  bool is_zero() const { return precision_ == 0; }
  std::int64_t exponent() const { return exponent_; }
  int precision() const { return precision_; }
  u128 unit() const { return unit_; }
  std::int64_t absolute_precision() const { return exponent_ + precision_; }

  /// Exact valuation for a nonzero value; nullopt-like infinity for a zero
  /// marker (use absolute_precision() for the known lower bound).
  ExtendedValuation valuation() const;

  /// Residue mod p^t in [0, p^t).  Requires nonnegative valuation and
  /// absolute_precision() >= t.
  BigInt residue(std::int64_t t) const;

  /// unit * p^exponent as an exact rational representative.
  Rational to_rational() const;

  /// Same value with relative precision lowered to at most `precision`.
  TruncatedPadic with_precision(int precision) const;
  /// Same value known only modulo p^absolute.
  TruncatedPadic with_absolute_precision(std::int64_t absolute) const;

  /// Multiplication by p^k, exact.
  TruncatedPadic shifted(std::int64_t k) const;

  TruncatedPadic inverse() const;

  /// True when x - y is zero to the precision both sides justify.
  bool congruent(const TruncatedPadic& other) const;

  TruncatedPadic operator-() const;
  friend TruncatedPadic operator+(const TruncatedPadic& a, const TruncatedPadic& b);
  friend TruncatedPadic operator-(const TruncatedPadic& a, const TruncatedPadic& b);
  friend TruncatedPadic operator*(const TruncatedPadic& a, const TruncatedPadic& b);
  friend TruncatedPadic operator/(const TruncatedPadic& a, const TruncatedPadic& b);
  TruncatedPadic& operator+=(const TruncatedPadic& o) { return *this = *this + o; }
  TruncatedPadic& operator-=(const TruncatedPadic& o) { return *this = *this - o; }
  TruncatedPadic& operator*=(const TruncatedPadic& o) { return *this = *this * o; }

  std::string to_string() const;

 private:
  TruncatedPadic(std::uint64_t p, u128 unit, std::int64_t exponent, int precision)
      : p_(p), unit_(unit), exponent_(exponent), precision_(precision) {}

  // Normalizes residue * p^exponent known mod p^absolute.
  static TruncatedPadic normalize(std::uint64_t p, u128 residue, std::int64_t exponent,
                                  std::int64_t absolute);

  std::uint64_t p_ = 3;
  u128 unit_ = 0;
  std::int64_t exponent_ = 0;
  int precision_ = 0;
};

/// a + b sqrt(-3) with a, b in Q_3.
///
/// Valuations are counted in powers of sqrt(-3) ("half digits"), so
/// nu(3) = 2 and nu(sqrt(-3)) = 1.
class QuadExtElement {
 public:
  QuadExtElement() = default;
  QuadExtElement(TruncatedPadic a, TruncatedPadic b);

  static QuadExtElement from_rationals(const Rational& a, const Rational& b, int precision);
  /// omega = (-1 + sqrt(-3)) / 2, a primitive cube root of unity.
  static QuadExtElement omega(int precision);
  /// sqrt(-3) itself.
  static QuadExtElement root(int precision);
  static QuadExtElement one(int precision);

  const TruncatedPadic& a() const { return a_; }
  const TruncatedPadic& b() const { return b_; }

  /// Half-digit valuation; infinity for a zero marker.
  ExtendedValuation valuation() const;
  /// Known modulo sqrt(-3)^absolute_precision().
  std::int64_t absolute_precision() const;
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  QuadExtElement conjugate() const;
  /// a^2 + 3 b^2.
  TruncatedPadic norm() const;

  QuadExtElement operator-() const;
  friend QuadExtElement operator+(const QuadExtElement& x, const QuadExtElement& y);
  friend QuadExtElement operator-(const QuadExtElement& x, const QuadExtElement& y);
  friend QuadExtElement operator*(const QuadExtElement& x, const QuadExtElement& y);
  friend QuadExtElement operator/(const QuadExtElement& x, const QuadExtElement& y);
  QuadExtElement scaled(const TruncatedPadic& s) const;

  std::string to_string() const;

 private:
  TruncatedPadic a_;
  TruncatedPadic b_;
};

/// A truncated log series value with its certified precision: the true
/// logarithm agrees with `value` modulo p^certified (half digits for the
/// extension).
template <typename T>
struct LogResult {
  T value;
  std::int64_t certified = 0;
};

/// Smallest term count whose omitted tail has valuation above `target`
/// plus a 4-digit guard, for log(1 + y) with nu(y) = `y_valuation`.
/// `digit` is the valuation of p in the same units (1 in Q_p, 2 in the
/// extension).
std::uint64_t log_terms_for(std::int64_t y_valuation, std::int64_t target, std::int64_t digit,
                            std::uint64_t p = 3);

/// Lower bound on nu(y^n / n) over all n > terms.
std::int64_t log_tail_bound(std::int64_t y_valuation, std::uint64_t terms, std::int64_t digit,
                            std::uint64_t p = 3);

/// log(x) = sum_{n=1}^{terms} (-1)^{n+1} y^n / n with x = 1 + y.
/// Throws DomainError when nu(y) <= 0 and PrecisionError when `terms`
/// leaves a tail that is not below the precision of y.
LogResult<TruncatedPadic> padic_log(const TruncatedPadic& x, std::uint64_t terms);
LogResult<QuadExtElement> padic_log(const QuadExtElement& x, std::uint64_t terms);

/// omega^3 == 1 to 3-adic precision N.
bool cube_root_check(int precision);

/// sum_{k<K} (-3)^k / (2k+1).
Rational lemma42_partial(std::uint64_t count);

/// Smallest c with 3^c >= 2K + 1.
std::int64_t ceil_log3(std::uint64_t x);

struct Lemma42Routes {
  QuadExtElement series;       // (1/sqrt(-3)) sum_{k<T} sqrt(-3)^{2k+1} / (2k+1)
  QuadExtElement logarithms;   // (log(1+sqrt(-3)) - log(1-sqrt(-3))) / (2 sqrt(-3))
  QuadExtElement log_omega;    // log(omega) / (2 sqrt(-3))
  std::int64_t certified = 0;  // half digits on which all three are certified
};

/// Evaluates the three routes for T terms at working precision chosen to
/// certify `precision` half digits.  Throws PrecisionError if T cannot.
Lemma42Routes lemma42_routes(int precision, std::uint64_t terms);

/// True iff the series route and the logarithm route agree to `precision`
/// half digits and both vanish there.
bool lemma42_closed_form_check(int precision, std::uint64_t terms);

}  // namespace bincert
