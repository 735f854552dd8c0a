#include "bincert/padic.hpp"

#include <gmp.h>

#include <algorithm>
#include <array>
#include <cstdlib>
#include <limits>
#include <tuple>
#include <utility>

namespace bincert {

namespace {

constexpr u128 kWordLimit = u128(1) << 126;

u128 pow_word(std::uint64_t p, std::int64_t k) {
  if (p == 3 && k < 80) {
    static const auto table = [] {
      std::array<u128, 80> t{};
      t[0] = 1;
      for (std::size_t i = 1; i < t.size(); ++i) t[i] = t[i - 1] * 3;
      return t;
    }();
    return table[static_cast<std::size_t>(k)];
  }
  u128 r = 1;
  for (std::int64_t i = 0; i < k; ++i) r *= p;
  return r;
}

u128 mulmod(u128 a, u128 b, u128 m) {
  if ((a >> 64) == 0 && (b >> 64) == 0) return (a * b) % m;
  a %= m;
  b %= m;
  const mp_limb_t al[2] = {static_cast<mp_limb_t>(a), static_cast<mp_limb_t>(a >> 64)};
  const mp_limb_t bl[2] = {static_cast<mp_limb_t>(b), static_cast<mp_limb_t>(b >> 64)};
  mp_limb_t prod[4];
  mpn_mul_n(prod, al, bl, 2);
  const mp_limb_t ml[2] = {static_cast<mp_limb_t>(m), static_cast<mp_limb_t>(m >> 64)};
  const mp_size_t dn = ml[1] != 0 ? 2 : 1;
  mp_limb_t quot[4];
  mp_limb_t rem[2] = {0, 0};
  mpn_tdiv_qr(quot, rem, 0, prod, 4, ml, dn);
  return (static_cast<u128>(rem[1]) << 64) | rem[0];
}

std::uint64_t inverse_mod_small(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

// Inverse of a unit modulo p^n by Newton iteration from the inverse mod p.
u128 inverse_mod_power(u128 unit, std::uint64_t p, int n) {
  const u128 m = pow_word(p, n);
  u128 x = inverse_mod_small(static_cast<std::uint64_t>(unit % p), p);
  for (int digits = 1; digits < n; digits *= 2) {
    u128 t = mulmod(unit, x, m);
    x = mulmod(x, (m + 2 - t) % m, m);
  }
  return x % m;
}

u128 to_word(const BigInt& x) {
  // x is nonnegative and below 2^128.
  u128 lo = mpz_getlimbn(x.get_mpz_t(), 0);
  u128 hi = mpz_size(x.get_mpz_t()) > 1 ? mpz_getlimbn(x.get_mpz_t(), 1) : 0;
  return (hi << 64) | lo;
}

BigInt from_word(u128 x) {
  BigInt r(static_cast<unsigned long>(x >> 64));
  r <<= 64;
  r += static_cast<unsigned long>(static_cast<std::uint64_t>(x));
  return r;
}

void require_same_prime(const TruncatedPadic& a, const TruncatedPadic& b) {
  if (a.prime() != b.prime()) throw DomainError("mixing p-adic numbers over different primes");
}

void check_precision(std::uint64_t p, std::int64_t n) {
  if (n < 0 || n > TruncatedPadic::max_precision(p)) {
    throw PrecisionError("precision " + std::to_string(n) + " outside [0, " +
                         std::to_string(TruncatedPadic::max_precision(p)) + "] for p=" + std::to_string(p));
  }
}

}  // namespace

int TruncatedPadic::max_precision(std::uint64_t p) {
  int n = 0;
  u128 v = 1;
  while (v <= kWordLimit / p) {
    v *= p;
    ++n;
  }
  return n;
}

TruncatedPadic TruncatedPadic::zero(std::uint64_t p, std::int64_t absolute_precision) {
  return TruncatedPadic(p, 0, absolute_precision, 0);
}

TruncatedPadic TruncatedPadic::normalize(std::uint64_t p, u128 residue, std::int64_t exponent,
                                         std::int64_t absolute) {
  if (absolute <= exponent || residue == 0) return zero(p, absolute);
  std::int64_t v = exponent;
  while (residue % p == 0) {
    residue /= p;
    ++v;
  }
  if (v >= absolute) return zero(p, absolute);
  const auto n = static_cast<int>(absolute - v);
  return TruncatedPadic(p, residue % pow_word(p, n), v, n);
}

TruncatedPadic TruncatedPadic::from_integer(std::uint64_t p, const BigInt& x, int precision) {
  require_odd_prime(p);
  check_precision(p, precision);
  if (sgn(x) == 0) return zero(p, precision);
  BigInt rest;
  BigInt prime(static_cast<unsigned long>(p));
  auto v = static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t()));
  const BigInt modulus = from_word(pow_word(p, precision));
  mpz_fdiv_r(rest.get_mpz_t(), rest.get_mpz_t(), modulus.get_mpz_t());
  return TruncatedPadic(p, to_word(rest), v, precision);
}

TruncatedPadic TruncatedPadic::from_int(std::uint64_t p, std::int64_t x, int precision) {
  return from_integer(p, BigInt(static_cast<long>(x)), precision);
}

TruncatedPadic TruncatedPadic::from_rational(std::uint64_t p, const Rational& x, int precision) {
  if (sgn(x) == 0) return from_integer(p, BigInt(0), precision);
  TruncatedPadic num = from_integer(p, x.get_num(), precision);
  TruncatedPadic den = from_integer(p, x.get_den(), precision);
  return num / den;
}

TruncatedPadic TruncatedPadic::from_residue(std::uint64_t p, u128 residue, std::int64_t absolute_precision) {
  require_odd_prime(p);
  check_precision(p, absolute_precision);
  return normalize(p, residue % pow_word(p, absolute_precision), 0, absolute_precision);
}

ExtendedValuation TruncatedPadic::valuation() const {
  if (is_zero()) return ExtendedValuation::infinity();
  return exponent_;
}

BigInt TruncatedPadic::residue(std::int64_t t) const {
  if (t < 0) throw DomainError("residue: negative modulus exponent");
  if (absolute_precision() < t) {
    throw PrecisionError("residue mod p^" + std::to_string(t) + " needs absolute precision " +
                         std::to_string(t) + ", have " + std::to_string(absolute_precision()));
  }
  if (is_zero() || exponent_ >= t) return 0;
  if (exponent_ < 0) throw DomainError("residue of a non-integral p-adic number");
  const u128 part = unit_ % pow_word(p_, t - exponent_);
  return from_word(part) * from_word(pow_word(p_, exponent_));
}

Rational TruncatedPadic::to_rational() const {
  if (is_zero()) return 0;
  Rational r(from_word(unit_));
  const BigInt pe = power(static_cast<std::int64_t>(p_), static_cast<std::uint64_t>(std::abs(exponent_)));
  if (exponent_ >= 0) {
    r *= Rational(pe);
  } else {
    r /= Rational(pe);
  }
  r.canonicalize();
  return r;
}

TruncatedPadic TruncatedPadic::with_precision(int precision) const {
  if (is_zero() || precision >= precision_) return *this;
  if (precision <= 0) return zero(p_, exponent_);
  return TruncatedPadic(p_, unit_ % pow_word(p_, precision), exponent_, precision);
}

TruncatedPadic TruncatedPadic::with_absolute_precision(std::int64_t absolute) const {
  if (absolute >= absolute_precision()) return *this;
  if (is_zero() || absolute <= exponent_) return zero(p_, absolute);
  return with_precision(static_cast<int>(absolute - exponent_));
}

TruncatedPadic TruncatedPadic::shifted(std::int64_t k) const {
  TruncatedPadic r = *this;
  r.exponent_ += k;
  return r;
}

TruncatedPadic TruncatedPadic::inverse() const {
  if (is_zero()) throw DomainError("inverse of a value indistinguishable from zero");
  return TruncatedPadic(p_, inverse_mod_power(unit_, p_, precision_), -exponent_, precision_);
}

bool TruncatedPadic::congruent(const TruncatedPadic& other) const { return (*this - other).is_zero(); }

TruncatedPadic TruncatedPadic::operator-() const {
  if (is_zero()) return *this;
  const u128 m = pow_word(p_, precision_);
  return TruncatedPadic(p_, (m - unit_) % m, exponent_, precision_);
}

TruncatedPadic operator+(const TruncatedPadic& a, const TruncatedPadic& b) {
  require_same_prime(a, b);
  const std::uint64_t p = a.p_;
  const std::int64_t absolute = std::min(a.absolute_precision(), b.absolute_precision());
  if (a.is_zero() && b.is_zero()) return TruncatedPadic::zero(p, absolute);
  std::int64_t base = std::numeric_limits<std::int64_t>::max();
  if (!a.is_zero()) base = a.exponent_;
  if (!b.is_zero()) base = std::min(base, b.exponent_);
  if (absolute <= base) return TruncatedPadic::zero(p, absolute);
  const auto width = static_cast<int>(absolute - base);
  const u128 m = pow_word(p, width);
  u128 sum = 0;
  for (const TruncatedPadic* t : {&a, &b}) {
    if (t->is_zero()) continue;
    const std::int64_t shift = t->exponent_ - base;
    if (shift >= width) continue;
    const u128 part = mulmod(t->unit_ % m, pow_word(p, shift), m);
    sum = (sum + part) % m;
  }
  return TruncatedPadic::normalize(p, sum, base, absolute);
}

TruncatedPadic operator-(const TruncatedPadic& a, const TruncatedPadic& b) { return a + (-b); }

TruncatedPadic operator*(const TruncatedPadic& a, const TruncatedPadic& b) {
  require_same_prime(a, b);
  if (a.is_zero() || b.is_zero()) {
    // A zero marker at p^A times anything of valuation v is zero mod p^(A+v).
    std::int64_t absolute = a.exponent_ + b.exponent_;
    return TruncatedPadic::zero(a.p_, absolute);
  }
  const int n = std::min(a.precision_, b.precision_);
  const u128 m = pow_word(a.p_, n);
  return TruncatedPadic(a.p_, mulmod(a.unit_ % m, b.unit_ % m, m), a.exponent_ + b.exponent_, n);
}

TruncatedPadic operator/(const TruncatedPadic& a, const TruncatedPadic& b) { return a * b.inverse(); }

std::string TruncatedPadic::to_string() const {
  const std::string p = std::to_string(p_);
  if (is_zero()) return "O(" + p + "^" + std::to_string(exponent_) + ")";
  return from_word(unit_).get_str() + "*" + p + "^" + std::to_string(exponent_) + " + O(" + p + "^" +
         std::to_string(absolute_precision()) + ")";
}

// ---------------------------------------------------------------------------

QuadExtElement::QuadExtElement(TruncatedPadic a, TruncatedPadic b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.prime() != 3 || b_.prime() != 3) throw DomainError("Q_3(sqrt(-3)) components must be 3-adic");
}

QuadExtElement QuadExtElement::from_rationals(const Rational& a, const Rational& b, int precision) {
  return {TruncatedPadic::from_rational(3, a, precision), TruncatedPadic::from_rational(3, b, precision)};
}

QuadExtElement QuadExtElement::omega(int precision) {
  return from_rationals(make_rational(BigInt(-1), BigInt(2)), make_rational(BigInt(1), BigInt(2)), precision);
}

QuadExtElement QuadExtElement::root(int precision) { return from_rationals(0, 1, precision); }

QuadExtElement QuadExtElement::one(int precision) { return from_rationals(1, 0, precision); }

ExtendedValuation QuadExtElement::valuation() const {
  ExtendedValuation va = a_.valuation();
  ExtendedValuation vb = b_.valuation();
  ExtendedValuation ha = va.is_infinite() ? va : ExtendedValuation(2 * va.value());
  ExtendedValuation hb = vb.is_infinite() ? vb : ExtendedValuation(2 * vb.value() + 1);
  return std::min(ha, hb);
}

std::int64_t QuadExtElement::absolute_precision() const {
  return std::min(2 * a_.absolute_precision(), 2 * b_.absolute_precision() + 1);
}

QuadExtElement QuadExtElement::conjugate() const { return {a_, -b_}; }

TruncatedPadic QuadExtElement::norm() const { return a_ * a_ + (b_ * b_).shifted(1); }

QuadExtElement QuadExtElement::operator-() const { return {-a_, -b_}; }

QuadExtElement operator+(const QuadExtElement& x, const QuadExtElement& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }

QuadExtElement operator-(const QuadExtElement& x, const QuadExtElement& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }

QuadExtElement operator*(const QuadExtElement& x, const QuadExtElement& y) {
  // (a + b r)(c + d r) = (ac - 3bd) + (ad + bc) r with r^2 = -3.
  return {x.a_ * y.a_ - (x.b_ * y.b_).shifted(1), x.a_ * y.b_ + x.b_ * y.a_};
}

QuadExtElement operator/(const QuadExtElement& x, const QuadExtElement& y) {
  return (x * y.conjugate()).scaled(y.norm().inverse());
}

QuadExtElement QuadExtElement::scaled(const TruncatedPadic& s) const { return {a_ * s, b_ * s}; }

std::string QuadExtElement::to_string() const { return "(" + a_.to_string() + ") + (" + b_.to_string() + ")*sqrt(-3)"; }

// ---------------------------------------------------------------------------

std::int64_t log_tail_bound(std::int64_t y_valuation, std::uint64_t terms, std::int64_t digit, std::uint64_t p) {
  // Scan n > terms block by block, where block j is [p^j, p^{j+1}).  Inside
  // block j every term has valuation >= n*v - digit*j, so once a block's
  // floor reaches the running minimum and floors increase from then on, no
  // later term can go lower.
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::uint64_t n = terms + 1;
  std::int64_t j = 0;
  std::uint64_t pj = 1;
  while (pj <= n / p) {
    pj *= p;
    ++j;
  }
  for (;;) {
    const std::uint64_t block_end = pj * p;
    const std::int64_t block_floor = static_cast<std::int64_t>(n) * y_valuation - digit * j;
    const bool increasing = static_cast<std::int64_t>(block_end - n) * y_valuation >= digit;
    if (block_floor >= best && increasing) break;
    for (; n < block_end; ++n) {
      std::int64_t v = 0;
      for (std::uint64_t q = n; q % p == 0; q /= p) ++v;
      best = std::min(best, static_cast<std::int64_t>(n) * y_valuation - digit * v);
    }
    pj = block_end;
    ++j;
  }
  return best;
}

std::uint64_t log_terms_for(std::int64_t y_valuation, std::int64_t target, std::int64_t digit, std::uint64_t p) {
  if (y_valuation <= 0) throw DomainError("log series diverges for nu(y) <= 0");
  const std::int64_t goal = target + 4 * digit;
  std::uint64_t terms = 1;
  while (log_tail_bound(y_valuation, terms, digit, p) <= goal) ++terms;
  return terms;
}

LogResult<TruncatedPadic> padic_log(const TruncatedPadic& x, std::uint64_t terms) {
  const std::uint64_t p = x.prime();
  const int wide = TruncatedPadic::max_precision(p);
  const TruncatedPadic y = x - TruncatedPadic::from_int(p, 1, wide);
  if (y.is_zero()) return {y, y.absolute_precision()};
  if (y.exponent() <= 0) throw DomainError("padic_log: x - 1 must have positive valuation");
  const std::int64_t tail = log_tail_bound(y.exponent(), terms, 1, p);
  if (tail < y.absolute_precision()) {
    throw PrecisionError("padic_log: " + std::to_string(terms) + " terms leave a tail of valuation " +
                         std::to_string(tail) + " below the input precision " +
                         std::to_string(y.absolute_precision()));
  }
  TruncatedPadic power = y;
  TruncatedPadic sum = y;
  for (std::uint64_t n = 2; n <= terms; ++n) {
    power *= y;
    TruncatedPadic term = power / TruncatedPadic::from_int(p, static_cast<std::int64_t>(n), wide);
    if (n % 2 == 0) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  const std::int64_t certified = std::min(sum.absolute_precision(), tail);
  return {sum.with_absolute_precision(certified), certified};
}

LogResult<QuadExtElement> padic_log(const QuadExtElement& x, std::uint64_t terms) {
  const int wide = TruncatedPadic::max_precision(3);
  const QuadExtElement y = x - QuadExtElement::one(wide);
  if (y.is_zero()) return {y, y.absolute_precision()};
  const std::int64_t v = y.valuation().value();
  if (v <= 0) throw DomainError("padic_log: x - 1 must have positive valuation");
  const std::int64_t tail = log_tail_bound(v, terms, 2, 3);
  if (tail < y.absolute_precision()) {
    throw PrecisionError("padic_log: " + std::to_string(terms) + " terms leave a tail of half-valuation " +
                         std::to_string(tail) + " below the input precision " +
                         std::to_string(y.absolute_precision()));
  }
  QuadExtElement power = y;
  QuadExtElement sum = y;
  for (std::uint64_t n = 2; n <= terms; ++n) {
    power = power * y;
    QuadExtElement term = power.scaled(TruncatedPadic::from_int(3, static_cast<std::int64_t>(n), wide).inverse());
    sum = n % 2 == 0 ? sum - term : sum + term;
  }
  const std::int64_t certified = std::min(sum.absolute_precision(), tail);
  return {sum, certified};
}

bool cube_root_check(int precision) {
  if (precision < 1) throw DomainError("cube_root_check: precision must be positive");
  const QuadExtElement w = QuadExtElement::omega(precision);
  const QuadExtElement diff = w * w * w - QuadExtElement::one(precision);
  return diff.is_zero() && diff.absolute_precision() >= 2 * static_cast<std::int64_t>(precision);
}

Rational lemma42_partial(std::uint64_t count) {
  if (count == 0) throw DomainError("lemma42_partial: need at least one term");
  Rational sum = 0;
  BigInt p = 1;
  for (std::uint64_t k = 0; k < count; ++k) {
    sum += make_rational(p, BigInt(static_cast<unsigned long>(2 * k + 1)));
    p *= -3;
  }
  return sum;
}

std::int64_t ceil_log3(std::uint64_t x) {
  std::int64_t c = 0;
  for (std::uint64_t q = 1; q < x; q *= 3) ++c;
  return c;
}

Lemma42Routes lemma42_routes(int precision, std::uint64_t terms) {
  if (precision < 1 || terms < 1) throw DomainError("lemma42_routes: precision and terms must be positive");
  // Divisions by n <= 2T+1 cost at most ceil_log3(2T+1) digits; the final
  // division by sqrt(-3) costs one half digit.
  const std::int64_t working = (precision + 1) / 2 + ceil_log3(2 * terms + 1) + 2;
  if (working > TruncatedPadic::max_precision(3)) {
    throw PrecisionError("lemma42_routes: working precision " + std::to_string(working) + " exceeds word range");
  }
  const int w = static_cast<int>(working);
  const QuadExtElement root = QuadExtElement::root(w);

  Lemma42Routes out;

  // Series route: sum_{k<T} r^{2k+1}/(2k+1), divided by r.
  {
    const QuadExtElement r2 = root * root;
    QuadExtElement power = root;
    QuadExtElement sum = root;
    for (std::uint64_t k = 1; k < terms; ++k) {
      power = power * r2;
      sum = sum + power.scaled(TruncatedPadic::from_int(3, static_cast<std::int64_t>(2 * k + 1), w).inverse());
    }
    // Omitted terms are r^n/n for odd n > 2T-1, a subset of n > 2T-1.
    const std::int64_t tail = log_tail_bound(1, 2 * terms - 1, 2, 3);
    out.series = sum / root;
    out.certified = std::min(sum.absolute_precision(), tail) - 1;
  }

  auto log_or_throw = [&](const QuadExtElement& x) {
    try {
      return padic_log(x, terms);
    } catch (const PrecisionError&) {
      throw PrecisionError("lemma42_routes: " + std::to_string(terms) + " terms cannot certify " +
                           std::to_string(precision) + " half digits");
    }
  };
  const QuadExtElement one = QuadExtElement::one(w);
  const QuadExtElement two_root = root.scaled(TruncatedPadic::from_int(3, 2, w));

  {
    auto plus = log_or_throw(one + root);
    auto minus = log_or_throw(one - root);
    out.logarithms = (plus.value - minus.value) / two_root;
    out.certified = std::min({out.certified, plus.certified - 1, minus.certified - 1});
  }
  {
    auto lw = log_or_throw(QuadExtElement::omega(w));
    out.log_omega = lw.value / two_root;
    out.certified = std::min(out.certified, lw.certified - 1);
  }
  if (out.certified < precision) {
    throw PrecisionError("lemma42_routes: " + std::to_string(terms) + " terms certify only " +
                         std::to_string(out.certified) + " of " + std::to_string(precision) + " half digits");
  }
  return out;
}

bool lemma42_closed_form_check(int precision, std::uint64_t terms) {
  const Lemma42Routes r = lemma42_routes(precision, terms);
  auto vanishes = [&](const QuadExtElement& x) {
    if (x.is_zero()) return x.absolute_precision() >= precision;
    return x.valuation() >= ExtendedValuation(precision);
  };
  const QuadExtElement gap = r.series - r.logarithms;
  return vanishes(gap) && vanishes(r.series) && vanishes(r.logarithms);
}

}  // namespace bincert
