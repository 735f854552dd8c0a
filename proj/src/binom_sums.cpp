#include "bincert/binom_sums.hpp"

#include "bincert/lucas.hpp"

#include <stdexcept>

namespace bincert {

namespace {

// x *= num / den, asserting the quotient is an integer.
void scale_exact(BigInt& x, std::uint64_t num, std::uint64_t den) {
  x *= static_cast<unsigned long>(num);
  if (mpz_tdiv_q_ui(x.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(den)) != 0) {
    throw std::logic_error("inexact binomial step");
  }
}

// Row of binom(n, l) for l = 0..count-1 (zero past n).
std::vector<BigInt> binomial_row(std::uint64_t n, std::uint64_t count) {
  std::vector<BigInt> row(count);
  BigInt b = 1;
  for (std::uint64_t l = 0; l < count; ++l) {
    row[l] = b;
    if (l >= n) {
      b = 0;
    } else {
      scale_exact(b, n - l, l + 1);
    }
  }
  return row;
}

Rational frac(const BigInt& num, const BigInt& den) { return make_rational(num, den); }

BigInt ipow(const BigInt& base, std::uint64_t e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

}  // namespace

void CentralBinomialStream::advance() {
  scale_exact(value_, 2 * (2 * k_ + 1), k_ + 1);
  ++k_;
}

std::vector<BigInt> central_binomials(std::uint64_t count) {
  std::vector<BigInt> out;
  out.reserve(count);
  CentralBinomialStream c;
  for (std::uint64_t k = 0; k < count; ++k, c.advance()) out.push_back(c.value());
  return out;
}

BigInt central_sum(std::uint64_t n) {
  if (n == 0) throw DomainError("central_sum: n must be positive");
  BigInt sum = 0;
  CentralBinomialStream c;
  for (std::uint64_t k = 0; k < n; ++k, c.advance()) sum += c.value();
  return sum;
}

Rational scaled_sum(std::int64_t m, std::uint64_t n) {
  if (m == 0) throw DomainError("scaled_sum: m must be nonzero");
  if (n == 0) throw DomainError("scaled_sum: n must be positive");
  // Horner over the common denominator m^{n-1}.
  const BigInt mb(static_cast<long>(m));
  BigInt num = 0;
  CentralBinomialStream c;
  for (std::uint64_t k = 0; k < n; ++k, c.advance()) {
    num *= mb;
    num += c.value();
  }
  return frac(num, ipow(mb, n - 1));
}

Rational alt_sum(std::int64_t m, std::uint64_t n) {
  if (m == 0) throw DomainError("alt_sum: m must be nonzero");
  if (n == 0) throw DomainError("alt_sum: n must be positive");
  const BigInt mb(static_cast<long>(m));
  BigInt num = 0;
  BigInt row = 1;  // binom(n-1, k)
  CentralBinomialStream c;
  for (std::uint64_t k = 0; k < n; ++k, c.advance()) {
    num *= mb;
    if (k % 2 == 0) {
      num += c.value() * row;
    } else {
      num -= c.value() * row;
    }
    if (k + 1 < n) scale_exact(row, n - 1 - k, k + 1);
  }
  return frac(num, ipow(mb, n - 1));
}

IdentitySides sun_tauraso_sides(std::int64_t m, std::uint64_t n) {
  const BigInt mb(static_cast<long>(m));
  Rational lhs = Rational(ipow(mb, n - 1)) * scaled_sum(m, n);
  const auto u = lucas_u_prefix(LucasParams::for_m(m), n);
  BigInt rhs = 0;
  BigInt b = 1;  // binom(2n, k)
  for (std::uint64_t k = 0; k < n; ++k) {
    rhs += b * u[n - k];
    scale_exact(b, 2 * n - k, k + 1);
  }
  lhs.canonicalize();
  return {lhs, Rational(rhs)};
}

bool check_sun_tauraso(std::int64_t m, std::uint64_t n) { return sun_tauraso_sides(m, n).holds(); }

IdentitySides rewrite_identity_sides(std::uint64_t n, std::uint64_t k) {
  if (n == 0 || k >= n) throw DomainError("rewrite identity needs 0 <= k < n");
  const auto ni = static_cast<std::int64_t>(n);
  const auto ki = static_cast<std::int64_t>(k);
  const BigInt top = binomial(2 * ni, ki);
  const BigInt inner = 2 * binomial(2 * ni - 1, ki) - top;
  return {frac(top, BigInt(static_cast<long>(ni))), frac(inner, BigInt(static_cast<long>(ni - ki)))};
}

bool check_rewrite_identity(std::uint64_t n, std::uint64_t k) { return rewrite_identity_sides(n, k).holds(); }

IdentitySides st2_sides(std::int64_t m, std::uint64_t n) {
  const BigInt mb(static_cast<long>(m));
  Rational lhs = Rational(ipow(mb, n - 1)) * scaled_sum(m, n) / Rational(static_cast<unsigned long>(n));
  lhs.canonicalize();
  const auto u = lucas_u_prefix(LucasParams::for_m(m), n);
  const auto full = binomial_row(2 * n, n);
  const auto odd = binomial_row(2 * n - 1, n);
  Rational rhs = 0;
  for (std::uint64_t k = 0; k < n; ++k) {
    rhs += frac((2 * odd[k] - full[k]) * u[n - k], BigInt(static_cast<unsigned long>(n - k)));
  }
  return {lhs, rhs};
}

bool check_st2(std::int64_t m, std::uint64_t n) { return st2_sides(m, n).holds(); }

IdentitySides sun32_sides(std::int64_t m, std::uint64_t n) {
  Rational lhs = alt_sum(m, n) / Rational(static_cast<unsigned long>(n));
  lhs.canonicalize();
  // Prefix sums scaled_sum(m, k) for k = 1..n.
  const Rational inv_m = make_rational(BigInt(1), BigInt(static_cast<long>(m)));
  Rational prefix = 0;
  Rational weight = 1;  // m^{-l}
  CentralBinomialStream c;
  BigInt b = 1;  // binom(n-1, k-1)
  Rational rhs = 0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    prefix += Rational(c.value()) * weight;
    c.advance();
    weight *= inv_m;
    Rational term = prefix * Rational(b) / Rational(static_cast<unsigned long>(k));
    if (k % 2 == 1) {
      rhs += term;
    } else {
      rhs -= term;
    }
    if (k < n) scale_exact(b, n - k, k);
  }
  rhs.canonicalize();
  return {lhs, rhs};
}

bool check_sun32(std::int64_t m, std::uint64_t n) { return sun32_sides(m, n).holds(); }

std::pair<Rational, Rational> convolution_sides(std::uint64_t n, const Rational& x) {
  const auto c = central_binomials(n + 1);
  const auto row = binomial_row(n, n + 1);
  Rational lhs = 0;
  Rational neg_x_pow = 1;
  const Rational neg_x = -x;
  for (std::uint64_t k = 0; k <= n; ++k) {
    lhs += Rational(c[k] * row[k]) * neg_x_pow;
    neg_x_pow *= neg_x;
  }
  Rational rhs = 0;
  Rational y_pow = 1;
  const Rational y = Rational(1) - Rational(4) * x;
  for (std::uint64_t j = 0; j <= n; ++j) {
    rhs += Rational(c[j] * c[n - j]) * y_pow;
    y_pow *= y;
  }
  rhs /= Rational(power(4, n));
  lhs.canonicalize();
  rhs.canonicalize();
  return {lhs, rhs};
}

IdentitySides x1_specialization_sides(std::uint64_t n) {
  if (n == 0) throw DomainError("x1 specialization needs n >= 1");
  const auto c = central_binomials(n);
  const auto row = binomial_row(n - 1, n);
  BigInt lhs = 0;
  for (std::uint64_t k = 0; k < n; ++k) {
    if (k % 2 == 0) {
      lhs += c[k] * row[k];
    } else {
      lhs -= c[k] * row[k];
    }
  }
  BigInt rhs = 0;
  BigInt p3 = 1;
  for (std::uint64_t k = 0; k < n; ++k) {
    rhs += p3 * c[k] * c[n - 1 - k];
    p3 *= -3;
  }
  return {Rational(lhs), frac(rhs, power(4, n - 1))};
}

bool check_x1_specialization(std::uint64_t n) { return x1_specialization_sides(n).holds(); }

IdentitySides quarter_power_sides(std::uint64_t k) {
  if (k == 0) throw DomainError("quarter power sum needs k >= 1");
  const auto ki = static_cast<std::int64_t>(k);
  return {scaled_sum(4, k), frac(BigInt(static_cast<long>(ki)) * binomial(2 * ki, ki), power(2, 2 * k - 1))};
}

bool check_quarter_power_sum(std::uint64_t k) { return quarter_power_sides(k).holds(); }

IdentitySides half_binomial_chain_sides(std::uint64_t k) {
  if (k == 0) throw DomainError("half binomial chain needs k >= 1");
  const Rational minus_half = make_rational(BigInt(-1), BigInt(2));
  Rational lhs = 0;
  for (std::uint64_t l = 0; l < k; ++l) {
    Rational g = generalized_binomial(minus_half, l);
    if (l % 2 == 0) {
      lhs += g;
    } else {
      lhs -= g;
    }
  }
  Rational rhs = generalized_binomial(make_rational(BigInt(-3), BigInt(2)), k - 1);
  if ((k - 1) % 2 == 1) rhs = -rhs;
  lhs.canonicalize();
  return {lhs, rhs};
}

FOfA f_of_a(int a, std::int64_t m) {
  if (a < 2) throw DomainError("f_of_a: a must be at least 2");
  if (m % 3 == 0) throw DomainError("f_of_a: m must not be divisible by 3");
  const std::uint64_t top = static_cast<std::uint64_t>(power(3, static_cast<std::uint64_t>(a)).get_ui());
  const BigInt mb(static_cast<long>(m));
  // Numerator over the common denominator m^{3^a - 1}, by Horner in k.
  BigInt num = 0;
  BigInt outer = 1;  // binom(3^a - 1, k - 1)
  for (std::uint64_t k = 1; k <= top; ++k) {
    BigInt inner = 0;
    BigInt odd = 1;   // binom(2k-1, l)
    BigInt full = 1;  // binom(2k, l)
    for (std::uint64_t l = 0; l < k; ++l) {
      const std::uint64_t j = k - l - 1;
      if (j >= 2) inner += (2 * odd - full) * BigInt(static_cast<unsigned long>(j * (j - 1) / 2));
      scale_exact(odd, 2 * k - 1 - l, l + 1);
      scale_exact(full, 2 * k - l, l + 1);
    }
    num *= mb;
    if (k % 2 == 1) {
      num += outer * inner;
    } else {
      num -= outer * inner;
    }
    if (k < top) scale_exact(outer, top - k, k);
  }
  FOfA out;
  out.value = frac(num, ipow(mb, top - 1));
  out.residue = static_cast<int>(residue_mod_power(3, 1, out.value)->get_si());
  return out;
}

TripleBlock triple_block(std::uint64_t k) {
  if (k == 0) throw DomainError("triple_block: k must be positive");
  TripleBlock out;
  BigInt odd = 1;
  BigInt full = 1;
  out.block_sum = 0;
  for (std::uint64_t l = 0; l < k; ++l) {
    if ((k - l) % 3 == 0) out.block_sum += 2 * odd - full;
    scale_exact(odd, 2 * k - 1 - l, l + 1);
    scale_exact(full, 2 * k - l, l + 1);
  }
  std::uint64_t reduced = k;
  while (reduced % 3 == 0) reduced /= 3;
  const auto r = static_cast<std::int64_t>(reduced);
  out.reduced_binomial = binomial(2 * r - 1, r - 1);
  out.target = k % 3 == 0 ? out.reduced_binomial : BigInt(0);
  auto congruent3 = [](const BigInt& x, const BigInt& y) {
    return mpz_divisible_ui_p(BigInt(x - y).get_mpz_t(), 3) != 0;
  };
  out.holds = congruent3(out.block_sum, out.target);
  out.literal_holds = congruent3(out.block_sum, out.reduced_binomial);
  return out;
}

bool check_triple_block(std::uint64_t k) { return triple_block(k).holds; }

RowFacts row_facts(int a) {
  if (a < 1) throw DomainError("row_facts: a must be at least 1");
  const std::uint64_t top = static_cast<std::uint64_t>(power(3, static_cast<std::uint64_t>(a)).get_ui());
  RowFacts out;
  out.alternating_row = true;
  BigInt b = 1;  // binom(3^a - 1, k)
  for (std::uint64_t k = 0; k < top; ++k) {
    const unsigned long expected = k % 2 == 0 ? 1 : 2;
    if (mpz_fdiv_ui(b.get_mpz_t(), 3) != expected) out.alternating_row = false;
    if (k + 1 < top) scale_exact(b, top - 1 - k, k + 1);
  }
  BigInt sum = 0;
  BigInt c = 1;  // binom(2*3^a - 3, k)
  const std::uint64_t n = 2 * top - 3;
  for (std::uint64_t k = 0; k < top; ++k) {
    sum += c;
    if (k < n) {
      scale_exact(c, n - k, k + 1);
    } else {
      c = 0;
    }
  }
  out.truncated_row_sum = mpz_fdiv_ui(sum.get_mpz_t(), 3) == 1;
  return out;
}

bool check_row_facts(int a) { return row_facts(a).holds(); }

}  // namespace bincert
