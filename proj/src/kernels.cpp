#include "bincert/kernels.hpp"

#include <array>
#include <string>

namespace bincert::kernels {

namespace {

struct Pow3Ring {
  explicit Pow3Ring(int n) : precision(n) {
    if (n < 1 || n > kMaxPrecision) {
      throw PrecisionError("kernel precision " + std::to_string(n) + " outside [1, " +
                           std::to_string(kMaxPrecision) + "]");
    }
    pow3[0] = 1;
    for (int i = 1; i <= n; ++i) pow3[static_cast<std::size_t>(i)] = pow3[static_cast<std::size_t>(i - 1)] * 3;
    modulus = pow3[static_cast<std::size_t>(n)];
  }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % modulus);
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= modulus ? s - modulus : s;
  }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : modulus - a; }
  // unit * 3^e reduced, or 0 once e reaches the precision.
  std::uint64_t shifted(std::uint64_t unit, std::int64_t e) const {
    return e >= precision ? 0 : mul(unit, pow3[static_cast<std::size_t>(e)]);
  }
  std::uint64_t reduce_signed(std::int64_t x) const {
    auto r = static_cast<std::int64_t>(static_cast<std::uint64_t>(x < 0 ? -(x + 1) : x) % modulus);
    if (x < 0) r = static_cast<std::int64_t>(modulus) - 1 - r;
    return static_cast<std::uint64_t>(r);
  }

  int precision;
  std::uint64_t modulus = 1;
  std::array<std::uint64_t, kMaxPrecision + 1> pow3{};
};

struct Split {
  std::uint64_t unit;
  std::int64_t v;
};

inline Split split3(std::uint64_t x) {
  std::int64_t v = 0;
  while (x % 3 == 0) {
    x /= 3;
    ++v;
  }
  return {x, v};
}

// num / den as a residue; den is a unit.
TruncatedPadic finish(const Pow3Ring& ring, std::uint64_t num, std::uint64_t den) {
  TruncatedPadic d = TruncatedPadic::from_residue(3, den, ring.precision);
  TruncatedPadic n = TruncatedPadic::from_residue(3, num, ring.precision);
  if (n.is_zero()) return n;
  return n / d;
}

std::uint64_t unit_of_m(const Pow3Ring& ring, std::int64_t m) {
  if (m % 3 == 0) throw DomainError("3-adic kernels need 3 not dividing m");
  return ring.reduce_signed(m);
}

}  // namespace

TruncatedPadic central_sum_3adic(std::uint64_t n, int precision) { return scaled_sum_3adic(1, n, precision); }

TruncatedPadic scaled_sum_3adic(std::int64_t m, std::uint64_t n, int precision) {
  if (n == 0) throw DomainError("scaled_sum_3adic: n must be positive");
  const Pow3Ring ring(precision);
  const std::uint64_t mu = unit_of_m(ring, m);
  // After step k: sum_{j<=k} binom(2j,j)/m^j = acc / den, and
  // binom(2k,k) = num * 3^e / (den / m^k).
  std::uint64_t acc = 1, den = 1, num = 1;
  std::int64_t e = 0;
  for (std::uint64_t k = 1; k < n; ++k) {
    const Split up = split3(2 * (2 * k - 1));
    const Split down = split3(k);
    e += up.v - down.v;
    num = ring.mul(num, up.unit);
    const std::uint64_t step = ring.mul(down.unit, mu);
    den = ring.mul(den, step);
    acc = ring.add(ring.mul(acc, step), ring.shifted(num, e));
  }
  return finish(ring, acc, den);
}

TruncatedPadic alt_sum_3adic(std::int64_t m, std::uint64_t n, int precision) {
  if (n == 0) throw DomainError("alt_sum_3adic: n must be positive");
  const Pow3Ring ring(precision);
  const std::uint64_t mu = unit_of_m(ring, m);
  // Term k is (-1)^k binom(2k,k) binom(n-1,k) / m^k; the step from k-1 to
  // k multiplies by -2(2k-1)(n-k) / (k^2 m).
  std::uint64_t acc = 1, den = 1, num = 1;
  std::int64_t e = 0;
  for (std::uint64_t k = 1; k < n; ++k) {
    const Split up = split3(2 * (2 * k - 1));
    const Split row = split3(n - k);
    const Split down = split3(k);
    e += up.v + row.v - 2 * down.v;
    num = ring.mul(num, ring.mul(up.unit % ring.modulus, row.unit % ring.modulus));
    const std::uint64_t step = ring.mul(ring.mul(down.unit, down.unit), mu);
    den = ring.mul(den, step);
    std::uint64_t term = ring.shifted(num, e);
    if (k % 2 == 1) term = ring.neg(term);
    acc = ring.add(ring.mul(acc, step), term);
  }
  return finish(ring, acc, den);
}

}  // namespace bincert::kernels
