#include "bincert/theorems.hpp"

#include "bincert/binom_sums.hpp"
#include "bincert/kernels.hpp"
#include "bincert/padic.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace bincert {

namespace {

using MaybeMeasured = std::optional<Measured>;

// Guard digits on top of the required exponent and twice the digits lost
// dividing by n (or 3^a).
constexpr std::int64_t kGuardDigits = 8;

std::int64_t nu3(std::uint64_t n) { return nu(3, static_cast<std::int64_t>(n)).value(); }

void require_one_mod_three(std::int64_t m, const char* who) {
  if (((m % 3) + 3) % 3 != 1) throw DomainError(std::string(who) + ": m must be 1 mod 3");
}

std::uint64_t pow3(int a) { return static_cast<std::uint64_t>(power(3, static_cast<std::uint64_t>(a)).get_ui()); }

int clamp_precision(std::int64_t wanted) {
  return static_cast<int>(std::clamp<std::int64_t>(wanted, 1, kernels::kMaxPrecision));
}

// Evaluates a 3-integral sum at increasing precision until its valuation is
// pinned down; nullopt if it still reads as zero at the word limit.
std::optional<std::int64_t> truncated_valuation(std::int64_t wanted,
                                                const std::function<TruncatedPadic(int)>& kernel) {
  for (int n = clamp_precision(wanted);; n = clamp_precision(n + kGuardDigits)) {
    TruncatedPadic s = kernel(n);
    if (!s.is_zero()) return s.exponent();
    if (n == kernels::kMaxPrecision) return std::nullopt;
  }
}

// Residue mod 3^t of sum / 3^a; nullopt when the word limit cannot cover t + a.
MaybeMeasured truncated_residue(std::int64_t t, int a, std::int64_t wanted,
                                const std::function<TruncatedPadic(int)>& kernel) {
  const int n = clamp_precision(wanted);
  if (n < t + a) return std::nullopt;
  TruncatedPadic lhs = kernel(n).shifted(-a);
  if (!lhs.is_zero() && lhs.exponent() < 0) return Measured::of_valuation(lhs.exponent());
  return Measured::of_residue(lhs.residue(t));
}

Measured exact_residue(std::int64_t t, const Rational& x) {
  auto r = residue_mod_power(3, t, x);
  if (!r) return Measured::of_valuation(nu(3, x));
  return Measured::of_residue(*r);
}

ClaimResult run_modes(ClaimId id, Params params, Requirement required, bool vacuous, Mode mode,
                      const std::function<Measured()>& exact, const std::function<MaybeMeasured()>& fast) {
  if (mode == Mode::Exact || !fast) return make_result(id, std::move(params), exact(), std::move(required), vacuous, Mode::Exact);
  if (mode == Mode::Truncated) {
    if (auto t = fast()) return make_result(id, std::move(params), *t, std::move(required), vacuous, Mode::Truncated);
    return make_result(id, std::move(params), exact(), std::move(required), vacuous, Mode::Exact);
  }
  const Measured e = exact();
  const MaybeMeasured t = fast();
  if (!t) return make_result(id, std::move(params), e, std::move(required), vacuous, Mode::Exact);
  ClaimResult r = make_result(id, std::move(params), e, std::move(required), vacuous, Mode::Both);
  if (!(*t == e)) {
    r.disagreeing_truncated = *t;
    r.pass = false;
  }
  return r;
}

BigInt mod_pow3(const BigInt& x, std::int64_t t) {
  BigInt m = power(3, static_cast<std::uint64_t>(t));
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

ClaimResult check_ssz(std::uint64_t n, Mode mode) {
  if (n == 0) throw DomainError("check_ssz: n must be positive");
  const auto ni = static_cast<std::int64_t>(n);
  const std::int64_t target = 2 * nu3(n) + nu_binomial(3, 2 * ni, ni).value();
  return run_modes(
      ClaimId::SSZ_11, {{"n", ni}}, Requirement::equals(target), false, mode,
      [&] { return Measured::of_valuation(nu(3, central_sum(n))); },
      [&]() -> MaybeMeasured {
        auto v = truncated_valuation(target + 2 * nu3(n) + kGuardDigits,
                                     [&](int prec) { return kernels::central_sum_3adic(n, prec); });
        if (!v) return std::nullopt;
        return Measured::of_valuation(*v);
      });
}

std::uint64_t default_sun12_prime(std::int64_t m) {
  if (m == 4) return 3;
  std::uint64_t rest = m > 4 ? static_cast<std::uint64_t>(m - 4) : static_cast<std::uint64_t>(4 - m);
  while (rest % 2 == 0) rest /= 2;
  std::uint64_t largest = 0;
  for (std::uint64_t d = 3; d <= rest / d; d += 2) {
    while (rest % d == 0) {
      largest = d;
      rest /= d;
    }
  }
  if (rest > 1) largest = std::max(largest, rest);
  if (largest == 0) throw DomainError("check_sun12: m - 4 has no odd prime divisor");
  return largest;
}

Sun12Result check_sun12(std::int64_t m, std::optional<std::uint64_t> p, std::uint64_t n) {
  if (n == 0) throw DomainError("check_sun12: n must be positive");
  const std::uint64_t prime = p ? *p : default_sun12_prime(m);
  require_odd_prime(prime);
  if ((m - 4) % static_cast<std::int64_t>(prime) != 0) {
    throw DomainError("check_sun12: p=" + std::to_string(prime) + " does not divide m-4");
  }
  const auto ni = static_cast<std::int64_t>(n);
  const std::int64_t bound = nu(prime, ni).value();
  // Both sums are p-integral since p does not divide m.
  const bool vacuous = bound <= 0;
  const Params params{{"m", m}, {"p", static_cast<std::int64_t>(prime)}, {"n", ni}};
  return {make_result(ClaimId::SUN_12A, params, Measured::of_valuation(nu(prime, scaled_sum(m, n))),
                      Requirement::at_least(bound, prime), vacuous, Mode::Exact),
          make_result(ClaimId::SUN_12B, params, Measured::of_valuation(nu(prime, alt_sum(m, n))),
                      Requirement::at_least(bound, prime), vacuous, Mode::Exact)};
}

ClaimResult check_scc1(std::int64_t m, std::uint64_t n, Mode mode) {
  require_one_mod_three(m, "check_scc1");
  if (n == 0) throw DomainError("check_scc1: n must be positive");
  const std::int64_t vn = nu3(n);
  const ExtendedValuation vm = nu(3, m - 1);
  const std::int64_t bound = vm.is_infinite() ? vn : std::min(vn, vm.value() - 1);
  // The sum is 3-integral, so nu_3(sum/n) >= -nu_3(n) always.
  const bool vacuous = bound <= -vn;
  const auto ni = static_cast<std::int64_t>(n);
  return run_modes(
      ClaimId::SCC1, {{"m", m}, {"n", ni}}, Requirement::at_least(bound), vacuous, mode,
      [&] { return Measured::of_valuation(nu(3, scaled_sum(m, n) / Rational(static_cast<unsigned long>(n)))); },
      [&]() -> MaybeMeasured {
        auto v = truncated_valuation(bound + 2 * vn + kGuardDigits,
                                     [&](int prec) { return kernels::scaled_sum_3adic(m, n, prec); });
        if (!v) return std::nullopt;
        return Measured::of_valuation(*v - vn);
      });
}

ClaimResult check_scc3(std::int64_t m, std::uint64_t n, Mode mode) {
  require_one_mod_three(m, "check_scc3");
  if (n == 0) throw DomainError("check_scc3: n must be positive");
  const std::int64_t vn = nu3(n);
  const ExtendedValuation vm = nu(3, m - 1);
  const std::int64_t bound = (vm.is_infinite() ? vn : std::min(vn, vm.value())) - 1;
  const bool vacuous = bound <= -vn;
  const auto ni = static_cast<std::int64_t>(n);
  return run_modes(
      ClaimId::SCC3, {{"m", m}, {"n", ni}}, Requirement::at_least(bound), vacuous, mode,
      [&] { return Measured::of_valuation(nu(3, alt_sum(m, n) / Rational(static_cast<unsigned long>(n)))); },
      [&]() -> MaybeMeasured {
        auto v = truncated_valuation(bound + 2 * vn + kGuardDigits,
                                     [&](int prec) { return kernels::alt_sum_3adic(m, n, prec); });
        if (!v) return std::nullopt;
        return Measured::of_valuation(*v - vn);
      });
}

ClaimResult check_scc2(std::int64_t m, int a, Mode mode) {
  require_one_mod_three(m, "check_scc2");
  if (m == 1) throw DomainError("check_scc2: m = 1 admits no a >= nu_3(m-1)");
  const std::int64_t t = nu(3, m - 1).value();
  if (a < 1 || a < t) throw DomainError("check_scc2: need a >= max(1, nu_3(m-1))");
  const std::uint64_t n = pow3(a);
  const BigInt target = mod_pow3(BigInt(static_cast<long>((m - 1) / 3)), t);
  return run_modes(
      ClaimId::SCC2, {{"m", m}, {"a", a}}, Requirement::residue(target, t), false, mode,
      [&] { return exact_residue(t, scaled_sum(m, n) / Rational(power(3, static_cast<std::uint64_t>(a)))); },
      [&]() -> MaybeMeasured {
        return truncated_residue(t, a, t + 2 * a + kGuardDigits,
                                 [&](int prec) { return kernels::scaled_sum_3adic(m, n, prec); });
      });
}

ClaimResult check_scc4(std::int64_t m, int a, Mode mode) {
  require_one_mod_three(m, "check_scc4");
  if (m == 1) throw DomainError("check_scc4: m = 1 admits no a > nu_3(m-1)");
  const std::int64_t t = nu(3, m - 1).value();
  if (a <= t) throw DomainError("check_scc4: need a > nu_3(m-1)");
  const std::uint64_t n = pow3(a);
  const BigInt target = mod_pow3(BigInt(static_cast<long>(-(m - 1) / 3)), t);
  return run_modes(
      ClaimId::SCC4, {{"m", m}, {"a", a}}, Requirement::residue(target, t), false, mode,
      [&] { return exact_residue(t, alt_sum(m, n) / Rational(power(3, static_cast<std::uint64_t>(a)))); },
      [&]() -> MaybeMeasured {
        return truncated_residue(t, a, t + 2 * a + kGuardDigits,
                                 [&](int prec) { return kernels::alt_sum_3adic(m, n, prec); });
      });
}

ClaimResult check_scc5(int a, Mode mode) {
  if (a < 2) throw DomainError("check_scc5: a must be at least 2");
  const std::uint64_t n = pow3(a);
  const BigInt target = mod_pow3(-power(3, static_cast<std::uint64_t>(a - 1)), a);
  return run_modes(
      ClaimId::SCC5, {{"a", a}}, Requirement::residue(target, a), false, mode,
      [&] { return exact_residue(a, alt_sum(1, n) / Rational(power(3, static_cast<std::uint64_t>(a)))); },
      [&]() -> MaybeMeasured {
        return truncated_residue(a, a, 3 * a + kGuardDigits,
                                 [&](int prec) { return kernels::alt_sum_3adic(1, n, prec); });
      });
}

ClaimResult check_nk2kk(std::uint64_t n, Mode mode) {
  if (n == 0) throw DomainError("check_nk2kk: n must be positive");
  const std::int64_t vn = nu3(n);
  const std::int64_t bound = 2 * vn - 1;
  const auto ni = static_cast<std::int64_t>(n);
  return run_modes(
      ClaimId::NK2KK, {{"n", ni}}, Requirement::at_least(bound), bound <= 0, mode,
      [&] { return Measured::of_valuation(nu(3, alt_sum(1, n))); },
      [&]() -> MaybeMeasured {
        auto v = truncated_valuation(bound + 2 * vn + kGuardDigits,
                                     [&](int prec) { return kernels::alt_sum_3adic(1, n, prec); });
        if (!v) return std::nullopt;
        return Measured::of_valuation(*v);
      });
}

ClaimResult check_lemma42_tail(std::uint64_t count) {
  if (count == 0) throw DomainError("check_lemma42_tail: need at least one term");
  const auto k = static_cast<std::int64_t>(count);
  const std::int64_t bound = k - ceil_log3(2 * count + 1);
  // Every term (-3)^k/(2k+1) is 3-integral.
  return make_result(ClaimId::LEMMA42, {{"K", k}}, Measured::of_valuation(nu(3, lemma42_partial(count))),
                     Requirement::at_least(bound), bound <= 0, Mode::Exact);
}

}  // namespace bincert
