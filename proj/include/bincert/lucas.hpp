#pragma once

// Lucas sequences u_n(A, B): u_0 = 0, u_1 = 1, u_{n+1} = A u_n - B u_{n-1}.

#include "bincert/claim.hpp"
#include "bincert/exact_arith.hpp"

#include <cstdint>
#include <vector>

namespace bincert {

struct LucasParams {
  std::int64_t A = 0;
  std::int64_t B = 0;

  /// A^2 - 4B; m(m - 4) for the family (A, B) = (m - 2, 1).
  BigInt discriminant() const { return BigInt(static_cast<long>(A)) * A - BigInt(4) * static_cast<long>(B); }

  static LucasParams for_m(std::int64_t m) { return {m - 2, 1}; }
};

BigInt lucas_u(const LucasParams& params, std::uint64_t n);

/// u_0, ..., u_n.
std::vector<BigInt> lucas_u_prefix(const LucasParams& params, std::uint64_t n);

/// u_n(m - 2, 1) from the binomial closed form
///   2^{1-n} sum_{odd k <= n} (n/k) binom(n-1, k-1) (m-2)^{n-k} Delta^{(k-1)/2}.
/// Throws std::logic_error if the evaluation is not an integer.
Rational lucas_u_closed(std::int64_t m, std::uint64_t n);

/// u_n(-1, 1), which cycles 0, 1, -1 with period 3.
int u_neg11_fast(std::uint64_t n);

/// The three congruences relating u_n(m-2,1)/n and u_n(-1,1)/n for
/// m == 1 (mod 3).  Parts carry a `part` parameter:
///   1: difference minus ((m-1)/3) binom(n-1, 2) has nu_3 >= nu_3(m-1)  (m != 4)
///   2: difference has nu_3 >= 1                                          (m == 4)
///   3: difference has nu_3 >= nu_3(m-1) - 1                              (always)
/// Throws DomainError when m is not 1 mod 3 or n == 0.
ClaimResult check_lemma21(std::int64_t m, std::uint64_t n);

}  // namespace bincert
