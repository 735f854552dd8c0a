#pragma once

// Word-sized 3-adic evaluation of the binomial sums.
//
// Each kernel reduces every term modulo 3^N and returns the sum as a
// TruncatedPadic known modulo 3^N.  Binomials are carried as
// (unit numerator, unit denominator, power of 3) so the loop needs no
// modular inverses until the final division.  3^N must fit in 63 bits.

#include "bincert/padic.hpp"

#include <cstdint>

namespace bincert::kernels {

inline constexpr int kMaxPrecision = 39;

/// sum_{k<n} binom(2k, k) mod 3^precision.
TruncatedPadic central_sum_3adic(std::uint64_t n, int precision);

/// sum_{k<n} binom(2k, k) / m^k mod 3^precision; 3 must not divide m.
TruncatedPadic scaled_sum_3adic(std::int64_t m, std::uint64_t n, int precision);

/// sum_{k<n} (-1)^k binom(2k, k) binom(n-1, k) / m^k mod 3^precision;
/// 3 must not divide m.
TruncatedPadic alt_sum_3adic(std::int64_t m, std::uint64_t n, int precision);

}  // namespace bincert::kernels
