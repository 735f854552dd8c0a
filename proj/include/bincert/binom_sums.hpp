#pragma once

// Central binomial sums and the exact identities relating them.
//
// Every identity is evaluated on both sides with exact rationals; an
// identity holds only on exact equality.

#include "bincert/exact_arith.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace bincert {

/// Streams binom(2k, k) for k = 0, 1, 2, ... using
/// binom(2k+2, k+1) = binom(2k, k) * 2(2k+1) / (k+1).
class CentralBinomialStream {
 public:
  const BigInt& value() const { return value_; }
  std::uint64_t index() const { return k_; }
  void advance();

 private:
  BigInt value_ = 1;
  std::uint64_t k_ = 0;
};

/// binom(2k, k) for k < count.
std::vector<BigInt> central_binomials(std::uint64_t count);

/// sum_{k<n} binom(2k, k).
BigInt central_sum(std::uint64_t n);

/// sum_{k<n} binom(2k, k) / m^k.
Rational scaled_sum(std::int64_t m, std::uint64_t n);

/// sum_{k<n} (-1)^k binom(2k, k) binom(n-1, k) / m^k.
Rational alt_sum(std::int64_t m, std::uint64_t n);

struct IdentitySides {
  Rational lhs;
  Rational rhs;
  bool holds() const { return lhs == rhs; }
};

/// m^{n-1} scaled_sum(m, n) = sum_{k<n} binom(2n, k) u_{n-k}(m-2, 1).
IdentitySides sun_tauraso_sides(std::int64_t m, std::uint64_t n);
bool check_sun_tauraso(std::int64_t m, std::uint64_t n);

/// binom(2n, k)/n = (2 binom(2n-1, k) - binom(2n, k)) / (n-k), 0 <= k < n.
IdentitySides rewrite_identity_sides(std::uint64_t n, std::uint64_t k);
bool check_rewrite_identity(std::uint64_t n, std::uint64_t k);

/// (m^{n-1}/n) scaled_sum(m, n)
///   = sum_{k<n} (2 binom(2n-1, k) - binom(2n, k)) u_{n-k}(m-2, 1) / (n-k).
IdentitySides st2_sides(std::int64_t m, std::uint64_t n);
bool check_st2(std::int64_t m, std::uint64_t n);

/// alt_sum(m, n)/n = sum_{k=1}^{n} ((-1)^{k-1}/k) binom(n-1, k-1) scaled_sum(m, k).
IdentitySides sun32_sides(std::int64_t m, std::uint64_t n);
bool check_sun32(std::int64_t m, std::uint64_t n);

/// Both sides of the convolution identity
///   sum_{k<=n} binom(2k,k) binom(n,k) (-x)^k
///     = 4^{-n} sum_{j<=n} binom(2j,j) binom(2(n-j), n-j) (1-4x)^j.
/// The right-hand power is indexed by j, the convolution variable.
std::pair<Rational, Rational> convolution_sides(std::uint64_t n, const Rational& x);

/// The x = 1 case with n-1 in place of n:
///   sum_{k<n} (-1)^k binom(2k,k) binom(n-1,k)
///     = 4^{1-n} sum_{k<n} (-3)^k binom(2k,k) binom(2(n-1-k), n-1-k).
IdentitySides x1_specialization_sides(std::uint64_t n);
bool check_x1_specialization(std::uint64_t n);

/// scaled_sum(4, k) = k binom(2k, k) / 2^{2k-1}, k >= 1.
IdentitySides quarter_power_sides(std::uint64_t k);
bool check_quarter_power_sum(std::uint64_t k);

/// sum_{l<k} (-1)^l binom(-1/2, l) = (-1)^{k-1} binom(-3/2, k-1), k >= 1.
IdentitySides half_binomial_chain_sides(std::uint64_t k);

struct FOfA {
  Rational value;
  int residue = 0;  // value mod 3, in {0, 1, 2}
};

/// f(a) = sum_{k=1}^{3^a} ((-1)^{k-1}/m^{k-1}) binom(3^a-1, k-1)
///          * sum_{l<k} (2 binom(2k-1, l) - binom(2k, l)) binom(k-l-1, 2),
/// where binom(j, 2) = 0 for j < 2.  Requires a >= 2 and 3 not dividing m.
FOfA f_of_a(int a, std::int64_t m);

/// Block sums over l in [0, k-1] with 3 | k - l of 2 binom(2k-1, l) - binom(2k, l).
///
/// The congruence is read as: for 3 | k, the block sum is
/// binom(2k'-1, k'-1) mod 3 with k' = k / 3^{nu_3(k)}; for 3 not dividing k
/// the block sum vanishes mod 3.  Read without the 3 | k split (the same
/// binomial on the right for every k), the congruence already fails at
/// k = 1, 4, 10, 13, ...; `literal_holds` records that reading.
struct TripleBlock {
  BigInt block_sum;
  BigInt reduced_binomial;  // binom(2k'-1, k'-1)
  BigInt target;            // reduced_binomial when 3 | k, else 0
  bool holds = false;
  bool literal_holds = false;
};
TripleBlock triple_block(std::uint64_t k);
bool check_triple_block(std::uint64_t k);

/// binom(3^a - 1, k) == (-1)^k (mod 3) for every 0 <= k < 3^a, and
/// sum_{k<3^a} binom(2*3^a - 3, k) == 1 (mod 3).
struct RowFacts {
  bool alternating_row = false;
  bool truncated_row_sum = false;
  bool holds() const { return alternating_row && truncated_row_sum; }
};
RowFacts row_facts(int a);
bool check_row_facts(int a);

}  // namespace bincert
