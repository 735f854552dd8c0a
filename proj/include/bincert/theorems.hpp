#pragma once

// One checker per valuation formula / congruence.  Each returns a
// ClaimResult; `mode` picks the exact route, the truncated 3-adic route, or
// both with a cross-check.  Claims without a truncated route always run
// exactly.

#include "bincert/claim.hpp"

#include <cstdint>
#include <optional>

namespace bincert {

/// nu_3(sum_{k<n} binom(2k,k)) == 2 nu_3(n) + nu_3(binom(2n, n)).
ClaimResult check_ssz(std::uint64_t n, Mode mode = Mode::Exact);

/// Largest odd prime dividing m - 4 (3 when m == 4).  Throws DomainError
/// when m - 4 has no odd prime factor.
std::uint64_t default_sun12_prime(std::int64_t m);

struct Sun12Result {
  ClaimResult scaled;       // SUN_12A
  ClaimResult alternating;  // SUN_12B
  bool pass() const { return scaled.pass && alternating.pass; }
};

/// nu_p(scaled_sum(m, n)) >= nu_p(n) and nu_p(alt_sum(m, n)) >= nu_p(n)
/// for an odd prime p dividing m - 4.
Sun12Result check_sun12(std::int64_t m, std::optional<std::uint64_t> p, std::uint64_t n);

/// nu_3(scaled_sum(m, n)/n) >= min(nu_3(n), nu_3(m-1) - 1), m == 1 (mod 3).
ClaimResult check_scc1(std::int64_t m, std::uint64_t n, Mode mode = Mode::Exact);

/// scaled_sum(m, 3^a)/3^a == (m-1)/3 (mod 3^{nu_3(m-1)}), a >= nu_3(m-1).
ClaimResult check_scc2(std::int64_t m, int a, Mode mode = Mode::Exact);

/// nu_3(alt_sum(m, n)/n) >= min(nu_3(n), nu_3(m-1)) - 1, m == 1 (mod 3).
ClaimResult check_scc3(std::int64_t m, std::uint64_t n, Mode mode = Mode::Exact);

/// alt_sum(m, 3^a)/3^a == -(m-1)/3 (mod 3^{nu_3(m-1)}), a > nu_3(m-1).
ClaimResult check_scc4(std::int64_t m, int a, Mode mode = Mode::Exact);

/// alt_sum(1, 3^a)/3^a == -3^{a-1} (mod 3^a), a >= 2.
ClaimResult check_scc5(int a, Mode mode = Mode::Exact);

/// nu_3(alt_sum(1, n)) >= 2 nu_3(n) - 1.
ClaimResult check_nk2kk(std::uint64_t n, Mode mode = Mode::Exact);

/// nu_3(lemma42_partial(K)) >= K - ceil(log_3(2K+1)), K >= 1.
ClaimResult check_lemma42_tail(std::uint64_t count);

}  // namespace bincert
