#pragma once

// Verification records shared by every claim checker.

#include "bincert/exact_arith.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bincert {

enum class ClaimId {
  SSZ_11,
  SUN_12A,
  SUN_12B,
  SCC1,
  SCC2,
  SCC3,
  SCC4,
  SCC5,
  NK2KK,
  LEMMA21,
  LEMMA41,
  LEMMA42,
  AUX,
};

/// Arithmetic route that produced a measurement.
enum class Mode { Exact, Truncated, Both };

std::string_view to_string(ClaimId id);
std::optional<ClaimId> parse_claim_id(std::string_view text);
std::string_view to_string(Mode mode);

struct Measured {
  enum class Kind { Valuation, Residue };

  Kind kind = Kind::Valuation;
  ExtendedValuation valuation;
  BigInt residue;

  static Measured of_valuation(ExtendedValuation v) { return {Kind::Valuation, v, BigInt(0)}; }
  static Measured of_residue(BigInt r) { return {Kind::Residue, 0, std::move(r)}; }

  friend bool operator==(const Measured& a, const Measured& b) {
    if (a.kind != b.kind) return false;
    return a.kind == Kind::Valuation ? a.valuation == b.valuation : a.residue == b.residue;
  }
  std::string to_string() const;
};

/// What a measurement must satisfy.  Valuation kinds compare nu_p against
/// `bound`; Residue compares against `target` modulo p^`bound`.
struct Requirement {
  enum class Kind { AtLeast, Equals, Residue };

  Kind kind = Kind::AtLeast;
  std::int64_t bound = 0;
  BigInt target;
  std::uint64_t prime = 3;

  static Requirement at_least(std::int64_t b, std::uint64_t p = 3) { return {Kind::AtLeast, b, BigInt(0), p}; }
  static Requirement equals(std::int64_t b, std::uint64_t p = 3) { return {Kind::Equals, b, BigInt(0), p}; }
  static Requirement residue(BigInt target, std::int64_t exponent, std::uint64_t p = 3) {
    return {Kind::Residue, exponent, std::move(target), p};
  }
  std::string to_string() const;
};

bool satisfies(const Measured& m, const Requirement& r);

/// Named integer parameters in a fixed, claim-specific key order.
using Params = std::vector<std::pair<std::string, std::int64_t>>;

struct ClaimResult {
  ClaimId id = ClaimId::AUX;
  Params params;
  Measured measured;
  Requirement required;
  bool vacuous = false;
  Mode mode = Mode::Exact;
  bool pass = false;
  // Set only in Both mode when the two routes measured different values;
  // a disagreement fails the record regardless of the bound.
  std::optional<Measured> disagreeing_truncated;
  // Sub-claims.  When non-empty this record mirrors the first failing part
  // (or the last part) and `pass` is the conjunction of the parts.
  std::vector<ClaimResult> parts;

  std::int64_t param(std::string_view key) const;
};

ClaimResult make_result(ClaimId id, Params params, Measured measured, Requirement required,
                        bool vacuous, Mode mode);

/// Builds a parent record over sub-claims.
ClaimResult combine_parts(ClaimId id, Params params, std::vector<ClaimResult> parts);

/// The records a report lists for r: r itself, or its parts.
std::vector<ClaimResult> leaves(const ClaimResult& r);

/// Total order used to sort reports: claim id, then parameter values.
bool record_less(const ClaimResult& a, const ClaimResult& b);

}  // namespace bincert
