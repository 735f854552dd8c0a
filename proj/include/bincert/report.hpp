#pragma once

// JSON reports.  Keys are emitted in a fixed order and big integers as
// decimal strings, so equal inputs give byte-identical files.

#include "bincert/claim.hpp"
#include "bincert/sweep.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bincert {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const Measured& m);
Json to_json(const Requirement& r);
Json to_json(const Params& params);
Json record_json(const ClaimResult& r);

/// The `verify` report.  Wall time is included only when `timing` is set.
Json verify_report(const SweepConfig& config, const SweepOutcome& outcome, bool timing);

struct IdentityConfig {
  std::uint64_t n_max = 0;
  std::vector<std::int64_t> m_values;
  std::vector<Rational> x_values;
  std::optional<std::uint64_t> triple_max;   // defaults to n_max
  std::optional<std::uint64_t> quarter_max;  // defaults to n_max
  std::vector<std::int64_t> row_a;           // row facts, off when empty
  std::vector<std::int64_t> f_a;             // f(a), off when empty
  std::int64_t f_m = 7;
};

struct IdentityRecord {
  std::string identity;
  Params params;
  std::optional<Rational> x;
  std::optional<int> residue;  // f(a) mod 3
  bool pass = false;
  Rational lhs;
  Rational rhs;
};

struct IdentityRun {
  std::vector<IdentityRecord> records;
  std::vector<SkippedTuple> skipped;
};

/// Every identity instance in range, each evaluated on both sides exactly.
IdentityRun run_identities(const IdentityConfig& config);

Json identities_report(const IdentityConfig& config, const IdentityRun& run);

/// Exit status contract: 0 iff the report's failures array is empty.
inline int exit_status(const Json& report) { return report.at("failures").empty() ? 0 : 1; }

}  // namespace bincert
