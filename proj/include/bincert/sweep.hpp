#pragma once

// Parameter sweeps over one claim.
//
// A sweep expands its ranges into tasks, drops tuples outside the claim's
// domain (they are reported, not silently lost), assigns each task an
// arithmetic route and evaluates the tasks either serially or across OpenMP
// threads.  Both paths return the same sorted record list.

#include "bincert/claim.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bincert {

/// How routes are assigned.  Fast runs every truncatable task on the word
/// kernels; Auto does so only above the exact-size cutoff.  Both policies
/// also cross-check a seeded 1% sample in Both mode.
enum class ModePolicy { Exact, Fast, Both, Auto };

std::optional<ModePolicy> parse_mode_policy(std::string_view text);
std::string_view to_string(ModePolicy policy);

/// Exact route is used up to this n (and a <= kAutoExactMaxA) under Auto.
inline constexpr std::uint64_t kAutoExactMaxN = 243;
inline constexpr int kAutoExactMaxA = 5;

struct SweepConfig {
  ClaimId claim = ClaimId::SSZ_11;
  std::uint64_t n_min = 1;
  std::uint64_t n_max = 0;
  std::vector<std::int64_t> m_values;
  std::vector<std::int64_t> a_values;
  std::optional<std::uint64_t> p;  // SUN_12 only
  ModePolicy policy = ModePolicy::Auto;
  int jobs = 1;
  std::uint64_t seed = 0;
  bool progress = false;
};

struct SweepTask {
  ClaimId claim = ClaimId::SSZ_11;
  std::int64_t m = 0;
  std::uint64_t n = 0;  // K for LEMMA42
  int a = 0;
  Mode mode = Mode::Exact;
};

struct SkippedTuple {
  Params params;
  std::string reason;
};

struct SweepPlan {
  std::vector<SweepTask> tasks;
  std::vector<SkippedTuple> skipped;
};

/// Claims `verify` can sweep.  SUN_12A and SUN_12B both select the pair.
bool is_sweepable(ClaimId id);

/// Expands the ranges; throws std::invalid_argument on an unusable config.
SweepPlan plan_sweep(const SweepConfig& config);

/// The route a task gets before sampling.
Mode initial_mode(ClaimId id, std::uint64_t n, int a, ModePolicy policy);

/// Indices of the tasks cross-checked in Both mode: ceil(k/100) of the k
/// truncatable tasks (at least one when k > 0), drawn with mt19937_64(seed).
std::vector<std::size_t> both_sample(const std::vector<SweepTask>& tasks, std::uint64_t seed);

/// Flattened records for one task (SUN_12 and LEMMA21 yield several).
std::vector<ClaimResult> evaluate(const SweepTask& task, std::optional<std::uint64_t> p);

/// Reference evaluation: one task after another.
std::vector<ClaimResult> run_serial(const SweepPlan& plan, const SweepConfig& config);

/// OpenMP evaluation with `config.jobs` threads.
std::vector<ClaimResult> run_parallel(const SweepPlan& plan, const SweepConfig& config);

struct SweepOutcome {
  SweepPlan plan;
  std::vector<ClaimResult> records;  // sorted by record_less
  double wall_time_s = 0;
};

/// Plans, evaluates (parallel when jobs > 1) and sorts.
SweepOutcome run_sweep(const SweepConfig& config);

/// "4,7,10", "4..100", "4..100:3" or a mix of comma-separated pieces.
std::vector<std::int64_t> parse_int_list(std::string_view text);

}  // namespace bincert
