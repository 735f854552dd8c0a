#include "bincert/sweep.hpp"

#include "bincert/lucas.hpp"
#include "bincert/theorems.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <charconv>
#include <exception>
#include <iostream>
#include <numeric>
#include <random>
#include <stdexcept>

namespace bincert {

namespace {

bool one_mod_three(std::int64_t m) { return ((m % 3) + 3) % 3 == 1; }

bool has_truncated_route(ClaimId id) {
  switch (id) {
    case ClaimId::SSZ_11:
    case ClaimId::SCC1:
    case ClaimId::SCC2:
    case ClaimId::SCC3:
    case ClaimId::SCC4:
    case ClaimId::SCC5:
    case ClaimId::NK2KK:
      return true;
    default:
      return false;
  }
}

bool uses_a(ClaimId id) { return id == ClaimId::SCC2 || id == ClaimId::SCC4 || id == ClaimId::SCC5; }

std::int64_t parse_int(std::string_view text) {
  std::int64_t v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  return v;
}

class Progress {
 public:
  Progress(bool enabled, std::size_t total) : enabled_(enabled), total_(total), step_(std::max<std::size_t>(1, total / 20)) {}
  void tick() {
    if (!enabled_) return;
    const std::size_t done = ++done_;
    if (done % step_ == 0 || done == total_) {
#pragma omp critical(bincert_progress)
      std::cerr << "progress " << done << "/" << total_ << "\n";
    }
  }

 private:
  bool enabled_;
  std::size_t total_;
  std::size_t step_;
  std::atomic<std::size_t> done_{0};
};

void sort_records(std::vector<ClaimResult>& records) {
  std::stable_sort(records.begin(), records.end(), record_less);
}

}  // namespace

std::optional<ModePolicy> parse_mode_policy(std::string_view text) {
  if (text == "exact") return ModePolicy::Exact;
  if (text == "fast") return ModePolicy::Fast;
  if (text == "both") return ModePolicy::Both;
  if (text == "auto") return ModePolicy::Auto;
  return std::nullopt;
}

std::string_view to_string(ModePolicy policy) {
  switch (policy) {
    case ModePolicy::Exact: return "exact";
    case ModePolicy::Fast: return "fast";
    case ModePolicy::Both: return "both";
    case ModePolicy::Auto: return "auto";
  }
  return "auto";
}

bool is_sweepable(ClaimId id) { return id != ClaimId::LEMMA41 && id != ClaimId::AUX; }

Mode initial_mode(ClaimId id, std::uint64_t n, int a, ModePolicy policy) {
  if (!has_truncated_route(id)) return Mode::Exact;
  switch (policy) {
    case ModePolicy::Exact: return Mode::Exact;
    case ModePolicy::Fast: return Mode::Truncated;
    case ModePolicy::Both: return Mode::Both;
    case ModePolicy::Auto:
      if (uses_a(id)) return a <= kAutoExactMaxA ? Mode::Exact : Mode::Truncated;
      return n <= kAutoExactMaxN ? Mode::Exact : Mode::Truncated;
  }
  return Mode::Exact;
}

SweepPlan plan_sweep(const SweepConfig& config) {
  const ClaimId id = config.claim;
  if (!is_sweepable(id)) throw std::invalid_argument("claim " + std::string(to_string(id)) + " is not a sweep; use identities");
  if (config.n_min == 0) throw std::invalid_argument("n-min must be at least 1");
  if (config.jobs < 1) throw std::invalid_argument("jobs must be at least 1");

  SweepPlan plan;
  auto push = [&](std::int64_t m, std::uint64_t n, int a) {
    plan.tasks.push_back({id, m, n, a, initial_mode(id, n, a, config.policy)});
  };
  auto for_n = [&](const auto& body) {
    for (std::uint64_t n = config.n_min; n <= config.n_max; ++n) body(n);
  };
  auto require_list = [](const std::vector<std::int64_t>& v, const char* flag) {
    if (v.empty()) throw std::invalid_argument(std::string("this claim needs --") + flag);
  };

  switch (id) {
    case ClaimId::SSZ_11:
    case ClaimId::NK2KK:
    case ClaimId::LEMMA42:
      for_n([&](std::uint64_t n) { push(0, n, 0); });
      break;
    case ClaimId::SUN_12A:
    case ClaimId::SUN_12B:
      require_list(config.m_values, "m");
      for (std::int64_t m : config.m_values) {
        try {
          const std::uint64_t p = config.p ? *config.p : default_sun12_prime(m);
          require_odd_prime(p);
          if ((m - 4) % static_cast<std::int64_t>(p) != 0) throw DomainError("p does not divide m-4");
        } catch (const DomainError& e) {
          plan.skipped.push_back({{{"m", m}}, e.what()});
          continue;
        }
        for_n([&](std::uint64_t n) { push(m, n, 0); });
      }
      break;
    case ClaimId::SCC1:
    case ClaimId::SCC3:
    case ClaimId::LEMMA21:
      require_list(config.m_values, "m");
      for (std::int64_t m : config.m_values) {
        if (!one_mod_three(m)) {
          plan.skipped.push_back({{{"m", m}}, "m is not 1 mod 3"});
        } else if (id == ClaimId::LEMMA21 && m == 1) {
          plan.skipped.push_back({{{"m", m}}, "nu_3(m-1) is infinite"});
        } else {
          for_n([&](std::uint64_t n) { push(m, n, 0); });
        }
      }
      break;
    case ClaimId::SCC2:
    case ClaimId::SCC4:
      require_list(config.m_values, "m");
      require_list(config.a_values, "a");
      for (std::int64_t m : config.m_values) {
        if (!one_mod_three(m)) {
          plan.skipped.push_back({{{"m", m}}, "m is not 1 mod 3"});
          continue;
        }
        if (m == 1) {
          plan.skipped.push_back({{{"m", m}}, "nu_3(m-1) is infinite"});
          continue;
        }
        const std::int64_t t = nu(3, m - 1).value();
        for (std::int64_t a : config.a_values) {
          const bool ok = id == ClaimId::SCC2 ? (a >= 1 && a >= t) : a > t;
          if (!ok) {
            plan.skipped.push_back({{{"m", m}, {"a", a}}, id == ClaimId::SCC2 ? "a < max(1, nu_3(m-1))" : "a <= nu_3(m-1)"});
          } else {
            push(m, 0, static_cast<int>(a));
          }
        }
      }
      break;
    case ClaimId::SCC5:
      require_list(config.a_values, "a");
      for (std::int64_t a : config.a_values) {
        if (a < 2) {
          plan.skipped.push_back({{{"a", a}}, "a < 2"});
        } else {
          push(0, 0, static_cast<int>(a));
        }
      }
      break;
    default:
      break;
  }
  for (const auto& t : plan.tasks) {
    if (t.a > 39) throw std::invalid_argument("a above 39 is out of range");
  }

  if (config.policy == ModePolicy::Fast || config.policy == ModePolicy::Auto) {
    for (std::size_t i : both_sample(plan.tasks, config.seed)) plan.tasks[i].mode = Mode::Both;
  }
  return plan;
}

std::vector<std::size_t> both_sample(const std::vector<SweepTask>& tasks, std::uint64_t seed) {
  std::vector<std::size_t> eligible;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (has_truncated_route(tasks[i].claim)) eligible.push_back(i);
  }
  const std::size_t want = (eligible.size() + 99) / 100;
  std::vector<std::size_t> picked;
  picked.reserve(want);
  std::mt19937_64 rng(seed);
  std::sample(eligible.begin(), eligible.end(), std::back_inserter(picked), want, rng);
  return picked;
}

std::vector<ClaimResult> evaluate(const SweepTask& task, std::optional<std::uint64_t> p) {
  switch (task.claim) {
    case ClaimId::SSZ_11: return {check_ssz(task.n, task.mode)};
    case ClaimId::SUN_12A:
    case ClaimId::SUN_12B: {
      Sun12Result r = check_sun12(task.m, p, task.n);
      return {std::move(r.scaled), std::move(r.alternating)};
    }
    case ClaimId::SCC1: return {check_scc1(task.m, task.n, task.mode)};
    case ClaimId::SCC2: return {check_scc2(task.m, task.a, task.mode)};
    case ClaimId::SCC3: return {check_scc3(task.m, task.n, task.mode)};
    case ClaimId::SCC4: return {check_scc4(task.m, task.a, task.mode)};
    case ClaimId::SCC5: return {check_scc5(task.a, task.mode)};
    case ClaimId::NK2KK: return {check_nk2kk(task.n, task.mode)};
    case ClaimId::LEMMA21: return leaves(check_lemma21(task.m, task.n));
    case ClaimId::LEMMA42: return {check_lemma42_tail(task.n)};
    default: throw std::invalid_argument("claim " + std::string(to_string(task.claim)) + " has no sweep task");
  }
}

std::vector<ClaimResult> run_serial(const SweepPlan& plan, const SweepConfig& config) {
  Progress progress(config.progress, plan.tasks.size());
  std::vector<ClaimResult> records;
  for (const SweepTask& task : plan.tasks) {
    for (auto& r : evaluate(task, config.p)) records.push_back(std::move(r));
    progress.tick();
  }
  sort_records(records);
  return records;
}

std::vector<ClaimResult> run_parallel(const SweepPlan& plan, const SweepConfig& config) {
  const auto count = static_cast<std::int64_t>(plan.tasks.size());
  std::vector<std::vector<ClaimResult>> slots(plan.tasks.size());
  std::vector<std::exception_ptr> errors(plan.tasks.size());
  Progress progress(config.progress, plan.tasks.size());

#pragma omp parallel for schedule(dynamic) num_threads(config.jobs)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      slots[k] = evaluate(plan.tasks[k], config.p);
    } catch (...) {
      errors[k] = std::current_exception();
    }
    progress.tick();
  }

  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<ClaimResult> records;
  for (auto& slot : slots) {
    for (auto& r : slot) records.push_back(std::move(r));
  }
  sort_records(records);
  return records;
}

SweepOutcome run_sweep(const SweepConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  SweepOutcome out;
  out.plan = plan_sweep(config);
  out.records = config.jobs > 1 ? run_parallel(out.plan, config) : run_serial(out.plan, config);
  out.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::vector<std::int64_t> parse_int_list(std::string_view text) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view piece = text.substr(pos, comma - pos);
    if (piece.empty()) throw std::invalid_argument("empty item in list '" + std::string(text) + "'");
    const std::size_t dots = piece.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(parse_int(piece));
    } else {
      std::string_view hi_text = piece.substr(dots + 2);
      std::int64_t stride = 1;
      if (std::size_t colon = hi_text.find(':'); colon != std::string_view::npos) {
        stride = parse_int(hi_text.substr(colon + 1));
        hi_text = hi_text.substr(0, colon);
      }
      if (stride < 1) throw std::invalid_argument("range stride must be positive");
      const std::int64_t lo = parse_int(piece.substr(0, dots));
      const std::int64_t hi = parse_int(hi_text);
      for (std::int64_t v = lo; v <= hi; v += stride) out.push_back(v);
    }
    pos = comma + 1;
  }
  return out;
}

}  // namespace bincert
