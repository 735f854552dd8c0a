#include "bincert/report.hpp"

#include "bincert/binom_sums.hpp"

namespace bincert {

namespace {

Json list_json(const std::vector<std::int64_t>& v) {
  Json out = Json::array();
  for (std::int64_t x : v) out.push_back(x);
  return out;
}

Json skipped_json(const std::vector<SkippedTuple>& skipped) {
  Json out = Json::array();
  for (const auto& s : skipped) out.push_back(Json{{"params", to_json(s.params)}, {"reason", s.reason}});
  return out;
}

Json identity_json(const IdentityRecord& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["identity"] = r.identity;
  j["params"] = to_json(r.params);
  if (r.x) j["x"] = to_string(*r.x);
  if (r.residue) j["residue"] = *r.residue;
  j["pass"] = r.pass;
  if (!r.pass) {
    j["lhs"] = to_string(r.lhs);
    j["rhs"] = to_string(r.rhs);
  }
  return j;
}

}  // namespace

Json to_json(const Measured& m) {
  Json j;
  if (m.kind == Measured::Kind::Valuation) {
    j["kind"] = "valuation";
    if (m.valuation.is_infinite()) {
      j["value"] = "infinity";
    } else {
      j["value"] = m.valuation.value();
    }
  } else {
    j["kind"] = "residue";
    j["value"] = m.residue.get_str();
  }
  return j;
}

Json to_json(const Requirement& r) {
  Json j;
  switch (r.kind) {
    case Requirement::Kind::AtLeast:
      j["kind"] = "min_valuation";
      j["prime"] = r.prime;
      j["value"] = r.bound;
      break;
    case Requirement::Kind::Equals:
      j["kind"] = "valuation";
      j["prime"] = r.prime;
      j["value"] = r.bound;
      break;
    case Requirement::Kind::Residue:
      j["kind"] = "residue";
      j["prime"] = r.prime;
      j["value"] = r.target.get_str();
      j["exponent"] = r.bound;
      break;
  }
  return j;
}

Json to_json(const Params& params) {
  Json j = Json::object();
  for (const auto& [k, v] : params) j[k] = v;
  return j;
}

Json record_json(const ClaimResult& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["claim_id"] = std::string(to_string(r.id));
  j["params"] = to_json(r.params);
  j["measured"] = to_json(r.measured);
  j["required"] = to_json(r.required);
  j["vacuous"] = r.vacuous;
  j["mode"] = std::string(to_string(r.mode));
  j["pass"] = r.pass;
  if (r.disagreeing_truncated) j["truncated_measured"] = to_json(*r.disagreeing_truncated);
  return j;
}

Json verify_report(const SweepConfig& config, const SweepOutcome& outcome, bool timing) {
  Json cfg;
  cfg["claim"] = std::string(to_string(config.claim));
  cfg["n_min"] = config.n_min;
  cfg["n_max"] = config.n_max;
  cfg["m"] = list_json(config.m_values);
  cfg["a"] = list_json(config.a_values);
  if (config.p) {
    cfg["p"] = *config.p;
  } else {
    cfg["p"] = nullptr;
  }
  cfg["mode"] = std::string(to_string(config.policy));
  cfg["seed"] = config.seed;

  Json records = Json::array();
  Json failures = Json::array();
  std::size_t passed = 0, vacuous = 0, exact = 0, truncated = 0, both = 0;
  for (const ClaimResult& r : outcome.records) {
    Json j = record_json(r);
    if (r.pass) {
      ++passed;
    } else {
      failures.push_back(j);
    }
    if (r.vacuous) ++vacuous;
    switch (r.mode) {
      case Mode::Exact: ++exact; break;
      case Mode::Truncated: ++truncated; break;
      case Mode::Both: ++both; break;
    }
    records.push_back(std::move(j));
  }

  Json summary;
  summary["total"] = outcome.records.size();
  summary["passed"] = passed;
  summary["failed"] = outcome.records.size() - passed;
  summary["vacuous"] = vacuous;
  summary["modes"] = Json{{"exact", exact}, {"truncated", truncated}, {"both", both}};
  if (timing) summary["wall_time_s"] = outcome.wall_time_s;

  Json out;
  out["schema_version"] = kSchemaVersion;
  out["command"] = "verify";
  out["config"] = std::move(cfg);
  out["records"] = std::move(records);
  out["skipped_domain"] = skipped_json(outcome.plan.skipped);
  out["failures"] = std::move(failures);
  out["summary"] = std::move(summary);
  return out;
}

IdentityRun run_identities(const IdentityConfig& config) {
  IdentityRun run;
  auto add = [&](std::string name, Params params, const IdentitySides& s) {
    run.records.push_back({std::move(name), std::move(params), std::nullopt, std::nullopt, s.holds(), s.lhs, s.rhs});
  };
  const std::uint64_t n_max = config.n_max;

  std::vector<std::int64_t> ms;
  for (std::int64_t m : config.m_values) {
    if (m == 0) {
      run.skipped.push_back({{{"m", 0}}, "m must be nonzero"});
    } else {
      ms.push_back(m);
    }
  }
  for (std::int64_t m : ms) {
    for (std::uint64_t n = 1; n <= n_max; ++n) {
      const Params p{{"m", m}, {"n", static_cast<std::int64_t>(n)}};
      add("sun_tauraso", p, sun_tauraso_sides(m, n));
      add("st2", p, st2_sides(m, n));
      add("sun32", p, sun32_sides(m, n));
    }
  }
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    for (std::uint64_t k = 0; k < n; ++k) {
      add("rewrite", {{"n", static_cast<std::int64_t>(n)}, {"k", static_cast<std::int64_t>(k)}}, rewrite_identity_sides(n, k));
    }
  }
  for (const Rational& x : config.x_values) {
    for (std::uint64_t n = 0; n <= n_max; ++n) {
      auto [lhs, rhs] = convolution_sides(n, x);
      const bool holds = lhs == rhs;
      run.records.push_back({"convolution", {{"n", static_cast<std::int64_t>(n)}}, x, std::nullopt, holds, lhs, rhs});
    }
  }
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    add("x1_specialization", {{"n", static_cast<std::int64_t>(n)}}, x1_specialization_sides(n));
  }
  for (std::uint64_t k = 1; k <= n_max; ++k) {
    add("half_binomial_chain", {{"k", static_cast<std::int64_t>(k)}}, half_binomial_chain_sides(k));
  }
  for (std::uint64_t k = 1; k <= config.quarter_max.value_or(n_max); ++k) {
    add("quarter_power", {{"k", static_cast<std::int64_t>(k)}}, quarter_power_sides(k));
  }
  for (std::uint64_t k = 1; k <= config.triple_max.value_or(n_max); ++k) {
    TripleBlock t = triple_block(k);
    run.records.push_back({"triple_block", {{"k", static_cast<std::int64_t>(k)}}, std::nullopt, std::nullopt, t.holds,
                           Rational(t.block_sum), Rational(t.target)});
  }
  for (std::int64_t a : config.row_a) {
    if (a < 1) {
      run.skipped.push_back({{{"a", a}}, "row facts need a >= 1"});
      continue;
    }
    run.records.push_back({"row_facts", {{"a", a}}, std::nullopt, std::nullopt, check_row_facts(static_cast<int>(a)),
                           Rational(0), Rational(0)});
  }
  for (std::int64_t a : config.f_a) {
    try {
      FOfA f = f_of_a(static_cast<int>(a), config.f_m);
      run.records.push_back({"f_of_a", {{"a", a}, {"m", config.f_m}}, std::nullopt, f.residue, f.residue == 2, f.value,
                             Rational(-1)});
    } catch (const DomainError& e) {
      run.skipped.push_back({{{"a", a}, {"m", config.f_m}}, e.what()});
    }
  }
  return run;
}

Json identities_report(const IdentityConfig& config, const IdentityRun& run) {
  Json cfg;
  cfg["n_max"] = config.n_max;
  cfg["m"] = list_json(config.m_values);
  Json xs = Json::array();
  for (const Rational& x : config.x_values) xs.push_back(to_string(x));
  cfg["x"] = std::move(xs);
  cfg["triple_max"] = config.triple_max.value_or(config.n_max);
  cfg["quarter_max"] = config.quarter_max.value_or(config.n_max);
  cfg["row_a"] = list_json(config.row_a);
  cfg["f_a"] = list_json(config.f_a);
  cfg["f_m"] = config.f_m;

  Json records = Json::array();
  Json failures = Json::array();
  std::size_t passed = 0;
  for (const IdentityRecord& r : run.records) {
    Json j = identity_json(r);
    if (r.pass) {
      ++passed;
    } else {
      failures.push_back(j);
    }
    records.push_back(std::move(j));
  }

  Json out;
  out["schema_version"] = kSchemaVersion;
  out["command"] = "identities";
  out["config"] = std::move(cfg);
  out["records"] = std::move(records);
  out["skipped_domain"] = skipped_json(run.skipped);
  out["first_failure"] = failures.empty() ? Json(nullptr) : failures.front();
  out["failures"] = std::move(failures);
  out["summary"] = Json{{"total", run.records.size()}, {"passed", passed}, {"failed", run.records.size() - passed}};
  return out;
}

}  // namespace bincert
