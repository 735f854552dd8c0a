// bincert: sweep the valuation claims and the exact identities, writing a
// JSON report.  Exit status is 0 iff the report lists no failures.

#include "bincert/report.hpp"
#include "bincert/sweep.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <map>

using namespace bincert;

namespace {

std::optional<ClaimId> claim_from_flag(std::string text) {
  for (char& c : text) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  static const std::map<std::string, ClaimId> aliases = {
      {"ssz", ClaimId::SSZ_11}, {"sun12", ClaimId::SUN_12A}, {"nk2kk", ClaimId::NK2KK},
      {"lemma21", ClaimId::LEMMA21}, {"lemma42", ClaimId::LEMMA42},
  };
  if (auto it = aliases.find(text); it != aliases.end()) return it->second;
  return parse_claim_id(text);
}

int write_report(const Json& report, const std::string& out) {
  const std::string text = report.dump(2) + "\n";
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) {
      std::cerr << "bincert: cannot write " << out << "\n";
      return 2;
    }
    f << text;
  }
  const Json& failures = report.at("failures");
  if (!failures.empty()) {
    std::cerr << "bincert: " << failures.size() << " failing record(s); first: " << failures.front().dump() << "\n";
  }
  return exit_status(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verify 3-adic valuation claims for central binomial sums"};
  app.require_subcommand(1);

  SweepConfig sweep;
  std::string claim_text, m_text, a_text, mode_text = "auto", out;
  bool no_timing = false;
  auto* verify = app.add_subcommand("verify", "Sweep one claim over a parameter range");
  verify->add_option("--claim", claim_text, "ssz, sun12, scc1..scc5, nk2kk, lemma21, lemma42")->required();
  verify->add_option("--n-max", sweep.n_max, "Largest n (K for lemma42)");
  verify->add_option("--n-min", sweep.n_min, "Smallest n")->default_val(1);
  verify->add_option("--m", m_text, "m values: list and/or ranges, e.g. 4..100:3");
  verify->add_option("--a", a_text, "a values, e.g. 2..7");
  verify->add_option("--p", sweep.p, "Prime for sun12 (default: largest odd prime factor of m-4)");
  verify->add_option("--mode", mode_text, "exact, fast, both or auto")->default_val("auto");
  verify->add_option("--jobs", sweep.jobs, "Worker threads")->default_val(1);
  verify->add_option("--seed", sweep.seed, "Seed for the cross-check sample")->default_val(0);
  verify->add_option("--out", out, "Report path (default stdout)");
  verify->add_flag("--progress", sweep.progress, "Progress lines on stderr");
  verify->add_flag("--no-timing", no_timing, "Leave wall time out of the report");

  IdentityConfig ident;
  std::string im_text, x_text, row_text, f_text, iout;
  std::uint64_t triple_max = 0, quarter_max = 0;
  auto* identities = app.add_subcommand("identities", "Check the exact identities");
  identities->add_option("--n-max", ident.n_max, "Largest n")->required();
  identities->add_option("--m", im_text, "m values");
  identities->add_option("--x", x_text, "Rational x values for the convolution identity, e.g. 0,1,-1,1/2");
  auto* triple_opt = identities->add_option("--triple-max", triple_max, "Largest k for the triple-block congruence");
  auto* quarter_opt = identities->add_option("--quarter-max", quarter_max, "Largest k for the quarter-power sum");
  identities->add_option("--row-a", row_text, "a values for the row facts mod 3");
  identities->add_option("--f-a", f_text, "a values for f(a) mod 3");
  identities->add_option("--f-m", ident.f_m, "m used in f(a)")->default_val(7);
  identities->add_option("--out", iout, "Report path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) {
      auto id = claim_from_flag(claim_text);
      if (!id) throw std::invalid_argument("unknown claim '" + claim_text + "'");
      auto policy = parse_mode_policy(mode_text);
      if (!policy) throw std::invalid_argument("unknown mode '" + mode_text + "'");
      sweep.claim = *id;
      sweep.policy = *policy;
      if (!m_text.empty()) sweep.m_values = parse_int_list(m_text);
      if (!a_text.empty()) sweep.a_values = parse_int_list(a_text);
      const SweepOutcome outcome = run_sweep(sweep);
      return write_report(verify_report(sweep, outcome, !no_timing), out);
    }
    if (!im_text.empty()) ident.m_values = parse_int_list(im_text);
    if (!x_text.empty()) {
      std::size_t pos = 0;
      while (pos <= x_text.size()) {
        std::size_t comma = std::min(x_text.find(',', pos), x_text.size());
        ident.x_values.push_back(parse_rational(x_text.substr(pos, comma - pos)));
        pos = comma + 1;
      }
    }
    if (*triple_opt) ident.triple_max = triple_max;
    if (*quarter_opt) ident.quarter_max = quarter_max;
    if (!row_text.empty()) ident.row_a = parse_int_list(row_text);
    if (!f_text.empty()) ident.f_a = parse_int_list(f_text);
    return write_report(identities_report(ident, run_identities(ident)), iout);
  } catch (const std::exception& e) {
    std::cerr << "bincert: " << e.what() << "\n";
    return 2;
  }
}
