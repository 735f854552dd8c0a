#include "bincert/claim.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace bincert {

namespace {

constexpr std::array<std::pair<ClaimId, std::string_view>, 13> kClaimNames{{
    {ClaimId::SSZ_11, "SSZ_11"},
    {ClaimId::SUN_12A, "SUN_12A"},
    {ClaimId::SUN_12B, "SUN_12B"},
    {ClaimId::SCC1, "SCC1"},
    {ClaimId::SCC2, "SCC2"},
    {ClaimId::SCC3, "SCC3"},
    {ClaimId::SCC4, "SCC4"},
    {ClaimId::SCC5, "SCC5"},
    {ClaimId::NK2KK, "NK2KK"},
    {ClaimId::LEMMA21, "LEMMA21"},
    {ClaimId::LEMMA41, "LEMMA41"},
    {ClaimId::LEMMA42, "LEMMA42"},
    {ClaimId::AUX, "AUX"},
}};

}  // namespace

std::string_view to_string(ClaimId id) {
  for (const auto& [k, name] : kClaimNames) {
    if (k == id) return name;
  }
  return "UNKNOWN";
}

std::optional<ClaimId> parse_claim_id(std::string_view text) {
  for (const auto& [k, name] : kClaimNames) {
    if (name.size() != text.size()) continue;
    bool same = std::equal(name.begin(), name.end(), text.begin(), [](char a, char b) {
      return a == (b >= 'a' && b <= 'z' ? static_cast<char>(b - 'a' + 'A') : b);
    });
    if (same) return k;
  }
  return std::nullopt;
}

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::Exact: return "EXACT";
    case Mode::Truncated: return "TRUNCATED";
    case Mode::Both: return "BOTH";
  }
  return "EXACT";
}

std::string Measured::to_string() const {
  if (kind == Kind::Valuation) return "nu=" + valuation.to_string();
  return "residue=" + residue.get_str();
}

std::string Requirement::to_string() const {
  auto p = std::to_string(prime);
  switch (kind) {
    case Kind::AtLeast: return "nu_" + p + " >= " + std::to_string(bound);
    case Kind::Equals: return "nu_" + p + " == " + std::to_string(bound);
    case Kind::Residue: return "== " + target.get_str() + " mod " + p + "^" + std::to_string(bound);
  }
  return {};
}

bool satisfies(const Measured& m, const Requirement& r) {
  switch (r.kind) {
    case Requirement::Kind::AtLeast:
      return m.kind == Measured::Kind::Valuation && m.valuation >= ExtendedValuation(r.bound);
    case Requirement::Kind::Equals:
      return m.kind == Measured::Kind::Valuation && m.valuation == ExtendedValuation(r.bound);
    case Requirement::Kind::Residue:
      return m.kind == Measured::Kind::Residue && m.residue == r.target;
  }
  return false;
}

std::int64_t ClaimResult::param(std::string_view key) const {
  for (const auto& [k, v] : params) {
    if (k == key) return v;
  }
  throw std::out_of_range("no parameter '" + std::string(key) + "'");
}

ClaimResult make_result(ClaimId id, Params params, Measured measured, Requirement required,
                        bool vacuous, Mode mode) {
  ClaimResult r;
  r.id = id;
  r.params = std::move(params);
  r.measured = std::move(measured);
  r.required = std::move(required);
  r.vacuous = vacuous;
  r.mode = mode;
  r.pass = satisfies(r.measured, r.required);
  return r;
}

ClaimResult combine_parts(ClaimId id, Params params, std::vector<ClaimResult> parts) {
  if (parts.empty()) throw std::logic_error("combine_parts: no parts");
  auto failing = std::find_if(parts.begin(), parts.end(), [](const ClaimResult& r) { return !r.pass; });
  const ClaimResult& face = failing != parts.end() ? *failing : parts.back();
  ClaimResult r;
  r.id = id;
  r.params = std::move(params);
  r.measured = face.measured;
  r.required = face.required;
  r.vacuous = std::all_of(parts.begin(), parts.end(), [](const ClaimResult& p) { return p.vacuous; });
  r.mode = face.mode;
  r.pass = failing == parts.end();
  r.parts = std::move(parts);
  return r;
}

std::vector<ClaimResult> leaves(const ClaimResult& r) {
  if (r.parts.empty()) return {r};
  std::vector<ClaimResult> out;
  for (const auto& p : r.parts) {
    auto sub = leaves(p);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

bool record_less(const ClaimResult& a, const ClaimResult& b) {
  if (a.id != b.id) return a.id < b.id;
  return std::lexicographical_compare(
      a.params.begin(), a.params.end(), b.params.begin(), b.params.end(),
      [](const auto& x, const auto& y) { return x.second != y.second ? x.second < y.second : x.first < y.first; });
}

}  // namespace bincert
