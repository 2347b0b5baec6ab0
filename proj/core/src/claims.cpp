#include "qcat/claims.hpp"

#include <array>
#include <utility>

namespace qcat {

namespace {

constexpr std::array<std::pair<ClaimId, std::string_view>, 13> kClaimNames{{
    {ClaimId::central_sum, "central_sum"},
    {ClaimId::catalan_sum, "catalan_sum"},
    {ClaimId::binom_kplus1_sum, "binom_kplus1_sum"},
    {ClaimId::tauraso_weak, "tauraso_weak"},
    {ClaimId::lemma_sum, "lemma_sum"},
    {ClaimId::case1_identity, "case1_identity"},
    {ClaimId::case2_identity, "case2_identity"},
    {ClaimId::petrov_identity, "petrov_identity"},
    {ClaimId::tauraso_identity, "tauraso_identity"},
    {ClaimId::binom_2n_k, "binom_2n_k"},
    {ClaimId::intermediate, "intermediate"},
    {ClaimId::classical_central, "classical_central"},
    {ClaimId::classical_catalan, "classical_catalan"},
}};

constexpr std::array<ClaimId, kClaimNames.size()> kAllClaims = [] {
  std::array<ClaimId, kClaimNames.size()> out{};
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = kClaimNames[i].first;
  return out;
}();

}  // namespace

std::span<const ClaimId> all_claims() { return kAllClaims; }

std::string_view claim_name(ClaimId id) {
  for (const auto& [claim, name] : kClaimNames)
    if (claim == id) return name;
  return "unknown";
}

std::optional<ClaimId> parse_claim(std::string_view name) {
  for (const auto& [claim, claim_str] : kClaimNames)
    if (claim_str == name) return claim;
  return std::nullopt;
}

bool is_classical(ClaimId id) {
  return id == ClaimId::classical_central || id == ClaimId::classical_catalan;
}

std::string_view status_name(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::holds:
      return "holds";
    case ClaimStatus::fails:
      return "fails";
    case ClaimStatus::skipped:
      return "skipped";
  }
  return "unknown";
}

std::int64_t exact_exponent(std::int64_t num, std::int64_t den) {
  if (den == 0 || num % den != 0) throw std::domain_error("non-integer exponent");
  return num / den;
}

}  // namespace qcat
