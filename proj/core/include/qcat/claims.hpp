#pragma once

// Claim identifiers, verification reports, and the mod-3 symbol.

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>

#include "qcat/exactpoly.hpp"

namespace qcat {

/// (m/3): 0 if 3 | m, +1 if m = 1 (mod 3), -1 if m = 2 (mod 3).
class Symbol3 {
 public:
  constexpr explicit Symbol3(std::int64_t m) : value_(from_residue(((m % 3) + 3) % 3)) {}
  constexpr int value() const { return value_; }
  constexpr bool is_zero() const { return value_ == 0; }
  constexpr bool operator==(const Symbol3&) const = default;

 private:
  static constexpr int from_residue(std::int64_t r) { return r == 0 ? 0 : (r == 1 ? 1 : -1); }
  int value_;
};

constexpr Symbol3 symbol3(std::int64_t m) { return Symbol3(m); }

/// Stable identifiers. Declaration order is the report order within one n.
enum class ClaimId {
  central_sum,
  catalan_sum,
  binom_kplus1_sum,
  tauraso_weak,
  lemma_sum,
  case1_identity,
  case2_identity,
  petrov_identity,
  tauraso_identity,
  binom_2n_k,
  intermediate,
  classical_central,
  classical_catalan,
};

std::span<const ClaimId> all_claims();
std::string_view claim_name(ClaimId id);
std::optional<ClaimId> parse_claim(std::string_view name);
bool is_classical(ClaimId id);

enum class ClaimStatus { holds, fails, skipped };

std::string_view status_name(ClaimStatus s);

/// Outcome of one verification. The witness is the reduced difference
/// LHS - RHS; a checked claim holds exactly when the witness is zero.
struct ClaimReport {
  ClaimId claim;
  std::uint64_t n;
  ClaimStatus status;
  RatPoly witness;
  std::chrono::nanoseconds elapsed{0};

  bool holds() const { return status == ClaimStatus::holds; }

  static ClaimReport from_witness(ClaimId claim, std::uint64_t n, RatPoly witness,
                                  std::chrono::nanoseconds elapsed) {
    const auto status = witness.is_zero() ? ClaimStatus::holds : ClaimStatus::fails;
    return {claim, n, status, std::move(witness), elapsed};
  }
  static ClaimReport skipped(ClaimId claim, std::uint64_t n) {
    return {claim, n, ClaimStatus::skipped, RatPoly{}, std::chrono::nanoseconds{0}};
  }
};

/// Raised when a claim is asked about a case it does not state (for
/// instance n = 0 mod 3 for the mod Phi_n^2 sums).
class NotApplicable : public std::domain_error {
 public:
  NotApplicable() : std::domain_error("claim not stated for this residue") {}
};

/// num / den, requiring exact divisibility. Throws
/// std::domain_error("non-integer exponent") otherwise.
std::int64_t exact_exponent(std::int64_t num, std::int64_t den);

}  // namespace qcat
