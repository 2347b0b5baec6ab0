#pragma once

// Dispatch of claims by id and ordered range sweeps over a worker pool.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qcat/claims.hpp"

namespace qcat {

struct RunOptions {
  std::size_t parallelism = 1;
  /// Stop scheduling new work after the first failing report.
  bool fail_fast = false;
  /// Overrides the modulus power of the mod Phi_n^2 claims; 0 keeps it.
  std::uint64_t modulus_power = 0;
  /// Upper prime bound for the classical claims, which then run over all
  /// primes 5 <= p <= p_max instead of the primes inside the n range.
  std::optional<std::uint64_t> p_max;
};

/// Runs one claim at one n. NotApplicable and precondition errors propagate.
ClaimReport verify_claim(ClaimId claim, std::uint64_t n, std::uint64_t modulus_power = 0);

/// Cyclotomic indices a claim at n reduces modulo.
std::vector<std::uint64_t> ring_indices(ClaimId claim, std::uint64_t n);

/// Reports for every claim and applicable n in [n_from, n_to], ordered by n
/// and then by claim id regardless of how many workers ran them. Cases a
/// claim does not state become skipped reports. Classical claims report
/// only primes p >= 5. Throws std::invalid_argument on an empty range.
std::vector<ClaimReport> run_claims(std::span<const ClaimId> claims, std::uint64_t n_from,
                                    std::uint64_t n_to, const RunOptions& options = {});

std::vector<ClaimReport> run_claim_range(ClaimId claim, std::uint64_t n_from, std::uint64_t n_to,
                                         const RunOptions& options = {});

}  // namespace qcat
