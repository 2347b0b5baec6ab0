#pragma once

// Verifiers for the q-congruences and root-of-unity identities.
//
// Every verifier assembles both sides exactly, reduces their difference in
// the stated ring (or not at all for the exact polynomial identity), and
// reports that difference as the witness.

#include <cstdint>

#include "qcat/claims.hpp"
#include "qcat/exactpoly.hpp"
#include "qcat/quotient.hpp"

namespace qcat {

// Right-hand sides as polynomials in Z[q].

/// (n/3) q^((n^2-1)/3); zero when 3 | n.
IntPoly central_sum_rhs(std::uint64_t n);
/// Two-case right side of the q-Catalan sum congruence. Throws
/// NotApplicable when 3 | n.
IntPoly catalan_sum_rhs(std::uint64_t n);
/// Two-case right side of sum q^(k+1) [2k k+1]. Throws NotApplicable when 3 | n.
IntPoly binom_kplus1_sum_rhs(std::uint64_t n);
/// q^floor(n/3) for n = 0, 1 (mod 3); -1 - q^((2n-1)/3) for n = 2 (mod 3).
IntPoly tauraso_weak_rhs(std::uint64_t n);

// Left-hand sums reduced in a ring whose index is the summation bound n.

/// sum_{k<n} q^k [2k k]
ResidueElem central_sum_lhs(const RingSpec& ring);
/// sum_{k<n} q^k C_k(q)
ResidueElem catalan_sum_lhs(const RingSpec& ring);
/// sum_{k<n} q^(k+1) [2k k+1]
ResidueElem binom_kplus1_sum_lhs(const RingSpec& ring);

/// sum_{k=1}^{n-1} ((k-1)/3) (-1)^k q^E(k) / (1 - q^k) in Q[q]/Phi_n, with
/// E(k) = (2k^2 - k ((k-1)/3)) / 3 - k(k-1)/2. Terms whose symbol is zero
/// are skipped.
ResidueElem lemma_sum_value(std::uint64_t n);

/// sum_{k=0}^{n-1} (-1)^k q^((k+1)(3k+2)/2) / (1 - q^(3k+2))
///   - sum_{k=1}^{n} (-1)^k q^(k(3k+5)/2) / (1 - q^(3k))  in `ring`.
ResidueElem two_sum_difference(std::uint64_t n, const RingSpec& ring);

/// sum_{k=1}^{2n} (-1)^k q^(k(3k-1)/2) / (1 - q^(3k-1)) in Q[q]/Phi_{3n+1}.
ResidueElem petrov_sum_value(std::uint64_t n);

// Verifiers. `power` overrides the modulus power for the mod Phi_n^2 claims
// (diagnostic use only); 0 keeps the stated power.

ClaimReport verify_central_sum(std::uint64_t n, std::uint64_t power = 0);
ClaimReport verify_catalan_sum(std::uint64_t n, std::uint64_t power = 0);
ClaimReport verify_binom_kplus1_sum(std::uint64_t n, std::uint64_t power = 0);
ClaimReport verify_tauraso_weak(std::uint64_t n);
ClaimReport verify_lemma_sum(std::uint64_t n);
ClaimReport verify_case1_identity(std::uint64_t n);
ClaimReport verify_case2_identity(std::uint64_t n);
ClaimReport verify_petrov_identity(std::uint64_t n);
/// Exact identity in Z[q]; the witness is the raw difference.
ClaimReport verify_tauraso_identity(std::uint64_t n);
/// One pair (n, k). Throws std::invalid_argument("k out of range") unless
/// 1 <= k <= n - 1.
ClaimReport verify_binom_2n_k_congruence(std::uint64_t n, std::uint64_t k,
                                         std::uint64_t power = 0);
/// Every k in 1..n-1 for one n; the witness is that of the first failing k.
/// Skipped for n = 1, which has no admissible k.
ClaimReport verify_binom_2n_k_all(std::uint64_t n, std::uint64_t power = 0);
ClaimReport verify_intermediate_congruence(std::uint64_t n, std::uint64_t power = 0);

}  // namespace qcat
