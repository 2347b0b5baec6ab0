#pragma once

// The integer congruences mod p^2 for central binomial and Catalan sums.

#include <cstdint>

#include "qcat/claims.hpp"
#include "qcat/exactpoly.hpp"

namespace qcat {

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// A prime p >= 5 together with the modulus p^2.
class PrimeModSquare {
 public:
  /// Throws std::invalid_argument("invalid prime") unless p is a prime >= 5.
  explicit PrimeModSquare(std::uint64_t p);

  std::uint64_t p() const { return p_; }
  const Integer& modulus() const { return modulus_; }
  /// x mod p^2 in [0, p^2).
  Integer residue(const Integer& x) const;

 private:
  std::uint64_t p_;
  Integer modulus_;
};

/// sum_{k<count} binom(2k, k), exact.
Integer central_binomial_sum(std::uint64_t count);
/// sum_{k<count} C_k, exact.
Integer catalan_number_sum(std::uint64_t count);

/// sum_{k<p} binom(2k, k) = (p/3) mod p^2. The witness is the constant
/// (LHS - RHS) mod p^2.
ClaimReport verify_classical_central(std::uint64_t p);
/// sum_{k<p} C_k = (3/2)(p/3) - 1/2 mod p^2.
ClaimReport verify_classical_catalan(std::uint64_t p);

}  // namespace qcat
