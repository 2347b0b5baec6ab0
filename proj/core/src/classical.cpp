#include "qcat/classical.hpp"

#include <array>
#include <stdexcept>

namespace qcat {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

using Clock = std::chrono::steady_clock;

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  constexpr std::array<u64, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : kBases) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : kBases) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeModSquare::PrimeModSquare(std::uint64_t p) : p_(p) {
  if (p < 5 || !is_prime(p)) throw std::invalid_argument("invalid prime");
  modulus_ = Integer(static_cast<unsigned long>(p)) * static_cast<unsigned long>(p);
}

Integer PrimeModSquare::residue(const Integer& x) const {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), modulus_.get_mpz_t());
  return r;
}

Integer central_binomial_sum(std::uint64_t count) {
  Integer sum = 0;
  Integer binom = 1;
  for (std::uint64_t k = 0; k < count; ++k) {
    sum += binom;
    // binom(2k+2, k+1) = binom(2k, k) * 2(2k+1) / (k+1)
    binom *= 2 * (2 * k + 1);
    mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), k + 1);
  }
  return sum;
}

Integer catalan_number_sum(std::uint64_t count) {
  Integer sum = 0;
  Integer binom = 1;
  for (std::uint64_t k = 0; k < count; ++k) {
    Integer catalan;
    mpz_divexact_ui(catalan.get_mpz_t(), binom.get_mpz_t(), k + 1);
    sum += catalan;
    binom *= 2 * (2 * k + 1);
    mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), k + 1);
  }
  return sum;
}

ClaimReport verify_classical_central(std::uint64_t p) {
  const PrimeModSquare ring(p);
  const auto start = Clock::now();
  const Integer lhs = central_binomial_sum(p);
  const Integer rhs = symbol3(static_cast<std::int64_t>(p)).value();
  const Integer diff = ring.residue(lhs - rhs);
  return ClaimReport::from_witness(ClaimId::classical_central, p,
                                   RatPoly::constant(Rational(diff)), Clock::now() - start);
}

ClaimReport verify_classical_catalan(std::uint64_t p) {
  const PrimeModSquare ring(p);
  const auto start = Clock::now();
  const Integer lhs = catalan_number_sum(p);
  // (3s - 1) / 2 with 2 inverted modulo p^2.
  Integer inv_two;
  mpz_invert(inv_two.get_mpz_t(), Integer(2).get_mpz_t(), ring.modulus().get_mpz_t());
  const Integer rhs = (3 * symbol3(static_cast<std::int64_t>(p)).value() - 1) * inv_two;
  const Integer diff = ring.residue(lhs - rhs);
  return ClaimReport::from_witness(ClaimId::classical_catalan, p,
                                   RatPoly::constant(Rational(diff)), Clock::now() - start);
}

}  // namespace qcat
