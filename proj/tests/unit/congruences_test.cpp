#include "qcat/congruences.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "qcat/qseries.hpp"
#include "test_support.hpp"

namespace qcat {
namespace {

using testing::P;
using testing::R;
using Complex = std::complex<long double>;

IntPoly qpow(std::int64_t e) { return monomial(Integer(1), static_cast<std::size_t>(e)); }

// p is divisible by Phi_n^e, by plain long division.
bool divisible(const IntPoly& p, std::uint64_t n, std::uint64_t e) {
  return divrem(to_rational(p), to_rational(cyclotomic_power(n, e))).remainder.is_zero();
}

// Left sides built from scratch: product-formula binomials, no streams,
// no residue ring.
IntPoly direct_central_sum(std::uint64_t n) {
  IntPoly s;
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(n); ++k)
    s = s + shift(q_binomial_product(2 * k, k), k);
  return s;
}

IntPoly direct_kplus1_sum(std::uint64_t n) {
  IntPoly s;
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(n); ++k)
    s = s + shift(q_binomial_product(2 * k, k + 1), k + 1);
  return s;
}

IntPoly direct_catalan_sum(std::uint64_t n) {
  IntPoly s;
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(n); ++k) {
    const IntPoly c = exact_div(q_binomial_product(2 * k, k), q_integer(k + 1));
    s = s + shift(c, k);
  }
  return s;
}

// Right sides transcribed separately from the library.
IntPoly oracle_catalan_rhs(std::int64_t n) {
  if (n % 3 == 2) return neg(qpow((n * n - 1) / 3)) - qpow(n * (2 * n - 1) / 3);
  return qpow((n * n - 1) / 3) - scale(qpow(n) - P("1"), Integer((n - 1) / 3));
}

IntPoly oracle_kplus1_rhs(std::int64_t n) {
  if (n % 3 == 2) return qpow(n * (2 * n - 1) / 3);
  return scale(qpow(n) - P("1"), Integer((n - 1) / 3));
}

int legendre3(std::int64_t m) {
  const auto r = ((m % 3) + 3) % 3;
  return r == 0 ? 0 : (r == 1 ? 1 : -1);
}

// zeta^e for zeta = exp(2 pi i / m), exponent folded first.
Complex zeta_power(std::int64_t m, std::int64_t e) {
  const std::int64_t r = ((e % m) + m) % m;
  return std::polar(1.0L, 2 * std::numbers::pi_v<long double> * r / m);
}

Complex signed_fraction(std::int64_t m, std::int64_t k, std::int64_t e, std::int64_t d) {
  const Complex v = zeta_power(m, e) / (Complex(1) - zeta_power(m, d));
  return k % 2 == 0 ? v : -v;
}

Complex numeric_two_sums(std::int64_t n, std::int64_t m) {
  Complex s = 0;
  for (std::int64_t k = 0; k < n; ++k) s += signed_fraction(m, k, (k + 1) * (3 * k + 2) / 2, 3 * k + 2);
  for (std::int64_t k = 1; k <= n; ++k) s -= signed_fraction(m, k, k * (3 * k + 5) / 2, 3 * k);
  return s;
}

Complex numeric_petrov(std::int64_t n) {
  Complex s = 0;
  for (std::int64_t k = 1; k <= 2 * n; ++k)
    s += signed_fraction(3 * n + 1, k, k * (3 * k - 1) / 2, 3 * k - 1);
  return s;
}

Complex numeric_lemma(std::int64_t n) {
  Complex s = 0;
  for (std::int64_t k = 1; k < n; ++k) {
    const int sym = legendre3(k - 1);
    if (sym == 0) continue;
    const std::int64_t e = (2 * k * k - k * sym) / 3 - k * (k - 1) / 2;
    s += static_cast<long double>(sym) * signed_fraction(n, k, e, k);
  }
  return s;
}

// Evaluates a residue at zeta = exp(2 pi i / m).
Complex at_root(const ResidueElem& x) {
  const auto m = static_cast<std::int64_t>(x.spec().n());
  Complex v = 0;
  const auto cs = x.rep().coeffs();
  for (std::size_t i = 0; i < cs.size(); ++i)
    v += static_cast<long double>(cs[i].get_d()) * zeta_power(m, static_cast<std::int64_t>(i));
  return v;
}

void expect_holds(const ClaimReport& r) {
  EXPECT_EQ(r.status, ClaimStatus::holds) << claim_name(r.claim) << " n=" << r.n
                                          << " witness=" << to_string(r.witness);
  EXPECT_TRUE(r.witness.is_zero());
}

TEST(Symbol3, Values) {
  EXPECT_EQ(symbol3(1).value(), 1);
  EXPECT_EQ(symbol3(2).value(), -1);
  EXPECT_EQ(symbol3(-3).value(), 0);
  EXPECT_EQ(symbol3(-1).value(), -1);
  EXPECT_EQ(symbol3(-2).value(), 1);
  EXPECT_EQ(symbol3(0).value(), 0);
  for (std::int64_t m = -50; m <= 50; ++m) {
    EXPECT_EQ(symbol3(m).value(), legendre3(m)) << m;
    EXPECT_EQ(symbol3(m).is_zero(), m % 3 == 0);
  }
}

TEST(ExactExponent, DivisibilityGuard) {
  EXPECT_EQ(exact_exponent(9, 3), 3);
  EXPECT_EQ(exact_exponent(-6, 2), -3);
  EXPECT_THROW_MSG(exact_exponent(7, 3), std::domain_error, "non-integer exponent");
}

TEST(ClaimNames, RoundTrip) {
  EXPECT_EQ(all_claims().size(), 13u);
  for (ClaimId id : all_claims()) EXPECT_EQ(parse_claim(claim_name(id)), id);
  EXPECT_FALSE(parse_claim("bogus").has_value());
  EXPECT_EQ(claim_name(ClaimId::catalan_sum), "catalan_sum");
  EXPECT_EQ(claim_name(ClaimId::binom_2n_k), "binom_2n_k");
  EXPECT_TRUE(is_classical(ClaimId::classical_central));
  EXPECT_FALSE(is_classical(ClaimId::intermediate));
  EXPECT_EQ(status_name(ClaimStatus::skipped), "skipped");
}

TEST(RightSides, Values) {
  EXPECT_EQ(central_sum_rhs(1), P("1"));
  EXPECT_EQ(central_sum_rhs(2), P("-q"));
  EXPECT_TRUE(central_sum_rhs(6).is_zero());
  EXPECT_EQ(catalan_sum_rhs(2), P("-q - q^2"));
  EXPECT_EQ(catalan_sum_rhs(4), P("q^5 - q^4 + 1"));
  EXPECT_EQ(binom_kplus1_sum_rhs(1), IntPoly{});
  EXPECT_EQ(binom_kplus1_sum_rhs(2), P("q^2"));
  EXPECT_EQ(binom_kplus1_sum_rhs(7), P("2*q^7 - 2"));
  EXPECT_EQ(tauraso_weak_rhs(1), P("1"));
  EXPECT_EQ(tauraso_weak_rhs(2), P("-1 - q"));
  EXPECT_EQ(tauraso_weak_rhs(3), P("q"));
  EXPECT_THROW_MSG(catalan_sum_rhs(3), NotApplicable, "claim not stated for this residue");
  EXPECT_THROW_MSG(binom_kplus1_sum_rhs(9), NotApplicable, "claim not stated for this residue");
  for (std::int64_t n = 1; n <= 60; ++n) {
    if (n % 3 == 0) continue;
    EXPECT_EQ(catalan_sum_rhs(n), oracle_catalan_rhs(n)) << n;
    EXPECT_EQ(binom_kplus1_sum_rhs(n), oracle_kplus1_rhs(n)) << n;
  }
}

TEST(CentralSum, Examples) {
  expect_holds(verify_central_sum(1));
  expect_holds(verify_central_sum(2));
  expect_holds(verify_central_sum(25));
  // 1 + q + q^2 = (q + 1)^2 - q
  EXPECT_TRUE(divisible(P("1 + q + q^2") - P("-q"), 2, 2));
}

TEST(CatalanSum, Examples) {
  expect_holds(verify_catalan_sum(2));
  expect_holds(verify_catalan_sum(4));
  EXPECT_EQ(direct_catalan_sum(2) - catalan_sum_rhs(2), P("1 + 2*q + q^2"));
  EXPECT_THROW_MSG(verify_catalan_sum(3), NotApplicable, "claim not stated for this residue");
}

TEST(BinomKPlus1Sum, Examples) {
  expect_holds(verify_binom_kplus1_sum(1));
  expect_holds(verify_binom_kplus1_sum(2));
  expect_holds(verify_binom_kplus1_sum(7));
  EXPECT_EQ(direct_kplus1_sum(2), P("q^2"));
  EXPECT_THROW_MSG(verify_binom_kplus1_sum(6), NotApplicable, "claim not stated for this residue");
}

TEST(TaurasoWeak, Examples) {
  for (std::uint64_t n : {1, 2, 3}) expect_holds(verify_tauraso_weak(n));
}

TEST(LeftSides, MatchDirectSumsModPhiSquared) {
  for (std::uint64_t n = 1; n <= 22; ++n) {
    const RingSpec ring(n, 2);
    EXPECT_EQ(central_sum_lhs(ring), reduce(direct_central_sum(n), ring)) << n;
    EXPECT_EQ(catalan_sum_lhs(ring), reduce(direct_catalan_sum(n), ring)) << n;
    EXPECT_EQ(binom_kplus1_sum_lhs(ring), reduce(direct_kplus1_sum(n), ring)) << n;
  }
}

// The congruences themselves, checked by long division with no residue
// ring involved.
TEST(Congruences, DirectDivisibilityOracle) {
  for (std::int64_t n = 1; n <= 22; ++n) {
    const auto un = static_cast<std::uint64_t>(n);
    const int s = legendre3(n);
    const IntPoly central_rhs = s == 0 ? IntPoly{} : scale(qpow((n * n - 1) / 3), Integer(s));
    EXPECT_TRUE(divisible(direct_central_sum(un) - central_rhs, un, 2)) << n;
    const IntPoly weak_rhs = n % 3 == 2 ? P("-1") - qpow((2 * n - 1) / 3) : qpow(n / 3);
    EXPECT_TRUE(divisible(direct_catalan_sum(un) - weak_rhs, un, 1)) << n;
    if (n % 3 == 0) continue;
    EXPECT_TRUE(divisible(direct_catalan_sum(un) - oracle_catalan_rhs(n), un, 2)) << n;
    EXPECT_TRUE(divisible(direct_kplus1_sum(un) - oracle_kplus1_rhs(n), un, 2)) << n;
  }
}

TEST(Congruences, VerifiersHoldOnSmallRange) {
  for (std::uint64_t n = 1; n <= 40; ++n) {
    expect_holds(verify_central_sum(n));
    expect_holds(verify_tauraso_weak(n));
    if (n % 3 == 0) continue;
    expect_holds(verify_catalan_sum(n));
    expect_holds(verify_binom_kplus1_sum(n));
    expect_holds(verify_lemma_sum(n));
    expect_holds(verify_intermediate_congruence(n));
  }
}

TEST(LemmaSum, Examples) {
  expect_holds(verify_lemma_sum(2));
  expect_holds(verify_lemma_sum(4));
  expect_holds(verify_lemma_sum(5));
  EXPECT_TRUE(lemma_sum_value(2).is_zero());
  EXPECT_EQ(lemma_sum_value(4).rep(), R("1/2"));
  EXPECT_TRUE(lemma_sum_value(5).is_zero());
  EXPECT_THROW_MSG(verify_lemma_sum(6), NotApplicable, "claim not stated for this residue");
}

TEST(LemmaSum, NumericRootOfUnityOracle) {
  for (std::int64_t n = 2; n <= 60; ++n) {
    if (n % 3 == 0) continue;
    const Complex numeric = numeric_lemma(n);
    const long double expected = n % 3 == 1 ? (n - 1) / 6.0L : 0.0L;
    EXPECT_LT(std::abs(numeric - expected), 1e-6L) << n;
    EXPECT_LT(std::abs(at_root(lemma_sum_value(static_cast<std::uint64_t>(n))) - numeric), 1e-6L) << n;
  }
}

TEST(RootOfUnityIdentities, Examples) {
  for (std::uint64_t n : {1, 2, 5}) expect_holds(verify_case1_identity(n));
  for (std::uint64_t n : {1, 2, 4}) expect_holds(verify_case2_identity(n));
  for (std::uint64_t n : {1, 2, 3}) expect_holds(verify_petrov_identity(n));
  EXPECT_EQ(two_sum_difference(1, RingSpec(4, 1)).rep(), R("1/2"));
  EXPECT_EQ(two_sum_difference(2, RingSpec(7, 1)).rep(), R("1"));
  EXPECT_EQ(two_sum_difference(4, RingSpec(13, 1)).rep(), R("2"));
  EXPECT_TRUE(two_sum_difference(5, RingSpec(17, 1)).is_zero());
  EXPECT_EQ(petrov_sum_value(1).rep(), R("-1/2"));
  EXPECT_EQ(petrov_sum_value(2).rep(), R("-1"));
  EXPECT_EQ(petrov_sum_value(3).rep(), R("-3/2"));
}

TEST(RootOfUnityIdentities, NumericOracle) {
  for (std::int64_t n = 1; n <= 30; ++n) {
    const auto un = static_cast<std::uint64_t>(n);
    EXPECT_LT(std::abs(numeric_two_sums(n, 3 * n + 2)), 1e-6L) << n;
    EXPECT_LT(std::abs(numeric_two_sums(n, 3 * n + 1) - n / 2.0L), 1e-6L) << n;
    EXPECT_LT(std::abs(numeric_petrov(n) + n / 2.0L), 1e-6L) << n;
    EXPECT_LT(std::abs(at_root(petrov_sum_value(un)) - numeric_petrov(n)), 1e-6L) << n;
    EXPECT_LT(std::abs(at_root(two_sum_difference(un, RingSpec(3 * un + 1, 1))) -
                       numeric_two_sums(n, 3 * n + 1)),
              1e-6L)
        << n;
  }
}

TEST(TaurasoIdentity, Examples) {
  for (std::uint64_t n : {1, 2, 6}) expect_holds(verify_tauraso_identity(n));
}

TEST(TaurasoIdentity, DirectOracle) {
  for (std::int64_t n = 1; n <= 16; ++n) {
    IntPoly lhs, rhs;
    for (std::int64_t k = 0; k < n; ++k) {
      lhs = lhs + shift(q_binomial_product(2 * k, k + 1), k);
      const std::int64_t j = n - k;
      const int s = legendre3(j - 1);
      if (s == 0) continue;
      rhs = rhs + scale(shift(q_binomial_product(2 * n, k), (2 * j * j - j * s - 3) / 3), Integer(s));
    }
    EXPECT_EQ(lhs, rhs) << n;
    expect_holds(verify_tauraso_identity(static_cast<std::uint64_t>(n)));
  }
}

TEST(Binom2nK, Examples) {
  expect_holds(verify_binom_2n_k_congruence(2, 1));
  expect_holds(verify_binom_2n_k_congruence(5, 3));
  EXPECT_THROW_MSG(verify_binom_2n_k_congruence(5, 5), std::invalid_argument, "k out of range");
  EXPECT_THROW_MSG(verify_binom_2n_k_congruence(5, 0), std::invalid_argument, "k out of range");
  EXPECT_THROW_MSG(verify_binom_2n_k_congruence(1, 1), std::invalid_argument, "k out of range");
  EXPECT_EQ(verify_binom_2n_k_all(1).status, ClaimStatus::skipped);
}

// Both sides times the unit q^(k(k-1)/2) (1 - q^k), so no inverse and no
// negative power is needed.
TEST(Binom2nK, DirectDivisibilityOracle) {
  for (std::int64_t n = 2; n <= 16; ++n) {
    for (std::int64_t k = 1; k < n; ++k) {
      const IntPoly lhs = shift(q_binomial_product(2 * n, k) * (P("1") - qpow(k)), k * (k - 1) / 2);
      const IntPoly rhs = scale(qpow(n) - P("1"), Integer(k % 2 == 0 ? 2 : -2));
      EXPECT_TRUE(divisible(lhs - rhs, static_cast<std::uint64_t>(n), 2)) << n << "," << k;
      expect_holds(verify_binom_2n_k_congruence(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k)));
    }
    expect_holds(verify_binom_2n_k_all(static_cast<std::uint64_t>(n)));
  }
}

TEST(Intermediate, Examples) {
  for (std::uint64_t n : {2, 4, 8}) expect_holds(verify_intermediate_congruence(n));
  EXPECT_THROW_MSG(verify_intermediate_congruence(3), NotApplicable,
                   "claim not stated for this residue");
}

TEST(Reports, HoldsIffWitnessZero) {
  const auto ok = ClaimReport::from_witness(ClaimId::central_sum, 3, RatPoly{}, {});
  EXPECT_TRUE(ok.holds());
  const auto bad = ClaimReport::from_witness(ClaimId::central_sum, 3, R("q"), {});
  EXPECT_EQ(bad.status, ClaimStatus::fails);
  EXPECT_FALSE(bad.holds());
  EXPECT_EQ(ClaimReport::skipped(ClaimId::catalan_sum, 3).status, ClaimStatus::skipped);
}

// A wrong right side or a modulus the claim does not state must surface as
// a failing report with a nonzero witness.
TEST(Reports, FaultInjection) {
  for (std::uint64_t n = 4; n <= 20; ++n) {
    if (n % 3 == 0) continue;
    const RingSpec ring(n, 2);
    const ResidueElem wrong = catalan_sum_lhs(ring) - reduce(binom_kplus1_sum_rhs(n), ring);
    const auto r = ClaimReport::from_witness(ClaimId::catalan_sum, n, wrong.rep(), {});
    EXPECT_EQ(r.status, ClaimStatus::fails) << n;
    EXPECT_FALSE(r.witness.is_zero());
    // Off by one in the exponent.
    const ResidueElem shifted =
        catalan_sum_lhs(ring) - reduce(shift(catalan_sum_rhs(n), 1), ring);
    EXPECT_FALSE(shifted.is_zero()) << n;
  }
  int failures = 0;
  for (std::uint64_t n = 2; n <= 20; ++n) {
    const auto r = verify_central_sum(n, 3);
    EXPECT_EQ(r.holds(), r.witness.is_zero());
    failures += r.status == ClaimStatus::fails;
  }
  EXPECT_GT(failures, 0);
}

TEST(Ladder, StrongRightSideReducesToWeak) {
  for (std::uint64_t n = 1; n <= 100; ++n) {
    if (n % 3 == 0) continue;
    const RingSpec ring(n, 1);
    EXPECT_EQ(reduce(catalan_sum_rhs(n), ring), reduce(tauraso_weak_rhs(n), ring)) << n;
  }
}

TEST(Ladder, CompositionOfSums) {
  for (std::uint64_t n = 1; n <= 100; ++n) {
    if (n % 3 == 0) continue;
    const RingSpec ring(n, 2);
    EXPECT_EQ(central_sum_lhs(ring) - binom_kplus1_sum_lhs(ring), catalan_sum_lhs(ring)) << n;
    EXPECT_EQ(reduce(central_sum_rhs(n) - binom_kplus1_sum_rhs(n), ring),
              reduce(catalan_sum_rhs(n), ring))
        << n;
  }
}

}  // namespace
}  // namespace qcat
