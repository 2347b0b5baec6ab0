#include "qcat/congruences.hpp"

#include <stdexcept>
#include <utility>

#include "qcat/qseries.hpp"

namespace qcat {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t as_signed(std::uint64_t v) { return static_cast<std::int64_t>(v); }

IntPoly q_to(std::int64_t e) {
  if (e < 0) throw std::domain_error("negative exponent in a Z[q] term");
  return monomial(Integer(1), static_cast<std::size_t>(e));
}

IntPoly qn_minus_one(std::uint64_t n) { return q_to(as_signed(n)) - IntPoly{1}; }

void require_stated_residue(std::uint64_t n) {
  if (n % 3 == 0) throw NotApplicable();
}

std::uint64_t stated_power(std::uint64_t requested, std::uint64_t stated) {
  return requested == 0 ? stated : requested;
}

template <class F>
ClaimReport timed(ClaimId claim, std::uint64_t n, F&& witness_fn) {
  const auto start = Clock::now();
  RatPoly witness = std::forward<F>(witness_fn)();
  return ClaimReport::from_witness(claim, n, std::move(witness), Clock::now() - start);
}

// (-1)^k / (1 - q^m) * q^e, for m not divisible by the ring index.
ResidueElem signed_fraction(const RingSpec& ring, std::uint64_t k, std::int64_t e,
                            std::uint64_t m) {
  if (m % ring.n() == 0) throw std::domain_error("non-invertible residue");
  const ResidueElem denom = reduce(IntPoly{1} - q_to(as_signed(m)), ring);
  ResidueElem term = q_power(ring, e) * inverse(denom);
  return k % 2 == 0 ? term : -term;
}

// (2j^2 - j ((j-1)/3)) / 3 for a nonzero symbol.
std::int64_t third_exponent(std::int64_t j, Symbol3 s) {
  return exact_exponent(2 * j * j - j * s.value(), 3);
}

}  // namespace

IntPoly central_sum_rhs(std::uint64_t n) {
  const auto s = symbol3(as_signed(n));
  if (s.is_zero()) return {};
  const auto sn = as_signed(n);
  return scale(q_to(exact_exponent(sn * sn - 1, 3)), Integer(s.value()));
}

IntPoly catalan_sum_rhs(std::uint64_t n) {
  require_stated_residue(n);
  const auto sn = as_signed(n);
  const IntPoly first = q_to(exact_exponent(sn * sn - 1, 3));
  if (n % 3 == 2) return -first - q_to(exact_exponent(sn * (2 * sn - 1), 3));
  return first - scale(qn_minus_one(n), Integer(exact_exponent(sn - 1, 3)));
}

IntPoly binom_kplus1_sum_rhs(std::uint64_t n) {
  require_stated_residue(n);
  const auto sn = as_signed(n);
  if (n % 3 == 2) return q_to(exact_exponent(sn * (2 * sn - 1), 3));
  return scale(qn_minus_one(n), Integer(exact_exponent(sn - 1, 3)));
}

IntPoly tauraso_weak_rhs(std::uint64_t n) {
  const auto sn = as_signed(n);
  if (n % 3 == 2) return -IntPoly{1} - q_to(exact_exponent(2 * sn - 1, 3));
  return q_to(sn / 3);
}

ResidueElem central_sum_lhs(const RingSpec& ring) {
  ResidueAccumulator acc(ring);
  CentralBinomialStream stream;
  for (std::uint64_t k = 0; k < ring.n(); ++k, stream.advance())
    acc.add(stream.central_coeffs(), as_signed(k));
  return acc.finish();
}

ResidueElem catalan_sum_lhs(const RingSpec& ring) {
  ResidueAccumulator acc(ring);
  CentralBinomialStream stream;
  std::vector<Integer> scratch;
  for (std::uint64_t k = 0; k < ring.n(); ++k, stream.advance()) {
    stream.catalan_into(scratch);
    acc.add(scratch, as_signed(k));
  }
  return acc.finish();
}

ResidueElem binom_kplus1_sum_lhs(const RingSpec& ring) {
  ResidueAccumulator acc(ring);
  CentralBinomialStream stream;
  std::vector<Integer> scratch;
  for (std::uint64_t k = 0; k < ring.n(); ++k, stream.advance()) {
    stream.next_to_central_into(scratch);
    acc.add(scratch, as_signed(k + 1));
  }
  return acc.finish();
}

ResidueElem lemma_sum_value(std::uint64_t n) {
  const RingSpec ring(n, 1);
  ResidueElem acc = constant(ring, Rational(0));
  for (std::uint64_t k = 1; k < n; ++k) {
    const auto sk = as_signed(k);
    const auto s = symbol3(sk - 1);
    if (s.is_zero()) continue;
    const std::int64_t e = third_exponent(sk, s) - sk * (sk - 1) / 2;
    const ResidueElem term = signed_fraction(ring, k, e, k);
    acc = s.value() > 0 ? acc + term : acc - term;
  }
  return acc;
}

ResidueElem two_sum_difference(std::uint64_t n, const RingSpec& ring) {
  ResidueElem acc = constant(ring, Rational(0));
  for (std::uint64_t k = 0; k < n; ++k) {
    const auto sk = as_signed(k);
    const auto e = exact_exponent((sk + 1) * (3 * sk + 2), 2);
    acc = acc + signed_fraction(ring, k, e, 3 * k + 2);
  }
  for (std::uint64_t k = 1; k <= n; ++k) {
    const auto sk = as_signed(k);
    const auto e = exact_exponent(sk * (3 * sk + 5), 2);
    acc = acc - signed_fraction(ring, k, e, 3 * k);
  }
  return acc;
}

ResidueElem petrov_sum_value(std::uint64_t n) {
  const RingSpec ring(3 * n + 1, 1);
  ResidueElem acc = constant(ring, Rational(0));
  for (std::uint64_t k = 1; k <= 2 * n; ++k) {
    const auto sk = as_signed(k);
    const auto e = exact_exponent(sk * (3 * sk - 1), 2);
    acc = acc + signed_fraction(ring, k, e, 3 * k - 1);
  }
  return acc;
}

ClaimReport verify_central_sum(std::uint64_t n, std::uint64_t power) {
  return timed(ClaimId::central_sum, n, [&] {
    const RingSpec ring(n, stated_power(power, 2));
    return (central_sum_lhs(ring) - reduce(central_sum_rhs(n), ring)).rep();
  });
}

ClaimReport verify_catalan_sum(std::uint64_t n, std::uint64_t power) {
  require_stated_residue(n);
  return timed(ClaimId::catalan_sum, n, [&] {
    const RingSpec ring(n, stated_power(power, 2));
    return (catalan_sum_lhs(ring) - reduce(catalan_sum_rhs(n), ring)).rep();
  });
}

ClaimReport verify_binom_kplus1_sum(std::uint64_t n, std::uint64_t power) {
  require_stated_residue(n);
  return timed(ClaimId::binom_kplus1_sum, n, [&] {
    const RingSpec ring(n, stated_power(power, 2));
    return (binom_kplus1_sum_lhs(ring) - reduce(binom_kplus1_sum_rhs(n), ring)).rep();
  });
}

ClaimReport verify_tauraso_weak(std::uint64_t n) {
  return timed(ClaimId::tauraso_weak, n, [&] {
    const RingSpec ring(n, 1);
    return (catalan_sum_lhs(ring) - reduce(tauraso_weak_rhs(n), ring)).rep();
  });
}

ClaimReport verify_lemma_sum(std::uint64_t n) {
  require_stated_residue(n);
  return timed(ClaimId::lemma_sum, n, [&] {
    Rational rhs = n % 3 == 1 ? Rational(static_cast<unsigned long>(n - 1), 6UL) : Rational(0);
    rhs.canonicalize();
    const ResidueElem lhs = lemma_sum_value(n);
    return (lhs - constant(lhs.spec(), rhs)).rep();
  });
}

ClaimReport verify_case1_identity(std::uint64_t n) {
  return timed(ClaimId::case1_identity, n, [&] {
    const RingSpec ring(3 * n + 2, 1);
    return two_sum_difference(n, ring).rep();
  });
}

ClaimReport verify_case2_identity(std::uint64_t n) {
  return timed(ClaimId::case2_identity, n, [&] {
    const RingSpec ring(3 * n + 1, 1);
    Rational half_n(static_cast<unsigned long>(n), 2UL);
    half_n.canonicalize();
    return (two_sum_difference(n, ring) - constant(ring, half_n)).rep();
  });
}

ClaimReport verify_petrov_identity(std::uint64_t n) {
  return timed(ClaimId::petrov_identity, n, [&] {
    const ResidueElem value = petrov_sum_value(n);
    Rational minus_half_n(-static_cast<long>(n), 2UL);
    minus_half_n.canonicalize();
    return (value - constant(value.spec(), minus_half_n)).rep();
  });
}

ClaimReport verify_tauraso_identity(std::uint64_t n) {
  return timed(ClaimId::tauraso_identity, n, [&] {
    const auto sn = as_signed(n);
    IntPoly lhs;
    CentralBinomialStream central;
    for (std::uint64_t k = 0; k < n; ++k, central.advance())
      lhs = lhs + shift(central.next_to_central(), k);

    IntPoly rhs;
    BinomialRowStream row(2 * n);
    for (std::uint64_t k = 0; k < n; ++k, row.advance()) {
      const std::int64_t j = sn - as_signed(k);
      const auto s = symbol3(j - 1);
      if (s.is_zero()) continue;
      const std::int64_t e = exact_exponent(2 * j * j - j * s.value() - 3, 3);
      if (e < 0) throw std::domain_error("negative exponent in a Z[q] term");
      const IntPoly term = shift(row.value(), static_cast<std::size_t>(e));
      rhs = s.value() > 0 ? rhs + term : rhs - term;
    }
    return to_rational(lhs - rhs);
  });
}

namespace {

ResidueElem binom_2n_k_rhs(const RingSpec& ring, std::uint64_t k) {
  const auto sk = as_signed(k);
  const ResidueElem factor = reduce(scale(qn_minus_one(ring.n()), Integer(2)), ring);
  const ResidueElem frac = signed_fraction(ring, k, -(sk * (sk - 1) / 2), k);
  return factor * frac;
}

}  // namespace

ClaimReport verify_binom_2n_k_congruence(std::uint64_t n, std::uint64_t k, std::uint64_t power) {
  if (k < 1 || k + 1 > n) throw std::invalid_argument("k out of range");
  return timed(ClaimId::binom_2n_k, n, [&] {
    const RingSpec ring(n, stated_power(power, 2));
    const IntPoly lhs = q_binomial_multiplicative(as_signed(2 * n), as_signed(k));
    return (reduce(lhs, ring) - binom_2n_k_rhs(ring, k)).rep();
  });
}

ClaimReport verify_binom_2n_k_all(std::uint64_t n, std::uint64_t power) {
  if (n < 2) return ClaimReport::skipped(ClaimId::binom_2n_k, n);
  return timed(ClaimId::binom_2n_k, n, [&] {
    const RingSpec ring(n, stated_power(power, 2));
    BinomialRowStream row(2 * n);
    row.advance();
    for (std::uint64_t k = 1; k < n; ++k, row.advance()) {
      RatPoly witness = (reduce(row.value(), ring) - binom_2n_k_rhs(ring, k)).rep();
      if (!witness.is_zero()) return witness;
    }
    return RatPoly{};
  });
}

ClaimReport verify_intermediate_congruence(std::uint64_t n, std::uint64_t power) {
  require_stated_residue(n);
  return timed(ClaimId::intermediate, n, [&] {
    const auto sn = as_signed(n);
    const RingSpec ring(n, stated_power(power, 2));
    const ResidueElem lhs = binom_kplus1_sum_lhs(ring);

    ResidueElem rhs = constant(ring, Rational(0));
    const auto s = symbol3(sn - 1);
    if (!s.is_zero()) {
      const IntPoly lead = q_to(third_exponent(sn, s));
      rhs = reduce(scale(lead, Integer(s.value())), ring);
    }
    // S(n) is only known modulo Phi_n, which suffices because it is
    // multiplied by q^n - 1.
    const RatPoly lemma = lemma_sum_value(n).rep();
    rhs = rhs + reduce(scale(qn_minus_one(n), Integer(2)), ring) * reduce(lemma, ring);
    return (lhs - rhs).rep();
  });
}

}  // namespace qcat
