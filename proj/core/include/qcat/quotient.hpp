#pragma once

// Residue rings Q[q] / Phi_n(q)^e.
//
// Working modulo Phi_m(q) is working at a primitive m-th root of unity, so
// sums over roots of unity become exact residue computations here.

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "qcat/cyclotomic.hpp"
#include "qcat/exactpoly.hpp"

namespace qcat {

class ResidueElem;

/// The ring Q[q] / Phi_n(q)^e. Cheap to copy; copies share the modulus.
class RingSpec {
 public:
  /// Pulls Phi_n from the process-wide cyclotomic cache.
  RingSpec(std::uint64_t n, std::uint64_t e);
  RingSpec(std::uint64_t n, std::uint64_t e, CyclotomicCache& cache);

  std::uint64_t n() const { return data_->n; }
  std::uint64_t power() const { return data_->e; }
  /// Phi_n(q)^e, monic of degree e * totient(n).
  const IntPoly& modulus() const { return data_->modulus; }
  const IntPoly& base() const { return data_->base; }
  std::size_t dimension() const { return data_->dimension; }

  /// The same n with the modulus power replaced.
  RingSpec with_power(std::uint64_t e) const;

  bool operator==(const RingSpec& other) const {
    return n() == other.n() && power() == other.power();
  }

 private:
  struct Data {
    std::uint64_t n;
    std::uint64_t e;
    IntPoly base;
    IntPoly modulus;
    RatPoly rat_modulus;
    std::size_t dimension;
  };
  static std::shared_ptr<const Data> make_data(std::uint64_t n, std::uint64_t e, IntPoly base);

  std::shared_ptr<const Data> data_;

  friend class ResidueElem;
  friend ResidueElem reduce(const RatPoly& p, const RingSpec& spec);
  friend ResidueElem reduce(const IntPoly& p, const RingSpec& spec);
  friend ResidueElem inverse(const ResidueElem& x);
};

/// An element of a RingSpec held as its canonical remainder of degree
/// below dimension(). Equality is equality of representatives.
class ResidueElem {
 public:
  const RingSpec& spec() const { return spec_; }
  const RatPoly& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }

  bool operator==(const ResidueElem& other) const {
    return spec_ == other.spec_ && rep_ == other.rep_;
  }

  friend ResidueElem operator+(const ResidueElem& a, const ResidueElem& b);
  friend ResidueElem operator-(const ResidueElem& a, const ResidueElem& b);
  friend ResidueElem operator-(const ResidueElem& a);
  friend ResidueElem operator*(const ResidueElem& a, const ResidueElem& b);
  friend ResidueElem operator*(const Rational& c, const ResidueElem& a);

 private:
  ResidueElem(RingSpec spec, RatPoly rep) : spec_(std::move(spec)), rep_(std::move(rep)) {}

  RingSpec spec_;
  RatPoly rep_;

  friend ResidueElem reduce(const RatPoly& p, const RingSpec& spec);
  friend ResidueElem reduce(const IntPoly& p, const RingSpec& spec);
};

/// Canonical remainder of p modulo the ring's modulus.
ResidueElem reduce(const RatPoly& p, const RingSpec& spec);
ResidueElem reduce(const IntPoly& p, const RingSpec& spec);
ResidueElem constant(const RingSpec& spec, const Rational& c);
/// Integer remainder of p modulo the ring's (monic, integral) modulus.
IntPoly reduce_integer(const IntPoly& p, const RingSpec& spec);

/// Accumulates integer polynomials modulo (q^n - 1)^e, which Phi_n^e
/// divides, in a buffer of e * n coefficients. The coefficient at q^j with
/// j = t n + r lands on q^r (q^n)^t = q^r sum_{i<e} binom(t, i) (q^n - 1)^i,
/// so large shifts and negative exponents fold in one pass with no division.
class ResidueAccumulator {
 public:
  explicit ResidueAccumulator(RingSpec spec);

  const RingSpec& spec() const { return spec_; }

  /// Adds sign * q^offset * sum_i coeffs[i] q^i.
  void add(std::span<const Integer> coeffs, std::int64_t offset, int sign = 1);
  void add(const IntPoly& p, std::int64_t offset = 0, int sign = 1) {
    add(p.coeffs(), offset, sign);
  }
  void add_monomial(const Integer& c, std::int64_t e);

  /// Canonical residue of everything added so far.
  ResidueElem finish() const;
  IntPoly finish_integer() const;

 private:
  // Weights a_l(t) with q^(t n) = sum_l a_l(t) q^(l n) in the ring.
  const std::vector<Integer>& weights(std::int64_t t);

  RingSpec spec_;
  std::vector<Integer> buffer_;
  std::int64_t cached_t_ = 0;
  std::vector<Integer> cached_weights_;
};

/// Multiplicative inverse by the extended Euclidean algorithm over Q[q]
/// modulo Phi_n, lifted to Phi_n^e by Newton iteration. Throws
/// std::domain_error("non-invertible residue") when gcd(rep, Phi_n) is not
/// a constant.
ResidueElem inverse(const ResidueElem& x);

/// Residue of q^e for any integer e, negative included.
ResidueElem q_power(const RingSpec& spec, std::int64_t e);

/// Extended Euclid in Q[q] with monic remainders: returns s with
/// s * a = 1 mod m. Throws std::domain_error("non-invertible residue")
/// when gcd(a, m) has positive degree.
RatPoly inverse_mod(const RatPoly& a, const RatPoly& m);

}  // namespace qcat
