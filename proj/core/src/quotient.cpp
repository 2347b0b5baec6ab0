#include "qcat/quotient.hpp"

#include <stdexcept>
#include <vector>

namespace qcat {

namespace {

// Reduces coeffs in place modulo (q^n - 1)^e, which Phi_n(q)^e divides.
// This only uses the e + 1 sparse terms of that polynomial, so high powers
// of q drop below e * n in linear time before the dense division.
template <class C>
void prereduce_sparse(std::vector<C>& coeffs, std::uint64_t n, std::uint64_t e) {
  const std::size_t top = static_cast<std::size_t>(n * e);
  if (coeffs.size() <= top) return;
  // (q^n - 1)^e = sum_i binom(e, i) (-1)^(e-i) q^(n i)
  std::vector<Integer> b(e + 1);
  for (std::uint64_t i = 0; i <= e; ++i) {
    mpz_bin_uiui(b[i].get_mpz_t(), e, i);
    if ((e - i) % 2 == 1) b[i] = -b[i];
  }
  for (std::size_t j = coeffs.size(); j-- > top;) {
    if (coeffs[j] == 0) continue;
    const C c = coeffs[j];
    coeffs[j] = 0;
    const std::size_t base = j - top;
    for (std::uint64_t i = 0; i < e; ++i) coeffs[base + n * i] -= c * b[i];
  }
  coeffs.resize(top);
}

template <class C>
DensePoly<C> reduce_coeffs(std::vector<C> coeffs, std::uint64_t n, std::uint64_t e,
                           const DensePoly<C>& modulus) {
  prereduce_sparse(coeffs, n, e);
  return divrem(DensePoly<C>(std::move(coeffs)), modulus).remainder;
}

void require_same_ring(const RingSpec& a, const RingSpec& b) {
  if (!(a == b)) throw std::invalid_argument("residues from different rings");
}

Integer generalized_binomial(std::int64_t t, std::uint64_t i) {
  Integer num = 1;
  Integer den = 1;
  for (std::uint64_t j = 0; j < i; ++j) {
    num *= Integer(static_cast<long>(t)) - static_cast<unsigned long>(j);
    den *= static_cast<unsigned long>(j + 1);
  }
  Integer out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

}  // namespace

RingSpec::RingSpec(std::uint64_t n, std::uint64_t e) : RingSpec(n, e, default_cyclotomic_cache()) {}

RingSpec::RingSpec(std::uint64_t n, std::uint64_t e, CyclotomicCache& cache) {
  if (n == 0) throw std::invalid_argument("ring index n must be positive");
  data_ = make_data(n, e, cache.get(n));
}

std::shared_ptr<const RingSpec::Data> RingSpec::make_data(std::uint64_t n, std::uint64_t e,
                                                          IntPoly base) {
  if (e == 0) throw std::invalid_argument("modulus power must be positive");
  Data d;
  d.n = n;
  d.e = e;
  d.base = std::move(base);
  d.modulus = d.base;
  for (std::uint64_t i = 1; i < e; ++i) d.modulus = mul(d.modulus, d.base);
  d.rat_modulus = to_rational(d.modulus);
  d.dimension = *d.modulus.degree();
  return std::make_shared<const Data>(std::move(d));
}

RingSpec RingSpec::with_power(std::uint64_t e) const {
  RingSpec out = *this;
  if (e != power()) out.data_ = make_data(n(), e, base());
  return out;
}

ResidueElem reduce(const RatPoly& p, const RingSpec& spec) {
  if (p.size() <= spec.dimension()) return ResidueElem(spec, p);
  const auto cs = p.coeffs();
  return ResidueElem(spec, reduce_coeffs(std::vector<Rational>(cs.begin(), cs.end()), spec.n(),
                                         spec.power(), spec.data_->rat_modulus));
}

IntPoly reduce_integer(const IntPoly& p, const RingSpec& spec) {
  if (p.size() <= spec.dimension()) return p;
  const auto cs = p.coeffs();
  return reduce_coeffs(std::vector<Integer>(cs.begin(), cs.end()), spec.n(), spec.power(),
                       spec.modulus());
}

ResidueElem reduce(const IntPoly& p, const RingSpec& spec) {
  return ResidueElem(spec, to_rational(reduce_integer(p, spec)));
}

ResidueElem constant(const RingSpec& spec, const Rational& c) {
  return reduce(RatPoly::constant(c), spec);
}

ResidueElem operator+(const ResidueElem& a, const ResidueElem& b) {
  require_same_ring(a.spec_, b.spec_);
  return ResidueElem(a.spec_, a.rep_ + b.rep_);
}

ResidueElem operator-(const ResidueElem& a, const ResidueElem& b) {
  require_same_ring(a.spec_, b.spec_);
  return ResidueElem(a.spec_, a.rep_ - b.rep_);
}

ResidueElem operator-(const ResidueElem& a) { return ResidueElem(a.spec_, -a.rep_); }

ResidueElem operator*(const ResidueElem& a, const ResidueElem& b) {
  require_same_ring(a.spec_, b.spec_);
  return reduce(mul(a.rep_, b.rep_), a.spec_);
}

ResidueElem operator*(const Rational& c, const ResidueElem& a) {
  return ResidueElem(a.spec_, scale(a.rep_, c));
}

RatPoly inverse_mod(const RatPoly& a, const RatPoly& m) {
  if (m.is_zero()) throw std::domain_error("zero divisor polynomial");
  RatPoly r0 = scale(m, Rational(1 / m.leading()));
  RatPoly r1 = divrem(a, m).remainder;
  if (r1.is_zero()) throw std::domain_error("non-invertible residue");
  // Invariant: s_i * a = r_i (mod m), with r_i monic.
  RatPoly s0;
  RatPoly s1 = RatPoly::constant(Rational(1 / r1.leading()));
  r1 = scale(r1, s1.leading());
  while (*r1.degree() > 0) {
    auto [quo, rem] = divrem(r0, r1);
    RatPoly s2 = s0 - mul(quo, s1);
    r0 = std::move(r1);
    s0 = std::move(s1);
    if (rem.is_zero()) throw std::domain_error("non-invertible residue");
    const Rational inv_lead = 1 / rem.leading();
    r1 = scale(rem, inv_lead);
    s1 = scale(s2, inv_lead);
  }
  // r1 is the monic constant 1.
  return divrem(s1, m).remainder;
}

ResidueElem inverse(const ResidueElem& x) {
  const RingSpec& spec = x.spec();
  const RatPoly base = to_rational(spec.base());
  RatPoly y = inverse_mod(x.rep(), base);
  ResidueElem inv = reduce(y, spec);
  // Newton: x y = 1 mod Phi^k  =>  x y (2 - x y) = 1 mod Phi^(2k).
  const ResidueElem two = constant(spec, Rational(2));
  for (std::uint64_t k = 1; k < spec.power(); k *= 2) inv = inv * (two - x * inv);
  return inv;
}

ResidueAccumulator::ResidueAccumulator(RingSpec spec)
    : spec_(std::move(spec)), buffer_(static_cast<std::size_t>(spec_.n() * spec_.power())) {
  cached_weights_.assign(spec_.power(), Integer(0));
  cached_weights_[0] = 1;
}

const std::vector<Integer>& ResidueAccumulator::weights(std::int64_t t) {
  if (t == cached_t_) return cached_weights_;
  const std::uint64_t e = spec_.power();
  // a_l(t) = sum_{i=l}^{e-1} binom(t, i) binom(i, l) (-1)^(i-l)
  for (std::uint64_t l = 0; l < e; ++l) {
    Integer a = 0;
    for (std::uint64_t i = l; i < e; ++i) {
      Integer bil;
      mpz_bin_uiui(bil.get_mpz_t(), i, l);
      Integer term = generalized_binomial(t, i) * bil;
      if ((i - l) % 2 == 1) term = -term;
      a += term;
    }
    cached_weights_[l] = std::move(a);
  }
  cached_t_ = t;
  return cached_weights_;
}

void ResidueAccumulator::add(std::span<const Integer> coeffs, std::int64_t offset, int sign) {
  const auto n = static_cast<std::int64_t>(spec_.n());
  const std::uint64_t e = spec_.power();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Integer& c = coeffs[i];
    if (c == 0) continue;
    const std::int64_t j = offset + static_cast<std::int64_t>(i);
    std::int64_t t = j / n;
    std::int64_t r = j % n;
    if (r < 0) {
      r += n;
      --t;
    }
    const auto base = static_cast<std::size_t>(r);
    if (e == 1) {
      if (sign > 0) buffer_[base] += c;
      else buffer_[base] -= c;
      continue;
    }
    if (e == 2) {
      // a_0 = 1 - t, a_1 = t
      Integer& lo = buffer_[base];
      Integer& hi = buffer_[base + static_cast<std::size_t>(n)];
      const Integer sc = sign > 0 ? c : Integer(-c);
      lo += sc;
      if (t != 0) {
        const Integer tsc = sc * static_cast<long>(t);
        lo -= tsc;
        hi += tsc;
      }
      continue;
    }
    const auto& w = weights(t);
    for (std::uint64_t l = 0; l < e; ++l) {
      if (w[l] == 0) continue;
      Integer& slot = buffer_[base + static_cast<std::size_t>(l * spec_.n())];
      if (sign > 0) slot += c * w[l];
      else slot -= c * w[l];
    }
  }
}

void ResidueAccumulator::add_monomial(const Integer& c, std::int64_t e) {
  add(std::span<const Integer>(&c, 1), e, 1);
}

IntPoly ResidueAccumulator::finish_integer() const {
  return divrem(IntPoly(buffer_), spec_.modulus()).remainder;
}

ResidueElem ResidueAccumulator::finish() const { return reduce(finish_integer(), spec_); }

ResidueElem q_power(const RingSpec& spec, std::int64_t e) {
  ResidueAccumulator acc(spec);
  acc.add_monomial(Integer(1), e);
  return acc.finish();
}

}  // namespace qcat
