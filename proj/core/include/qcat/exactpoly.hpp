#pragma once

// Dense univariate polynomials in q over exact integers and rationals.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qcat {

using Integer = mpz_class;
using Rational = mpq_class;

/// Degree of a polynomial. The zero polynomial has no degree.
using Degree = std::optional<std::size_t>;

/// Coefficient count at or above which mul() switches to Karatsuba.
inline constexpr std::size_t kKaratsubaThreshold = 32;

/// Dense polynomial with ascending coefficients; coeffs()[i] is the
/// coefficient of q^i. The stored sequence never ends in a zero.
template <class Coeff>
class DensePoly {
 public:
  using coeff_type = Coeff;

  DensePoly() = default;
  explicit DensePoly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
  }
  DensePoly(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) {
    normalize();
  }

  static DensePoly constant(Coeff c) { return DensePoly({std::move(c)}); }

  Degree degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }
  std::span<const Coeff> coeffs() const { return coeffs_; }

  /// Coefficient of q^i; zero past the degree.
  Coeff coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Coeff(0);
  }
  /// Leading coefficient. Precondition: nonzero polynomial.
  const Coeff& leading() const { return coeffs_.back(); }

  /// Moves the coefficient storage out; leaves *this zero.
  std::vector<Coeff> release() && { return std::move(coeffs_); }

  bool operator==(const DensePoly& other) const { return coeffs_ == other.coeffs_; }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

using IntPoly = DensePoly<Integer>;
using RatPoly = DensePoly<Rational>;

template <class C> DensePoly<C> add(const DensePoly<C>& a, const DensePoly<C>& b);
template <class C> DensePoly<C> sub(const DensePoly<C>& a, const DensePoly<C>& b);
template <class C> DensePoly<C> neg(const DensePoly<C>& a);
template <class C> DensePoly<C> scale(const DensePoly<C>& a, const C& c);
/// a * q^k
template <class C> DensePoly<C> shift(const DensePoly<C>& a, std::size_t k);

/// Exact product. Karatsuba above kKaratsubaThreshold; bit-identical to
/// mul_schoolbook.
template <class C> DensePoly<C> mul(const DensePoly<C>& a, const DensePoly<C>& b);
template <class C> DensePoly<C> mul_schoolbook(const DensePoly<C>& a, const DensePoly<C>& b);

template <class C>
struct DivRem {
  DensePoly<C> quotient;
  DensePoly<C> remainder;
};

/// Long division a = quotient * d + remainder, deg(remainder) < deg(d).
/// Throws std::domain_error("zero divisor polynomial") when d is zero. The
/// integer version requires every quotient coefficient to be integral and
/// throws std::domain_error("inexact division") otherwise; a monic divisor
/// always satisfies this.
template <class C> DivRem<C> divrem(const DensePoly<C>& a, const DensePoly<C>& d);

/// Exact quotient a / d; throws std::domain_error("inexact division") when
/// d does not divide a in Z[q].
IntPoly exact_div(const IntPoly& a, const IntPoly& d);

Integer eval_at_one(const IntPoly& a);
Rational eval_at_one(const RatPoly& a);
Integer eval_at(const IntPoly& a, const Integer& x);

IntPoly monomial(const Integer& c, std::size_t e);
RatPoly monomial(const Rational& c, std::size_t e);

RatPoly to_rational(const IntPoly& a);
/// Integer view of a rational polynomial; empty if any coefficient is
/// not an integer.
std::optional<IntPoly> to_integer(const RatPoly& a);

/// Renders ascending terms such as "1 + q - 2*q^3" or "-1/2 + q^2".
std::string to_string(const IntPoly& a);
std::string to_string(const RatPoly& a);

/// Parses the grammar produced by to_string. Repeated exponents are summed.
/// Throws std::invalid_argument on malformed input.
RatPoly parse_rat_poly(std::string_view text);
/// As parse_rat_poly, and additionally rejects non-integer coefficients.
IntPoly parse_int_poly(std::string_view text);

template <class C>
DensePoly<C> operator+(const DensePoly<C>& a, const DensePoly<C>& b) { return add(a, b); }
template <class C>
DensePoly<C> operator-(const DensePoly<C>& a, const DensePoly<C>& b) { return sub(a, b); }
template <class C>
DensePoly<C> operator-(const DensePoly<C>& a) { return neg(a); }
template <class C>
DensePoly<C> operator*(const DensePoly<C>& a, const DensePoly<C>& b) { return mul(a, b); }

extern template DensePoly<Integer> add(const DensePoly<Integer>&, const DensePoly<Integer>&);
extern template DensePoly<Rational> add(const DensePoly<Rational>&, const DensePoly<Rational>&);
extern template DensePoly<Integer> sub(const DensePoly<Integer>&, const DensePoly<Integer>&);
extern template DensePoly<Rational> sub(const DensePoly<Rational>&, const DensePoly<Rational>&);
extern template DensePoly<Integer> neg(const DensePoly<Integer>&);
extern template DensePoly<Rational> neg(const DensePoly<Rational>&);
extern template DensePoly<Integer> scale(const DensePoly<Integer>&, const Integer&);
extern template DensePoly<Rational> scale(const DensePoly<Rational>&, const Rational&);
extern template DensePoly<Integer> shift(const DensePoly<Integer>&, std::size_t);
extern template DensePoly<Rational> shift(const DensePoly<Rational>&, std::size_t);
extern template DensePoly<Integer> mul(const DensePoly<Integer>&, const DensePoly<Integer>&);
extern template DensePoly<Rational> mul(const DensePoly<Rational>&, const DensePoly<Rational>&);
extern template DensePoly<Integer> mul_schoolbook(const DensePoly<Integer>&, const DensePoly<Integer>&);
extern template DensePoly<Rational> mul_schoolbook(const DensePoly<Rational>&, const DensePoly<Rational>&);
extern template DivRem<Integer> divrem(const DensePoly<Integer>&, const DensePoly<Integer>&);
extern template DivRem<Rational> divrem(const DensePoly<Rational>&, const DensePoly<Rational>&);

}  // namespace qcat
