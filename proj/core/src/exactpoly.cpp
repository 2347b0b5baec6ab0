#include "qcat/exactpoly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace qcat {

namespace {

template <class C>
using Coeffs = std::vector<C>;

// Divides num by den into out. Integers only divide when exact.
bool try_divide(const Integer& num, const Integer& den, Integer& out) {
  if (den == 1) {
    out = num;
    return true;
  }
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) return false;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return true;
}

bool try_divide(const Rational& num, const Rational& den, Rational& out) {
  out = num / den;
  return true;
}

// out[i + j] += a[i] * b[j]; out must already hold a.size() + b.size() - 1 slots.
template <class C>
void schoolbook_into(std::span<const C> a, std::span<const C> b, std::span<C> out) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
}

template <class C>
Coeffs<C> sum_spans(std::span<const C> a, std::span<const C> b) {
  Coeffs<C> r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

template <class C>
Coeffs<C> karatsuba(std::span<const C> a, std::span<const C> b) {
  if (a.empty() || b.empty()) return {};
  if (a.size() < b.size()) std::swap(a, b);
  Coeffs<C> out(a.size() + b.size() - 1);
  if (b.size() < kKaratsubaThreshold) {
    schoolbook_into<C>(a, b, out);
    return out;
  }
  const std::size_t m = a.size() / 2;
  if (b.size() <= m) {
    // Unbalanced: split only the longer operand.
    auto lo = karatsuba<C>(a.first(m), b);
    auto hi = karatsuba<C>(a.subspan(m), b);
    for (std::size_t i = 0; i < lo.size(); ++i) out[i] += lo[i];
    for (std::size_t i = 0; i < hi.size(); ++i) out[i + m] += hi[i];
    return out;
  }
  auto a0 = a.first(m), a1 = a.subspan(m);
  auto b0 = b.first(m), b1 = b.subspan(m);
  auto z0 = karatsuba<C>(a0, b0);
  auto z2 = karatsuba<C>(a1, b1);
  auto sa = sum_spans<C>(a0, a1);
  auto sb = sum_spans<C>(b0, b1);
  auto z1 = karatsuba<C>(std::span<const C>(sa), std::span<const C>(sb));
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];
  for (std::size_t i = 0; i < z0.size(); ++i) out[i] += z0[i];
  for (std::size_t i = 0; i < z1.size() && i + m < out.size(); ++i) out[i + m] += z1[i];
  for (std::size_t i = 0; i < z2.size(); ++i) out[i + 2 * m] += z2[i];
  return out;
}

std::string coeff_string(const Integer& c) { return c.get_str(); }
std::string coeff_string(const Rational& c) { return c.get_str(); }

template <class C>
std::string render(const DensePoly<C>& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  const auto cs = a.coeffs();
  for (std::size_t e = 0; e < cs.size(); ++e) {
    const C& c = cs[e];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const C mag = negative ? C(-c) : c;
    if (e == 0) {
      out += coeff_string(mag);
      continue;
    }
    if (mag != 1) {
      out += coeff_string(mag);
      out += '*';
    }
    out += 'q';
    if (e > 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
  return out;
}

[[noreturn]] void malformed(std::string_view text, std::string_view why) {
  throw std::invalid_argument("malformed polynomial '" + std::string(text) + "': " +
                              std::string(why));
}

}  // namespace

template <class C>
DensePoly<C> add(const DensePoly<C>& a, const DensePoly<C>& b) {
  return DensePoly<C>(sum_spans<C>(a.coeffs(), b.coeffs()));
}

template <class C>
DensePoly<C> sub(const DensePoly<C>& a, const DensePoly<C>& b) {
  Coeffs<C> r(std::max(a.size(), b.size()));
  const auto ac = a.coeffs();
  const auto bc = b.coeffs();
  for (std::size_t i = 0; i < ac.size(); ++i) r[i] = ac[i];
  for (std::size_t i = 0; i < bc.size(); ++i) r[i] -= bc[i];
  return DensePoly<C>(std::move(r));
}

template <class C>
DensePoly<C> neg(const DensePoly<C>& a) {
  Coeffs<C> r(a.coeffs().begin(), a.coeffs().end());
  for (auto& c : r) c = -c;
  return DensePoly<C>(std::move(r));
}

template <class C>
DensePoly<C> scale(const DensePoly<C>& a, const C& c) {
  if (c == 0) return {};
  Coeffs<C> r(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : r) x *= c;
  return DensePoly<C>(std::move(r));
}

template <class C>
DensePoly<C> shift(const DensePoly<C>& a, std::size_t k) {
  if (a.is_zero()) return {};
  Coeffs<C> r(a.size() + k);
  std::copy(a.coeffs().begin(), a.coeffs().end(), r.begin() + static_cast<std::ptrdiff_t>(k));
  return DensePoly<C>(std::move(r));
}

template <class C>
DensePoly<C> mul_schoolbook(const DensePoly<C>& a, const DensePoly<C>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Coeffs<C> out(a.size() + b.size() - 1);
  schoolbook_into<C>(a.coeffs(), b.coeffs(), out);
  return DensePoly<C>(std::move(out));
}

template <class C>
DensePoly<C> mul(const DensePoly<C>& a, const DensePoly<C>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (std::min(a.size(), b.size()) < kKaratsubaThreshold) return mul_schoolbook(a, b);
  return DensePoly<C>(karatsuba<C>(a.coeffs(), b.coeffs()));
}

template <class C>
DivRem<C> divrem(const DensePoly<C>& a, const DensePoly<C>& d) {
  if (d.is_zero()) throw std::domain_error("zero divisor polynomial");
  if (a.size() < d.size()) return {DensePoly<C>{}, a};
  Coeffs<C> r(a.coeffs().begin(), a.coeffs().end());
  const auto dc = d.coeffs();
  const std::size_t dd = dc.size() - 1;
  const C& lead = dc.back();
  Coeffs<C> quo(r.size() - dd);
  for (std::size_t i = r.size(); i-- > dd;) {
    if (r[i] == 0) continue;
    C c;
    if (!try_divide(r[i], lead, c)) throw std::domain_error("inexact division");
    const std::size_t base = i - dd;
    for (std::size_t j = 0; j < dd; ++j) r[base + j] -= c * dc[j];
    r[i] = 0;
    quo[base] = std::move(c);
  }
  r.resize(dd);
  return {DensePoly<C>(std::move(quo)), DensePoly<C>(std::move(r))};
}

IntPoly exact_div(const IntPoly& a, const IntPoly& d) {
  auto [quo, rem] = divrem(a, d);
  if (!rem.is_zero()) throw std::domain_error("inexact division");
  return quo;
}

Integer eval_at_one(const IntPoly& a) {
  Integer s = 0;
  for (const auto& c : a.coeffs()) s += c;
  return s;
}

Rational eval_at_one(const RatPoly& a) {
  Rational s = 0;
  for (const auto& c : a.coeffs()) s += c;
  return s;
}

Integer eval_at(const IntPoly& a, const Integer& x) {
  Integer s = 0;
  const auto cs = a.coeffs();
  for (std::size_t i = cs.size(); i-- > 0;) s = s * x + cs[i];
  return s;
}

IntPoly monomial(const Integer& c, std::size_t e) {
  if (c == 0) return {};
  std::vector<Integer> r(e + 1);
  r[e] = c;
  return IntPoly(std::move(r));
}

RatPoly monomial(const Rational& c, std::size_t e) {
  if (c == 0) return {};
  std::vector<Rational> r(e + 1);
  r[e] = c;
  return RatPoly(std::move(r));
}

RatPoly to_rational(const IntPoly& a) {
  std::vector<Rational> r;
  r.reserve(a.size());
  for (const auto& c : a.coeffs()) r.emplace_back(c);
  return RatPoly(std::move(r));
}

std::optional<IntPoly> to_integer(const RatPoly& a) {
  std::vector<Integer> r;
  r.reserve(a.size());
  for (const auto& c : a.coeffs()) {
    if (c.get_den() != 1) return std::nullopt;
    r.emplace_back(c.get_num());
  }
  return IntPoly(std::move(r));
}

std::string to_string(const IntPoly& a) { return render(a); }
std::string to_string(const RatPoly& a) { return render(a); }

RatPoly parse_rat_poly(std::string_view text) {
  std::map<std::size_t, Rational> terms;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_digits = [&]() -> std::string {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return std::string(text.substr(start, pos - start));
  };

  skip_ws();
  if (pos == text.size()) malformed(text, "empty input");
  bool first = true;
  while (true) {
    skip_ws();
    if (pos == text.size()) {
      if (first) malformed(text, "empty input");
      break;
    }
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
      negative = text[pos] == '-';
      ++pos;
      skip_ws();
    } else if (!first) {
      malformed(text, "expected '+' or '-' between terms");
    }
    first = false;

    Rational coeff = 1;
    bool have_coeff = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::string num = read_digits();
      std::string den = "1";
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = read_digits();
        if (den.empty()) malformed(text, "missing denominator");
      }
      Integer d(den);
      if (d == 0) malformed(text, "zero denominator");
      coeff = Rational(Integer(num), d);
      coeff.canonicalize();
      have_coeff = true;
      skip_ws();
    }

    std::size_t exponent = 0;
    bool have_var = false;
    if (have_coeff && pos < text.size() && text[pos] == '*') {
      ++pos;
      skip_ws();
      if (pos >= text.size() || text[pos] != 'q') malformed(text, "expected 'q' after '*'");
    }
    if (pos < text.size() && text[pos] == 'q') {
      ++pos;
      have_var = true;
      exponent = 1;
      skip_ws();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip_ws();
        std::string digits = read_digits();
        if (digits.empty()) malformed(text, "missing exponent");
        exponent = std::stoull(digits);
      }
    }
    if (!have_coeff && !have_var) malformed(text, "expected a term");
    terms[exponent] += negative ? Rational(-coeff) : coeff;
  }

  if (terms.empty()) return {};
  std::vector<Rational> cs(terms.rbegin()->first + 1);
  for (auto& [e, c] : terms) cs[e] = c;
  return RatPoly(std::move(cs));
}

IntPoly parse_int_poly(std::string_view text) {
  auto r = to_integer(parse_rat_poly(text));
  if (!r) malformed(text, "non-integer coefficient");
  return *std::move(r);
}

template DensePoly<Integer> add(const DensePoly<Integer>&, const DensePoly<Integer>&);
template DensePoly<Rational> add(const DensePoly<Rational>&, const DensePoly<Rational>&);
template DensePoly<Integer> sub(const DensePoly<Integer>&, const DensePoly<Integer>&);
template DensePoly<Rational> sub(const DensePoly<Rational>&, const DensePoly<Rational>&);
template DensePoly<Integer> neg(const DensePoly<Integer>&);
template DensePoly<Rational> neg(const DensePoly<Rational>&);
template DensePoly<Integer> scale(const DensePoly<Integer>&, const Integer&);
template DensePoly<Rational> scale(const DensePoly<Rational>&, const Rational&);
template DensePoly<Integer> shift(const DensePoly<Integer>&, std::size_t);
template DensePoly<Rational> shift(const DensePoly<Rational>&, std::size_t);
template DensePoly<Integer> mul(const DensePoly<Integer>&, const DensePoly<Integer>&);
template DensePoly<Rational> mul(const DensePoly<Rational>&, const DensePoly<Rational>&);
template DensePoly<Integer> mul_schoolbook(const DensePoly<Integer>&, const DensePoly<Integer>&);
template DensePoly<Rational> mul_schoolbook(const DensePoly<Rational>&, const DensePoly<Rational>&);
template DivRem<Integer> divrem(const DensePoly<Integer>&, const DensePoly<Integer>&);
template DivRem<Rational> divrem(const DensePoly<Rational>&, const DensePoly<Rational>&);

}  // namespace qcat
