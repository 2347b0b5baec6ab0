#include "qcat/qseries.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace qcat {

IntPoly q_integer(std::uint64_t n) {
  return IntPoly(std::vector<Integer>(n, Integer(1)));
}

IntPoly q_pochhammer_power(std::uint64_t m, std::uint64_t n) {
  if (m == 0 && n > 0) return {};
  IntPoly r{1};
  for (std::uint64_t j = 0; j < n; ++j) r = mul_one_minus_q_power(r, m + j);
  return r;
}

IntPoly mul_one_minus_q_power(const IntPoly& p, std::uint64_t m) {
  const auto cs = p.coeffs();
  std::vector<Integer> r(cs.begin(), cs.end());
  mul_one_minus_q_power_inplace(r, m);
  return IntPoly(std::move(r));
}

IntPoly div_one_minus_q_power(const IntPoly& p, std::uint64_t m) {
  const auto cs = p.coeffs();
  std::vector<Integer> r(cs.begin(), cs.end());
  div_one_minus_q_power_inplace(r, m);
  return IntPoly(std::move(r));
}

IntPoly QBinomTable::get(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return {};
  const auto un = static_cast<std::uint64_t>(n);
  if (un > row_cap_) return q_binomial_multiplicative(n, k);
  {
    std::shared_lock lock(mutex_);
    if (un < rows_.size()) return rows_[un][static_cast<std::size_t>(k)];
  }
  ensure_rows(un);
  std::shared_lock lock(mutex_);
  return rows_[un][static_cast<std::size_t>(k)];
}

void QBinomTable::ensure_rows(std::uint64_t n) {
  n = std::min(n, row_cap_);
  std::unique_lock lock(mutex_);
  if (rows_.empty()) rows_.push_back({IntPoly{1}});
  while (rows_.size() <= n) {
    const auto& prev = rows_.back();
    const std::size_t r = rows_.size();
    std::vector<IntPoly> row(r + 1);
    row[0] = IntPoly{1};
    row[r] = IntPoly{1};
    for (std::size_t k = 1; k < r; ++k) row[k] = prev[k - 1] + shift(prev[k], k);
    rows_.push_back(std::move(row));
  }
}

std::uint64_t QBinomTable::rows() const {
  std::shared_lock lock(mutex_);
  return rows_.size();
}

QBinomTable& default_qbinom_table() {
  static QBinomTable table;
  return table;
}

IntPoly q_binomial(std::int64_t n, std::int64_t k) { return default_qbinom_table().get(n, k); }

IntPoly q_binomial_product(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return {};
  const auto un = static_cast<std::uint64_t>(n);
  const auto uk = static_cast<std::uint64_t>(k);
  const IntPoly top = q_pochhammer_power(1, un);
  const IntPoly bottom = mul(q_pochhammer_power(1, uk), q_pochhammer_power(1, un - uk));
  return exact_div(top, bottom);
}

IntPoly q_binomial_multiplicative(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return {};
  const auto un = static_cast<std::uint64_t>(n);
  const auto steps = std::min(static_cast<std::uint64_t>(k), un - static_cast<std::uint64_t>(k));
  BinomialRowStream row(un);
  for (std::uint64_t i = 0; i < steps; ++i) row.advance();
  return row.value();
}

IntPoly q_catalan(std::uint64_t n) {
  const auto sn = static_cast<std::int64_t>(n);
  return q_binomial(2 * sn, sn) - shift(q_binomial(2 * sn, sn + 1), 1);
}

IntPoly q_catalan_division_form(std::uint64_t n) {
  const auto sn = static_cast<std::int64_t>(n);
  return exact_div(q_binomial(2 * sn, sn), q_integer(n + 1));
}

void mul_one_minus_q_power_inplace(std::vector<Integer>& coeffs, std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("mul_one_minus_q_power: m must be positive");
  if (coeffs.empty()) return;
  const std::size_t old = coeffs.size();
  coeffs.resize(old + m);
  for (std::size_t i = old + m; i-- > m;) coeffs[i] -= coeffs[i - m];
}

void div_one_minus_q_power_inplace(std::vector<Integer>& coeffs, std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("div_one_minus_q_power: m must be positive");
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  if (coeffs.empty()) return;
  if (coeffs.size() <= m) throw std::domain_error("inexact division");
  const std::size_t qsize = coeffs.size() - m;
  for (std::size_t i = m; i < qsize; ++i) coeffs[i] += coeffs[i - m];
  for (std::size_t i = qsize; i < coeffs.size(); ++i) {
    if (coeffs[i] + (i >= m ? coeffs[i - m] : Integer(0)) != 0)
      throw std::domain_error("inexact division");
  }
  coeffs.resize(qsize);
}

void CentralBinomialStream::next_to_central_into(std::vector<Integer>& out) const {
  out.clear();
  if (k_ == 0) return;
  // [2k k+1] = [2k k] (1 - q^k) / (1 - q^(k+1))
  out.assign(central_.begin(), central_.end());
  mul_one_minus_q_power_inplace(out, k_);
  div_one_minus_q_power_inplace(out, k_ + 1);
}

IntPoly CentralBinomialStream::next_to_central() const {
  std::vector<Integer> out;
  next_to_central_into(out);
  return IntPoly(std::move(out));
}

void CentralBinomialStream::catalan_into(std::vector<Integer>& out) const {
  // [2k k] - q [2k k+1]
  next_to_central_into(out);
  out.insert(out.begin(), Integer(0));
  out.resize(std::max(out.size(), central_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < central_.size()) out[i] = central_[i] - out[i];
    else out[i] = -out[i];
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
}

IntPoly CentralBinomialStream::catalan() const {
  std::vector<Integer> out;
  catalan_into(out);
  return IntPoly(std::move(out));
}

void CentralBinomialStream::advance() {
  // [2k+2 k+1] = [2k k] (1 - q^(2k+1)) (1 - q^(2k+2)) / (1 - q^(k+1))^2
  mul_one_minus_q_power_inplace(central_, 2 * k_ + 1);
  div_one_minus_q_power_inplace(central_, k_ + 1);
  mul_one_minus_q_power_inplace(central_, 2 * k_ + 2);
  div_one_minus_q_power_inplace(central_, k_ + 1);
  ++k_;
}

void BinomialRowStream::advance() {
  if (k_ >= n_) throw std::out_of_range("BinomialRowStream advanced past the row end");
  mul_one_minus_q_power_inplace(value_, n_ - k_);
  div_one_minus_q_power_inplace(value_, k_ + 1);
  ++k_;
}

}  // namespace qcat
