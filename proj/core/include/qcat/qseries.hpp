#pragma once

// q-integers, q-shifted factorials, Gaussian binomials and q-Catalan numbers.

#include <cstdint>
#include <deque>
#include <shared_mutex>
#include <span>
#include <vector>

#include "qcat/exactpoly.hpp"

namespace qcat {

/// [n]_q = 1 + q + ... + q^(n-1); zero for n = 0.
IntPoly q_integer(std::uint64_t n);

/// (q^m; q)_n = prod_{j<n} (1 - q^(m+j)); the empty product is 1.
IntPoly q_pochhammer_power(std::uint64_t m, std::uint64_t n);

/// P * (1 - q^m), m >= 1.
IntPoly mul_one_minus_q_power(const IntPoly& p, std::uint64_t m);

/// P / (1 - q^m) in Z[q], m >= 1, in linear time. Throws
/// std::domain_error("inexact division") if the division leaves a remainder.
IntPoly div_one_minus_q_power(const IntPoly& p, std::uint64_t m);

/// Memoized triangle of Gaussian binomials built row by row with the
/// q-Pascal rule [n k] = [n-1 k-1] + q^k [n-1 k].
///
/// Rows are only stored up to row_cap; requests past the cap are served by
/// the multiplicative form without memoization. Safe for concurrent use.
class QBinomTable {
 public:
  static constexpr std::uint64_t kDefaultRowCap = 64;

  explicit QBinomTable(std::uint64_t row_cap = kDefaultRowCap) : row_cap_(row_cap) {}

  IntPoly get(std::int64_t n, std::int64_t k);
  /// Materializes rows 0..n (clamped to the cap).
  void ensure_rows(std::uint64_t n);
  std::uint64_t rows() const;
  std::uint64_t row_cap() const { return row_cap_; }

 private:
  std::uint64_t row_cap_;
  mutable std::shared_mutex mutex_;
  std::deque<std::vector<IntPoly>> rows_;
};

QBinomTable& default_qbinom_table();

/// Gaussian binomial [n k]_q; zero unless 0 <= k <= n.
IntPoly q_binomial(std::int64_t n, std::int64_t k);

/// Gaussian binomial via (q;q)_n / ((q;q)_k (q;q)_{n-k}) with exact_div.
/// Kept separate from q_binomial as an independent check.
IntPoly q_binomial_product(std::int64_t n, std::int64_t k);

/// [n k]_q via the ratio [n k+1] = [n k] (1 - q^(n-k)) / (1 - q^(k+1)).
IntPoly q_binomial_multiplicative(std::int64_t n, std::int64_t k);

/// C_n(q) = [2n n] - q [2n n+1].
IntPoly q_catalan(std::uint64_t n);

/// C_n(q) = [2n n] / [n+1]_q.
IntPoly q_catalan_division_form(std::uint64_t n);

/// In-place forms on raw ascending coefficient vectors.
void mul_one_minus_q_power_inplace(std::vector<Integer>& coeffs, std::uint64_t m);
void div_one_minus_q_power_inplace(std::vector<Integer>& coeffs, std::uint64_t m);

/// Walks k = 0, 1, 2, ... producing [2k k] and [2k k+1] without a table.
/// Updates happen in place, four linear passes per step.
class CentralBinomialStream {
 public:
  std::uint64_t k() const { return k_; }
  /// [2k k]
  IntPoly central() const { return IntPoly(central_); }
  std::span<const Integer> central_coeffs() const { return central_; }
  /// [2k k+1]
  IntPoly next_to_central() const;
  void next_to_central_into(std::vector<Integer>& out) const;
  /// C_k(q) in the subtraction form.
  IntPoly catalan() const;
  void catalan_into(std::vector<Integer>& out) const;
  void advance();

 private:
  std::uint64_t k_ = 0;
  std::vector<Integer> central_{Integer(1)};
};

/// Walks k = 0, 1, ..., n over the fixed row n producing [n k].
class BinomialRowStream {
 public:
  explicit BinomialRowStream(std::uint64_t n) : n_(n) {}
  std::uint64_t n() const { return n_; }
  std::uint64_t k() const { return k_; }
  IntPoly value() const { return IntPoly(value_); }
  std::span<const Integer> coeffs() const { return value_; }
  /// Precondition: k() < n().
  void advance();

 private:
  std::uint64_t n_;
  std::uint64_t k_ = 0;
  std::vector<Integer> value_{Integer(1)};
};

}  // namespace qcat
