#ifndef DCOUNT_SERIES_HPP
#define DCOUNT_SERIES_HPP

#include <cstddef>
#include <vector>

#include "dcount/core.hpp"

namespace dcount {

/// Formal power series c_0 + c_1 z + ... + c_N z^N over exact rationals.
///
/// The truncation order is fixed at construction; no operation extends it.
/// Operations that combine two series require equal orders.
class TruncatedSeries {
 public:
  /// Zero series of the given order.
  explicit TruncatedSeries(std::size_t order);
  /// Takes the coefficients as given; order = coeffs.size() - 1 (coeffs must be non-empty).
  explicit TruncatedSeries(std::vector<BigRational> coeffs);

  static TruncatedSeries one(std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const BigRational& operator[](std::size_t k) const { return coeffs_[k]; }
  BigRational& operator[](std::size_t k) { return coeffs_[k]; }
  const std::vector<BigRational>& coeffs() const { return coeffs_; }

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }

  bool operator==(const TruncatedSeries&) const = default;

 private:
  std::vector<BigRational> coeffs_;
};

/// Cauchy product truncated at the common order.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Logarithm of a series with constant term 1, by inverting the
/// cumulant/moment recursion c_n = d_n + (1/n) sum_{k<n} k d_k c_{n-k}.
TruncatedSeries series_log(const TruncatedSeries& c);

/// Exponential of a series with zero constant term (forward direction of the
/// same recursion). series_log(series_exp(d)) == d exactly.
TruncatedSeries series_exp(const TruncatedSeries& d);

/// Coefficients of c'/c: e[n-1] = n * log(c)_n for n = 1..N.
std::vector<BigRational> log_derivative_coeffs(const TruncatedSeries& c);

}  // namespace dcount

#endif
