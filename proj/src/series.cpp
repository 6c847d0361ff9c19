#include "dcount/series.hpp"

#include <string>
#include <utility>

namespace dcount {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b, const char* op) {
  if (a.order() != b.order()) {
    throw InvalidInput(std::string(op) + ": order mismatch (" + std::to_string(a.order()) + " vs " +
                       std::to_string(b.order()) + ")");
  }
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InvalidInput("series needs at least a constant term");
  for (auto& c : coeffs_) c.canonicalize();
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
  TruncatedSeries s(order);
  s[0] = 1;
  return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  require_same_order(*this, other, "series add");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b, "series_mul");
  const std::size_t order = a.order();
  TruncatedSeries c(order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= order; ++j) {
      if (b[j] != 0) c[i + j] += a[i] * b[j];
    }
  }
  ops::add((order + 1) * (order + 2) / 2);
  return c;
}

// Both directions run the same recursion
//   c_n = d_n + (1/n) sum_{k=1}^{n-1} k d_k c_{n-k},
// solved for c_n (exp) or for d_n (log). Only nonzero d_k contribute, which
// matters for sparse indicator series.

TruncatedSeries series_log(const TruncatedSeries& c) {
  if (c[0] != 1) throw InvalidInput("series_log: constant term must be 1, got " + c[0].get_str());
  const std::size_t order = c.order();
  TruncatedSeries d(order);
  // weighted[k] = k * d_k
  std::vector<BigRational> weighted(order + 1);
  BigRational acc;
  for (std::size_t n = 1; n <= order; ++n) {
    acc = 0;
    for (std::size_t k = 1; k < n; ++k) {
      if (weighted[k] != 0 && c[n - k] != 0) acc += weighted[k] * c[n - k];
    }
    acc /= static_cast<unsigned long>(n);
    d[n] = c[n] - acc;
    weighted[n] = d[n] * static_cast<unsigned long>(n);
  }
  ops::add(order * (order + 1) / 2);
  return d;
}

TruncatedSeries series_exp(const TruncatedSeries& d) {
  if (d[0] != 0) throw InvalidInput("series_exp: constant term must be 0, got " + d[0].get_str());
  const std::size_t order = d.order();
  TruncatedSeries c = TruncatedSeries::one(order);
  std::vector<BigRational> weighted(order + 1);
  for (std::size_t k = 1; k <= order; ++k) weighted[k] = d[k] * static_cast<unsigned long>(k);
  BigRational acc;
  for (std::size_t n = 1; n <= order; ++n) {
    acc = 0;
    for (std::size_t k = 1; k < n; ++k) {
      if (weighted[k] != 0 && c[n - k] != 0) acc += weighted[k] * c[n - k];
    }
    acc /= static_cast<unsigned long>(n);
    c[n] = d[n] + acc;
  }
  ops::add(order * (order + 1) / 2);
  return c;
}

std::vector<BigRational> log_derivative_coeffs(const TruncatedSeries& c) {
  const TruncatedSeries d = series_log(c);
  std::vector<BigRational> e(c.order());
  for (std::size_t n = 1; n <= c.order(); ++n) e[n - 1] = d[n] * static_cast<unsigned long>(n);
  return e;
}

}  // namespace dcount
