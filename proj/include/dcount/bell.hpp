#ifndef DCOUNT_BELL_HPP
#define DCOUNT_BELL_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "dcount/core.hpp"

namespace dcount::bell {

/// Arguments x_1..x_m. Stored 0-based: x[0] is x_1.
using Args = std::span<const BigRational>;

/// Table of partial Bell polynomials B_{n,k}(x) for 0 <= k <= n <= max_n,
/// built once from the binomial recurrence
///   B_{n,k} = sum_{j=1}^{n-k+1} C(n-1, j-1) x_j B_{n-j,k-1}.
class PartialTable {
 public:
  /// Requires x.size() >= max_n (enough arguments for every B_{n,1}).
  PartialTable(std::size_t max_n, Args x);

  std::size_t max_n() const { return rows_.size() - 1; }
  const BigRational& operator()(std::size_t n, std::size_t k) const { return rows_[n][k]; }

  /// Complete Bell polynomial B_n = sum_k B_{n,k}; B_0 = 1.
  BigRational complete(std::size_t n) const;

 private:
  std::vector<std::vector<BigRational>> rows_;
};

/// B_{n,k}(x_1..x_{n-k+1}). Throws InvalidInput if k > n or too few arguments.
BigRational partial_bell(std::size_t n, std::size_t k, Args x);

/// B_n(x_1..x_n). Throws InvalidInput if x.size() < n.
BigRational complete_bell(std::size_t n, Args x);

/// Logarithmic polynomial
///   K_n(c_1..c_n) = sum_{k=1}^n (-1)^{k-1} (k-1)! B_{n,k}(1! c_1, 2! c_2, ...).
/// Takes the raw c_j; the factorial scaling is applied here.
BigRational log_polynomial(std::size_t n, Args c);

/// K_1..K_max_n for the same coefficient vector, sharing one Bell table.
/// Result is 0-based: result[m-1] = K_m.
std::vector<BigRational> log_polynomials(std::size_t max_n, Args c);

}  // namespace dcount::bell

#endif
