#include "dcount/bell.hpp"

#include <string>

namespace dcount::bell {

namespace {

// Pascal's triangle up to row max_n - 1, as exact integers.
std::vector<std::vector<BigInt>> binomial_rows(std::size_t max_n) {
  std::vector<std::vector<BigInt>> rows(max_n == 0 ? 1 : max_n);
  for (std::size_t n = 0; n < rows.size(); ++n) {
    rows[n].resize(n + 1);
    rows[n][0] = rows[n][n] = 1;
    for (std::size_t k = 1; k < n; ++k) rows[n][k] = rows[n - 1][k - 1] + rows[n - 1][k];
  }
  return rows;
}

void require_args(std::size_t need, std::size_t have, const char* what) {
  if (have < need) {
    throw InvalidInput(std::string(what) + ": need " + std::to_string(need) + " arguments, got " +
                       std::to_string(have));
  }
}

}  // namespace

PartialTable::PartialTable(std::size_t max_n, Args x) : rows_(max_n + 1) {
  require_args(max_n, x.size(), "bell table");
  for (std::size_t n = 0; n <= max_n; ++n) rows_[n].resize(n + 1);
  rows_[0][0] = 1;
  const auto binom = binomial_rows(max_n);
  std::uint64_t steps = 0;
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      BigRational& out = rows_[n][k];
      for (std::size_t j = 1; j + k <= n + 1; ++j) {
        const BigRational& prev = rows_[n - j][k - 1];
        if (prev == 0 || x[j - 1] == 0) continue;
        out += BigRational(binom[n - 1][j - 1]) * x[j - 1] * prev;
        ++steps;
      }
    }
  }
  ops::add(steps);
}

BigRational PartialTable::complete(std::size_t n) const {
  if (n == 0) return 1;
  BigRational sum;
  for (std::size_t k = 1; k <= n; ++k) sum += rows_[n][k];
  return sum;
}

BigRational partial_bell(std::size_t n, std::size_t k, Args x) {
  if (k > n) throw InvalidInput("partial_bell: k=" + std::to_string(k) + " exceeds n=" + std::to_string(n));
  if (n == 0) return 1;
  if (k == 0) return 0;
  require_args(n - k + 1, x.size(), "partial_bell");
  // B_{m,k'} for m <= n only ever reads x_j with j <= n - k + 1 once k' counts
  // down from k; padding with zeros beyond that changes nothing.
  std::vector<BigRational> padded(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(n - k + 1));
  padded.resize(n);
  return PartialTable(n, padded)(n, k);
}

BigRational complete_bell(std::size_t n, Args x) {
  if (n == 0) return 1;
  require_args(n, x.size(), "complete_bell");
  return PartialTable(n, x.first(n)).complete(n);
}

namespace {

std::vector<BigRational> factorial_scaled(std::size_t n, Args c) {
  std::vector<BigRational> x(n);
  BigInt fact = 1;
  for (std::size_t j = 1; j <= n; ++j) {
    fact *= static_cast<unsigned long>(j);
    x[j - 1] = BigRational(fact) * c[j - 1];
  }
  return x;
}

BigRational log_from_table(const PartialTable& table, std::size_t n) {
  BigRational sum;
  BigInt weight = 1;  // (k-1)!
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) weight *= static_cast<unsigned long>(k - 1);
    const BigRational& b = table(n, k);
    if (b == 0) continue;
    if (k % 2 == 1) {
      sum += BigRational(weight) * b;
    } else {
      sum -= BigRational(weight) * b;
    }
  }
  return sum;
}

}  // namespace

BigRational log_polynomial(std::size_t n, Args c) {
  if (n == 0) throw InvalidInput("log_polynomial: n must be >= 1");
  require_args(n, c.size(), "log_polynomial");
  const auto x = factorial_scaled(n, c);
  return log_from_table(PartialTable(n, x), n);
}

std::vector<BigRational> log_polynomials(std::size_t max_n, Args c) {
  require_args(max_n, c.size(), "log_polynomials");
  std::vector<BigRational> out(max_n);
  if (max_n == 0) return out;
  const auto x = factorial_scaled(max_n, c);
  const PartialTable table(max_n, x);
  for (std::size_t m = 1; m <= max_n; ++m) out[m - 1] = log_from_table(table, m);
  return out;
}

}  // namespace dcount::bell
