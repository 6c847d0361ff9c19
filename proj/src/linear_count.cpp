#include "dcount/linear_count.hpp"

#include <numeric>
#include <string>

namespace dcount {

void LinearInstance::validate() const {
  if (coeffs.empty()) throw InvalidInput("linear instance needs at least one coefficient");
  for (auto a : coeffs) {
    if (a == 0) throw InvalidInput("linear coefficients must be positive");
  }
}

CountTable count_linear_re1(const LinearInstance& inst) {
  inst.validate();
  const std::size_t max_n = inst.target_max;
  const std::size_t r = inst.coeffs.size();
  CountTable table;
  table.values.assign(max_n + 1, 0);
  table.values[0] = 1;
  // tail[l][n] = sum_{i >= 1} nu(n - i a_l) = nu(n - a_l) + tail[l][n - a_l].
  std::vector<std::vector<BigInt>> tail(r, std::vector<BigInt>(max_n + 1));
  BigInt sum;
  for (std::size_t n = 1; n <= max_n; ++n) {
    sum = 0;
    for (std::size_t l = 0; l < r; ++l) {
      const std::uint64_t a = inst.coeffs[l];
      if (a > n) continue;
      tail[l][n] = table.values[n - a] + tail[l][n - a];
      sum += tail[l][n] * static_cast<unsigned long>(a);
    }
    table.values[n] = exact_div(sum, BigInt(static_cast<unsigned long>(n)), "count_linear_re1");
  }
  ops::add(static_cast<std::uint64_t>(max_n) * r);
  return table;
}

std::uint64_t divisor_weight(const LinearInstance& inst, std::uint64_t m) {
  if (m == 0) throw InvalidInput("divisor_weight: m must be >= 1");
  std::uint64_t rho = 0;
  for (auto a : inst.coeffs) {
    if (a != 0 && m % a == 0) rho += a;
  }
  return rho;
}

CountTable count_linear_rho(const LinearInstance& inst, kernels::Exec exec) {
  inst.validate();
  const std::size_t max_n = inst.target_max;
  // Sieve rho(m) over multiples of each coefficient instead of testing every pair.
  std::vector<BigInt> rho(max_n + 1);
  for (auto a : inst.coeffs) {
    for (std::uint64_t m = a; m <= max_n; m += a) rho[m] += static_cast<unsigned long>(a);
  }
  return kernels::convolution_recursion(rho, 1, "count_linear_rho", exec);
}

BigInt count_unit_closed_form(std::uint64_t r, std::uint64_t n) {
  if (r == 0) throw InvalidInput("count_unit_closed_form: r must be >= 1");
  // C(n + r - 1, r - 1) multiplicatively; each partial product is itself a
  // binomial, so every division is exact.
  BigInt result = 1;
  for (std::uint64_t i = 1; i < r; ++i) {
    result *= static_cast<unsigned long>(n + i);
    result = exact_div(result, BigInt(static_cast<unsigned long>(i)), "count_unit_closed_form");
  }
  return result;
}

BigRational asymptotic_coefficient(const LinearInstance& inst) {
  inst.validate();
  std::uint64_t d = 0;
  for (auto a : inst.coeffs) d = std::gcd(d, a);
  if (d > 1) {
    throw InvalidInput("asymptotic_coefficient: coefficients share the divisor " + std::to_string(d) +
                       "; nu(n) vanishes unless d | n and a leading coefficient exists only after "
                       "averaging over n mod d, which is not provided");
  }
  BigInt denom = 1;
  for (std::size_t i = 1; i < inst.coeffs.size(); ++i) denom *= static_cast<unsigned long>(i);
  for (auto a : inst.coeffs) denom *= static_cast<unsigned long>(a);
  return make_rational(1, denom);
}

}  // namespace dcount
