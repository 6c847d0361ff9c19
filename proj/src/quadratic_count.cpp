#include "dcount/quadratic_count.hpp"

namespace dcount {

void QuadraticInstance::validate() const {
  if (coeffs.empty()) throw InvalidInput("quadratic instance needs at least one coefficient");
  for (auto a : coeffs) {
    if (a == 0) throw InvalidInput("quadratic coefficients must be positive");
  }
}

std::int64_t re2_weight(std::uint64_t p, std::uint64_t q) {
  const auto sign = [](std::uint64_t e) -> std::int64_t { return e % 2 == 0 ? 1 : -1; };
  const std::int64_t bracket = -1 + sign(p - 1) + 2 * sign(q - 1) + 2 * sign(p + q);
  return bracket * static_cast<std::int64_t>(p);
}

CountTable count_quadratic_re2(const QuadraticInstance& inst) {
  inst.validate();
  const std::size_t max_n = inst.target_max;
  CountTable table;
  table.values.assign(max_n + 1, 0);
  table.values[0] = 1;
  BigInt sum;
  std::uint64_t steps = 0;
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    sum = 0;
    for (auto a : inst.coeffs) {
      const std::uint64_t reach = n / a;  // p q <= [n / a_l]
      for (std::uint64_t p = 1; p <= reach; ++p) {
        for (std::uint64_t q = 1; p * q <= reach; ++q) {
          const BigInt& prev = table.values[n - a * p * q];
          if (prev == 0) continue;
          const std::int64_t w = re2_weight(p, q) * static_cast<std::int64_t>(a);
          sum += prev * static_cast<long>(w);
          ++steps;
        }
      }
    }
    table.values[n] = exact_div(sum, BigInt(static_cast<unsigned long>(2 * n)), "count_quadratic_re2");
  }
  ops::add(steps);
  return table;
}

TruncatedSeries theta_coeffs(std::uint64_t a, std::size_t order) {
  if (a == 0) throw InvalidInput("theta_coeffs: a must be >= 1");
  TruncatedSeries s = TruncatedSeries::one(order);
  for (std::uint64_t k = 1; a * k * k <= order; ++k) s[a * k * k] = 2;
  return s;
}

CountTable count_quadratic_theta(const QuadraticInstance& inst) {
  inst.validate();
  TruncatedSeries product = TruncatedSeries::one(inst.target_max);
  for (auto a : inst.coeffs) product = series_mul(product, theta_coeffs(a, inst.target_max));
  CountTable table;
  table.values.reserve(inst.target_max + 1);
  for (const auto& c : product.coeffs()) {
    if (c.get_den() != 1) throw InvariantViolation("count_quadratic_theta: non-integral coefficient");
    table.values.emplace_back(c.get_num());
  }
  return table;
}

}  // namespace dcount
