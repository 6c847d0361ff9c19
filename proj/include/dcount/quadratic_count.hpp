#ifndef DCOUNT_QUADRATIC_COUNT_HPP
#define DCOUNT_QUADRATIC_COUNT_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dcount/core.hpp"
#include "dcount/series.hpp"

namespace dcount {

/// a_1 k_1^2 + ... + a_r k_r^2 = n over signed k_l, for n = 0..target_max.
struct QuadraticInstance {
  std::vector<std::uint64_t> coeffs;
  std::size_t target_max = 0;

  void validate() const;
};

/// (-1 + (-1)^{p-1} + 2(-1)^{q-1} + 2(-1)^{p+q}) * p:
/// 4p for p, q odd; -4p for p odd, q even; -2p for p even.
std::int64_t re2_weight(std::uint64_t p, std::uint64_t q);

/// nu(n) = (1/2n) sum_l a_l sum_{p,q >= 1, a_l p q <= n} re2_weight(p, q) nu(n - a_l p q).
CountTable count_quadratic_re2(const QuadraticInstance& inst);

/// Theta series sum_{k in Z} z^{a k^2} truncated at order N.
TruncatedSeries theta_coeffs(std::uint64_t a, std::size_t order);

/// Counts by multiplying the per-term theta series directly.
CountTable count_quadratic_theta(const QuadraticInstance& inst);

}  // namespace dcount

#endif
