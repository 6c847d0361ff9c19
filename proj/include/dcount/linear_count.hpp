#ifndef DCOUNT_LINEAR_COUNT_HPP
#define DCOUNT_LINEAR_COUNT_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dcount/core.hpp"
#include "dcount/kernels.hpp"

namespace dcount {

/// a_1 k_1 + ... + a_r k_r = n over k_l >= 0, for n = 0..target_max.
/// Repeated coefficients are allowed and order does not matter.
struct LinearInstance {
  std::vector<std::uint64_t> coeffs;
  std::size_t target_max = 0;

  /// Throws InvalidInput if empty or any coefficient is zero.
  void validate() const;
};

/// nu(n) = (1/n) sum_l a_l sum_{i=1}^{n/a_l} nu(n - i a_l).
/// The inner sum over i is carried as a running sum per coefficient, so the
/// table costs O(r N) big-integer additions.
CountTable count_linear_re1(const LinearInstance& inst);

/// Sum of the coefficients that divide m (m >= 1).
std::uint64_t divisor_weight(const LinearInstance& inst, std::uint64_t m);

/// nu(n) = (1/n) sum_{m=1}^n rho(m) nu(n - m). Same table as count_linear_re1.
CountTable count_linear_rho(const LinearInstance& inst, kernels::Exec exec = kernels::Exec::automatic);

/// Binomial (n + r - 1 choose r - 1): the count for r unit coefficients.
BigInt count_unit_closed_form(std::uint64_t r, std::uint64_t n);

/// Leading coefficient C_r of nu(n) ~ C_r n^{r-1}, i.e. 1 / ((r-1)! prod a_l).
/// Throws InvalidInput when the coefficients share a divisor d > 1: the
/// counts then vanish off multiples of d and only a residue-averaged
/// coefficient exists.
BigRational asymptotic_coefficient(const LinearInstance& inst);

}  // namespace dcount

#endif
