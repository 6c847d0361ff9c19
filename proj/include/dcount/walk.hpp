#ifndef DCOUNT_WALK_HPP
#define DCOUNT_WALK_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dcount/core.hpp"

namespace dcount {

/// Forward lattice walk: step l displaces by a_l times a Poisson(alpha) count.
struct WalkSpec {
  BigRational alpha;
  std::vector<std::uint64_t> coeffs;

  /// Throws InvalidInput unless alpha > 0, r >= 1 and every a_l >= 1.
  void validate() const;
};

/// Weights W(0..N) with P(displacement = n) = W(n) * exp(-alpha * r).
/// W(0) = 1.
struct ScaledDistribution {
  std::vector<BigRational> weights;
  bool operator==(const ScaledDistribution&) const = default;
};

/// W(n) = (alpha / n) sum_l a_l W(n - a_l).
ScaledDistribution walk_distribution(const WalkSpec& spec, std::size_t max_n);

/// exp(alpha * sum_l z^{a_l}) expanded with series_exp.
ScaledDistribution walk_convolution_oracle(const WalkSpec& spec, std::size_t max_n);

}  // namespace dcount

#endif
