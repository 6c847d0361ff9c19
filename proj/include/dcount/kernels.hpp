#ifndef DCOUNT_KERNELS_HPP
#define DCOUNT_KERNELS_HPP

#include <cstddef>
#include <span>

#include "dcount/core.hpp"

// Inner loops shared by the counting recursions. Each kernel has a serial
// reference and an OpenMP version; tests hold the two to exact equality and
// bench/ compares their speed.

namespace dcount::kernels {

enum class Exec {
  serial,
  parallel,
  /// Parallel when more than one OpenMP thread is available and the loop is
  /// long enough to amortize the region; otherwise serial.
  automatic,
};

/// Below this many terms `automatic` stays serial.
inline constexpr std::size_t parallel_threshold = 512;

bool use_parallel(Exec exec, std::size_t terms);

/// sum_{m=1}^{n} weights[m] * values[n-m]. Requires weights.size() > n and values.size() >= n.
BigInt lagged_dot(std::span<const BigInt> weights, std::span<const BigInt> values, std::size_t n,
                  Exec exec = Exec::automatic);
BigRational lagged_dot(std::span<const BigRational> weights, std::span<const BigInt> values,
                       std::size_t n, Exec exec = Exec::automatic);

/// Fills nu(0..N) from nu(0) = 1 and
///   nu(n) = (1 / (scale * n)) * sum_{m=1}^{n} weights[m] * nu(n - m),
/// asserting every division is exact. N = weights.size() - 1.
CountTable convolution_recursion(std::span<const BigInt> weights, long scale, const char* where,
                                 Exec exec = Exec::automatic);

}  // namespace dcount::kernels

#endif
