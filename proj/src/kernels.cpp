#include "dcount/kernels.hpp"

#include <string>
#include <vector>

#include <omp.h>

namespace dcount::kernels {

bool use_parallel(Exec exec, std::size_t terms) {
  switch (exec) {
    case Exec::serial:
      return false;
    case Exec::parallel:
      return true;
    case Exec::automatic:
      return terms >= parallel_threshold && omp_get_max_threads() > 1;
  }
  return false;
}

namespace {

template <typename Acc, typename Weight>
Acc lagged_dot_serial(std::span<const Weight> weights, std::span<const BigInt> values, std::size_t n) {
  Acc acc = 0;
  for (std::size_t m = 1; m <= n; ++m) {
    if (weights[m] != 0 && values[n - m] != 0) acc += weights[m] * values[n - m];
  }
  return acc;
}

// Each thread accumulates a private partial sum over a static block of m;
// partials are combined in thread order so the result never depends on
// scheduling (it is exact anyway, but the op sequence stays reproducible).
template <typename Acc, typename Weight>
Acc lagged_dot_parallel(std::span<const Weight> weights, std::span<const BigInt> values, std::size_t n) {
  std::vector<Acc> partial(static_cast<std::size_t>(omp_get_max_threads()));
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel
  {
    Acc local = 0;
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 1; i <= count; ++i) {
      const auto m = static_cast<std::size_t>(i);
      if (weights[m] != 0 && values[n - m] != 0) local += weights[m] * values[n - m];
    }
    partial[static_cast<std::size_t>(omp_get_thread_num())] = std::move(local);
  }
  Acc acc = 0;
  for (const auto& p : partial) acc += p;
  return acc;
}

}  // namespace

BigInt lagged_dot(std::span<const BigInt> weights, std::span<const BigInt> values, std::size_t n, Exec exec) {
  ops::add(n);
  return use_parallel(exec, n) ? lagged_dot_parallel<BigInt>(weights, values, n)
                               : lagged_dot_serial<BigInt>(weights, values, n);
}

BigRational lagged_dot(std::span<const BigRational> weights, std::span<const BigInt> values, std::size_t n,
                       Exec exec) {
  ops::add(n);
  if (use_parallel(exec, n)) return lagged_dot_parallel<BigRational>(weights, values, n);
  return lagged_dot_serial<BigRational>(weights, values, n);
}

CountTable convolution_recursion(std::span<const BigInt> weights, long scale, const char* where, Exec exec) {
  if (weights.empty()) throw InvalidInput(std::string(where) + ": empty weight table");
  if (scale <= 0) throw InvalidInput(std::string(where) + ": scale must be positive");
  const std::size_t max_n = weights.size() - 1;
  CountTable table;
  table.values.resize(max_n + 1);
  table.values[0] = 1;
  const std::span<const BigInt> values(table.values);
  for (std::size_t n = 1; n <= max_n; ++n) {
    const BigInt sum = lagged_dot(weights, values, n, exec);
    table.values[n] = exact_div(sum, BigInt(scale) * static_cast<unsigned long>(n), where);
  }
  return table;
}

}  // namespace dcount::kernels
