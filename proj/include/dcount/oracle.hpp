#ifndef DCOUNT_ORACLE_HPP
#define DCOUNT_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>

#include "dcount/core.hpp"
#include "dcount/general_count.hpp"
#include "dcount/kernels.hpp"
#include "dcount/linear_count.hpp"
#include "dcount/quadratic_count.hpp"

// Brute-force enumeration oracles. These share no code with the recursions
// they check. Each enumerates the first r-1 variables in nested bounded loops
// and solves for the last one directly.

namespace dcount::oracle {

inline constexpr std::size_t max_terms = 8;
inline constexpr std::uint64_t max_target = 10'000;
inline constexpr std::uint64_t default_work_limit = 50'000'000;

/// Loop-count ceiling for one enumeration: DCOUNT_GUARD_LIMIT if set to a
/// positive integer, else default_work_limit.
std::uint64_t guard_limit();

/// Throws GuardRejected unless r <= max_terms, n <= max_target and the
/// product of the outer loop ranges is at most limit.
void check_guard(std::span<const std::uint64_t> ranges, std::uint64_t n, std::uint64_t limit);

BigInt brute_linear(const LinearInstance& inst, std::uint64_t n,
                    std::optional<std::uint64_t> limit = std::nullopt,
                    kernels::Exec exec = kernels::Exec::automatic);

BigInt brute_quadratic(const QuadraticInstance& inst, std::uint64_t n,
                       std::optional<std::uint64_t> limit = std::nullopt,
                       kernels::Exec exec = kernels::Exec::automatic);

BigInt brute_general(const GeneralInstance& inst, std::uint64_t n,
                     std::optional<std::uint64_t> limit = std::nullopt,
                     kernels::Exec exec = kernels::Exec::automatic);

/// Calls visit(k) for every non-negative solution k of sum a_l k_l = n.
/// Same guard as brute_linear. Serial.
void for_each_linear_solution(const LinearInstance& inst, std::uint64_t n,
                              const std::function<void(std::span<const std::uint64_t>)>& visit,
                              std::optional<std::uint64_t> limit = std::nullopt);

/// p(0..N) from Euler's pentagonal-number recurrence.
CountTable partition_pentagonal(std::size_t max_n);

}  // namespace dcount::oracle

#endif
