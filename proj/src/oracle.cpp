#include "dcount/oracle.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <string>
#include <vector>

namespace dcount::oracle {

std::uint64_t guard_limit() {
  const char* env = std::getenv("DCOUNT_GUARD_LIMIT");
  if (env == nullptr || *env == '\0') return default_work_limit;
  std::uint64_t value = 0;
  const char* end = env + std::char_traits<char>::length(env);
  const auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc() || ptr != end || value == 0) {
    throw InvalidInput(std::string("DCOUNT_GUARD_LIMIT must be a positive integer, got '") + env + "'");
  }
  return value;
}

void check_guard(std::span<const std::uint64_t> ranges, std::uint64_t n, std::uint64_t limit) {
  if (ranges.size() > max_terms) {
    throw GuardRejected("oracle: " + std::to_string(ranges.size()) + " terms exceeds the limit of " +
                        std::to_string(max_terms));
  }
  if (n > max_target) {
    throw GuardRejected("oracle: n=" + std::to_string(n) + " exceeds the limit of " + std::to_string(max_target));
  }
  // The last variable is solved directly, so only the outer loops count.
  std::uint64_t work = 1;
  for (std::size_t i = 0; i + 1 < ranges.size(); ++i) {
    if (work > limit / ranges[i]) {
      throw GuardRejected("oracle: enumeration exceeds the work limit of " + std::to_string(limit) +
                          " (set DCOUNT_GUARD_LIMIT to raise it)");
    }
    work *= ranges[i];
  }
}

namespace {

// Nested-loop enumerator over per-variable value lists. values[l] holds the
// admissible contributions of variable l in ascending order; the last
// variable is matched against the remainder. Each entry in a list may stand
// for several k (signed quadratic terms), carried in multiplicity[l].
struct Enumerator {
  std::vector<std::vector<std::uint64_t>> values;
  std::vector<std::vector<std::uint64_t>> multiplicity;

  std::uint64_t count_from(std::size_t depth, std::uint64_t remainder) const {
    const auto& vals = values[depth];
    const auto& mult = multiplicity[depth];
    if (depth + 1 == values.size()) {
      const auto it = std::lower_bound(vals.begin(), vals.end(), remainder);
      if (it == vals.end() || *it != remainder) return 0;
      return mult[static_cast<std::size_t>(it - vals.begin())];
    }
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < vals.size() && vals[i] <= remainder; ++i) {
      total += mult[i] * count_from(depth + 1, remainder - vals[i]);
    }
    return total;
  }

  BigInt count(std::uint64_t n, kernels::Exec exec) const {
    const auto& first = values.front();
    if (values.size() == 1 || !kernels::use_parallel(exec, first.size())) {
      return BigInt(static_cast<unsigned long>(count_from(0, n)));
    }
    const auto width = static_cast<std::ptrdiff_t>(first.size());
    std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
    for (std::ptrdiff_t i = 0; i < width; ++i) {
      const auto v = first[static_cast<std::size_t>(i)];
      if (v <= n) total += multiplicity.front()[static_cast<std::size_t>(i)] * count_from(1, n - v);
    }
    return BigInt(static_cast<unsigned long>(total));
  }

  std::vector<std::uint64_t> ranges() const {
    std::vector<std::uint64_t> out;
    for (const auto& v : values) out.push_back(v.size());
    return out;
  }
};

}  // namespace

BigInt brute_linear(const LinearInstance& inst, std::uint64_t n, std::optional<std::uint64_t> limit,
                    kernels::Exec exec) {
  inst.validate();
  Enumerator e;
  for (auto a : inst.coeffs) {
    std::vector<std::uint64_t> vals;
    for (std::uint64_t k = 0; k <= n / a; ++k) vals.push_back(a * k);
    e.multiplicity.emplace_back(vals.size(), 1);
    e.values.push_back(std::move(vals));
  }
  check_guard(e.ranges(), n, limit.value_or(guard_limit()));
  return e.count(n, exec);
}

BigInt brute_quadratic(const QuadraticInstance& inst, std::uint64_t n, std::optional<std::uint64_t> limit,
                       kernels::Exec exec) {
  inst.validate();
  Enumerator e;
  for (auto a : inst.coeffs) {
    // a k^2 for k >= 0; k and -k give the same value, so k > 0 counts twice.
    std::vector<std::uint64_t> vals;
    std::vector<std::uint64_t> mult;
    for (std::uint64_t k = 0; a * k * k <= n; ++k) {
      vals.push_back(a * k * k);
      mult.push_back(k == 0 ? 1 : 2);
    }
    e.values.push_back(std::move(vals));
    e.multiplicity.push_back(std::move(mult));
  }
  // Signed ranges: |k| <= sqrt(n / a).
  std::vector<std::uint64_t> ranges;
  for (const auto& v : e.values) ranges.push_back(2 * v.size() - 1);
  check_guard(ranges, n, limit.value_or(guard_limit()));
  return e.count(n, exec);
}

BigInt brute_general(const GeneralInstance& inst, std::uint64_t n, std::optional<std::uint64_t> limit,
                     kernels::Exec exec) {
  inst.validate();
  Enumerator e;
  for (const auto& g : inst.terms) {
    std::vector<std::uint64_t> vals;
    for (std::uint64_t k = 0;; ++k) {
      const auto v = g.eval(k, n);
      if (!v) break;
      vals.push_back(*v);
    }
    e.multiplicity.emplace_back(vals.size(), 1);
    e.values.push_back(std::move(vals));
  }
  check_guard(e.ranges(), n, limit.value_or(guard_limit()));
  return e.count(n, exec);
}

void for_each_linear_solution(const LinearInstance& inst, std::uint64_t n,
                              const std::function<void(std::span<const std::uint64_t>)>& visit,
                              std::optional<std::uint64_t> limit) {
  inst.validate();
  std::vector<std::uint64_t> ranges;
  for (auto a : inst.coeffs) ranges.push_back(n / a + 1);
  check_guard(ranges, n, limit.value_or(guard_limit()));
  std::vector<std::uint64_t> k(inst.coeffs.size());
  const std::size_t last = inst.coeffs.size() - 1;
  auto recurse = [&](auto&& self, std::size_t depth, std::uint64_t remainder) -> void {
    const std::uint64_t a = inst.coeffs[depth];
    if (depth == last) {
      if (remainder % a == 0) {
        k[depth] = remainder / a;
        visit(k);
      }
      return;
    }
    for (std::uint64_t x = 0; x * a <= remainder; ++x) {
      k[depth] = x;
      self(self, depth + 1, remainder - x * a);
    }
  };
  recurse(recurse, 0, n);
}

CountTable partition_pentagonal(std::size_t max_n) {
  CountTable p;
  p.values.assign(max_n + 1, 0);
  p.values[0] = 1;
  for (std::size_t n = 1; n <= max_n; ++n) {
    BigInt sum = 0;
    for (std::size_t j = 1;; ++j) {
      const std::size_t g1 = j * (3 * j - 1) / 2;
      if (g1 > n) break;
      const std::size_t g2 = j * (3 * j + 1) / 2;
      BigInt term = p.values[n - g1];
      if (g2 <= n) term += p.values[n - g2];
      if (j % 2 == 1) {
        sum += term;
      } else {
        sum -= term;
      }
    }
    p.values[n] = sum;
  }
  return p;
}

}  // namespace dcount::oracle
