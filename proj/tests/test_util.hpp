#ifndef DCOUNT_TESTS_TEST_UTIL_HPP
#define DCOUNT_TESTS_TEST_UTIL_HPP

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "dcount/core.hpp"
#include "dcount/series.hpp"
#include "dcount/term_function.hpp"

namespace dcount::test {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5eed'd1c0'7a11ULL);
  return engine;
}

inline std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng());
}

inline BigRational random_rational(long max_abs_num = 9, unsigned long max_den = 9) {
  const long num = std::uniform_int_distribution<long>(-max_abs_num, max_abs_num)(rng());
  const auto den = static_cast<long>(uniform(1, max_den));
  return make_rational(num, den);
}

/// c_0 = 1 and random small rationals elsewhere.
inline TruncatedSeries random_unit_series(std::size_t order) {
  TruncatedSeries s = TruncatedSeries::one(order);
  for (std::size_t k = 1; k <= order; ++k) s[k] = random_rational();
  return s;
}

inline std::vector<std::uint64_t> random_coeffs(std::size_t max_r, std::uint64_t max_a) {
  std::vector<std::uint64_t> a(uniform(1, max_r));
  for (auto& x : a) x = uniform(1, max_a);
  return a;
}

/// Affine a*k or power c*k^e with e in {2, 3}, chosen at random.
inline TermFunction random_term() {
  switch (uniform(0, 2)) {
    case 0:
      return TermFunction::affine(uniform(1, 4));
    case 1:
      return TermFunction::power(uniform(1, 2), 2);
    default:
      return TermFunction::power(1, 3);
  }
}

inline std::vector<BigInt> ints(std::initializer_list<long> values) {
  std::vector<BigInt> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

inline std::vector<BigRational> rats(std::initializer_list<const char*> values) {
  std::vector<BigRational> out;
  for (const char* v : values) out.push_back(parse_rational(v));
  return out;
}

inline std::string describe(const std::vector<std::uint64_t>& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

}  // namespace dcount::test

#endif
