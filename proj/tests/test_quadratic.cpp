#include <doctest.h>

#include "dcount/oracle.hpp"
#include "dcount/quadratic_count.hpp"
#include "test_util.hpp"

using namespace dcount;

TEST_CASE("re2_weight matches the parity bracket") {
  CHECK(re2_weight(1, 1) == 4);
  CHECK(re2_weight(1, 2) == -4);
  CHECK(re2_weight(2, 1) == -4);
  CHECK(re2_weight(2, 2) == -4);
  const auto pm = [](std::uint64_t e) { return e % 2 == 0 ? 1 : -1; };
  for (std::uint64_t p = 1; p <= 12; ++p) {
    for (std::uint64_t q = 1; q <= 12; ++q) {
      const std::int64_t bracket = -1 + pm(p - 1) + 2 * pm(q - 1) + 2 * pm(p + q);
      CHECK(re2_weight(p, q) == bracket * static_cast<std::int64_t>(p));
      const std::int64_t closed = p % 2 == 0 ? -2 * static_cast<std::int64_t>(p)
                                  : q % 2 == 1 ? 4 * static_cast<std::int64_t>(p)
                                               : -4 * static_cast<std::int64_t>(p);
      CHECK(re2_weight(p, q) == closed);
    }
  }
}

TEST_CASE("count_quadratic_re2 examples") {
  // r_2(9) = 4: only (+-3, 0) and (0, +-3).
  CHECK(count_quadratic_re2({{1, 1}, 9}).values == test::ints({1, 4, 4, 0, 4, 8, 0, 0, 4, 4}));
  CHECK(count_quadratic_re2({{1, 1, 1}, 10}).values == test::ints({1, 6, 12, 8, 6, 24, 24, 0, 12, 30, 24}));
  CHECK(count_quadratic_re2({{2, 3}, 5})[5] == 4);
  // Brute-forced in an independent script.
  CHECK(count_quadratic_re2({{2, 3}, 12}).values == test::ints({1, 0, 2, 2, 0, 4, 0, 0, 2, 0, 0, 4, 2}));
  CHECK(count_quadratic_re2({{1, 2, 3}, 12}).values == test::ints({1, 2, 2, 6, 6, 4, 12, 4, 2, 14, 0, 8, 18}));
  CHECK_THROWS_AS(count_quadratic_re2({{0}, 4}), InvalidInput);
}

TEST_CASE("theta_coeffs examples") {
  CHECK(theta_coeffs(1, 5) == TruncatedSeries(test::rats({"1", "2", "0", "0", "2", "0"})));
  CHECK(theta_coeffs(3, 4) == TruncatedSeries(test::rats({"1", "0", "0", "2", "0"})));
  CHECK(theta_coeffs(2, 0) == TruncatedSeries::one(0));
  const auto product = series_mul(theta_coeffs(1, 30), theta_coeffs(1, 30));
  const auto re2 = count_quadratic_re2({{1, 1}, 30});
  for (std::size_t n = 0; n <= 30; ++n) CHECK(product[n] == BigRational(re2[n]));
}

TEST_CASE("property: RE2 equals signed brute force and the theta product on 100 random instances") {
  for (int trial = 0; trial < 100; ++trial) {
    const QuadraticInstance inst{test::random_coeffs(4, 6), test::uniform(0, 200)};
    CAPTURE(test::describe(inst.coeffs));
    const auto table = count_quadratic_re2(inst);
    CHECK(count_quadratic_theta(inst) == table);
    for (std::size_t n = 0; n <= inst.target_max; ++n) {
      CAPTURE(n);
      CHECK(table[n] == oracle::brute_quadratic(inst, n));
    }
  }
}

TEST_CASE("sum of two squares vanishes at n = 3 mod 4") {
  const std::size_t max_n = 400;
  const auto table = count_quadratic_re2({{1, 1}, max_n});
  for (std::size_t n = 3; n <= max_n; n += 4) {
    CHECK(oracle::brute_quadratic({{1, 1}, max_n}, n) == 0);
    CHECK(table[n] == 0);
  }
}

TEST_CASE("property: counts are even for n >= 1") {
  for (int trial = 0; trial < 30; ++trial) {
    const auto table = count_quadratic_re2({test::random_coeffs(5, 7), 150});
    for (std::size_t n = 1; n <= 150; ++n) CHECK(mpz_even_p(table[n].get_mpz_t()));
  }
}
