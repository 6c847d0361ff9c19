#include <doctest.h>

#include "dcount/bell.hpp"
#include "dcount/series.hpp"
#include "test_util.hpp"

using namespace dcount;
using dcount::test::rats;

namespace {

TruncatedSeries ones(std::size_t order) {
  return TruncatedSeries(std::vector<BigRational>(order + 1, BigRational(1)));
}

TruncatedSeries exp_z(std::size_t order) {
  std::vector<BigRational> c(order + 1);
  BigInt fact = 1;
  for (std::size_t k = 0; k <= order; ++k) {
    if (k) fact *= static_cast<unsigned long>(k);
    c[k] = make_rational(1, fact);
  }
  return TruncatedSeries(c);
}

}  // namespace

TEST_CASE("series_mul examples") {
  const TruncatedSeries one_plus_z(rats({"1", "1", "0"}));
  CHECK(series_mul(one_plus_z, one_plus_z) == TruncatedSeries(rats({"1", "2", "1"})));

  // 1/(1-z) * 1/(1-z^2): counts of k1 + 2 k2 = n, enumerated by hand.
  const TruncatedSeries evens(rats({"1", "0", "1", "0", "1"}));
  CHECK(series_mul(ones(4), evens) == TruncatedSeries(rats({"1", "1", "2", "2", "3"})));

  const auto a = test::random_unit_series(6);
  CHECK(series_mul(a, TruncatedSeries::one(6)) == a);
}

TEST_CASE("series_mul rejects mismatched orders") {
  CHECK_THROWS_AS(series_mul(ones(3), ones(4)), InvalidInput);
}

TEST_CASE("series_log examples") {
  SUBCASE("geometric series gives 1/k") {
    const auto d = series_log(ones(8));
    CHECK(d[0] == 0);
    for (unsigned long k = 1; k <= 8; ++k) CHECK(d[k] == make_rational(1, k));
  }
  SUBCASE("log 1 = 0") { CHECK(series_log(TruncatedSeries::one(5)) == TruncatedSeries(5)); }
  SUBCASE("log exp(z) = z") {
    CHECK(series_log(exp_z(4)) == TruncatedSeries(rats({"0", "1", "0", "0", "0"})));
  }
  SUBCASE("log(1 + z + 3z^2), coefficients from a symbolic Taylor expansion") {
    const TruncatedSeries c(rats({"1", "1", "3", "0", "0", "0"}));
    CHECK(series_log(c) == TruncatedSeries(rats({"0", "1", "5/2", "-8/3", "-7/4", "31/5"})));
  }
}

TEST_CASE("series_log requires unit constant term") {
  CHECK_THROWS_AS(series_log(TruncatedSeries(rats({"2", "1"}))), InvalidInput);
  CHECK_THROWS_AS(log_derivative_coeffs(TruncatedSeries(rats({"0", "1"}))), InvalidInput);
}

TEST_CASE("series_exp examples") {
  CHECK(series_exp(TruncatedSeries(rats({"0", "1", "0", "0", "0"}))) ==
        TruncatedSeries(rats({"1", "1", "1/2", "1/6", "1/24"})));
  CHECK(series_exp(TruncatedSeries(6)) == TruncatedSeries::one(6));
  TruncatedSeries harmonic(7);
  for (unsigned long k = 1; k <= 7; ++k) harmonic[k] = make_rational(1, k);
  CHECK(series_exp(harmonic) == ones(7));
  CHECK_THROWS_AS(series_exp(TruncatedSeries(rats({"1", "0"}))), InvalidInput);
}

TEST_CASE("log_derivative_coeffs examples") {
  for (const auto& e : log_derivative_coeffs(ones(9))) CHECK(e == 1);
  for (const auto& e : log_derivative_coeffs(TruncatedSeries::one(5))) CHECK(e == 0);
  const auto e = log_derivative_coeffs(exp_z(6));
  REQUIRE(e.size() == 6);
  CHECK(e[0] == 1);
  for (std::size_t i = 1; i < e.size(); ++i) CHECK(e[i] == 0);
}

TEST_CASE("property: exp(log(c)) == c for random series up to order 64") {
  for (std::size_t order : {0u, 1u, 2u, 5u, 13u, 32u, 64u}) {
    for (int trial = 0; trial < 3; ++trial) {
      const auto c = test::random_unit_series(order);
      CHECK(series_exp(series_log(c)) == c);
    }
  }
}

TEST_CASE("property: log is a homomorphism from products to sums") {
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t order = test::uniform(1, 16);
    const auto a = test::random_unit_series(order);
    const auto b = test::random_unit_series(order);
    CHECK(series_log(series_mul(a, b)) == series_log(a) + series_log(b));
  }
}

TEST_CASE("property: n! d_n equals the logarithmic polynomial K_n") {
  for (int trial = 0; trial < 30; ++trial) {
    const auto c = test::random_unit_series(12);
    const auto d = series_log(c);
    const std::span<const BigRational> args(c.coeffs().data() + 1, 12);
    BigInt fact = 1;
    for (std::size_t n = 1; n <= 12; ++n) {
      fact *= static_cast<unsigned long>(n);
      CHECK(BigRational(fact) * d[n] == bell::log_polynomial(n, args));
    }
  }
}

TEST_CASE("property: series_mul is commutative and associative") {
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t order = test::uniform(0, 12);
    const auto a = test::random_unit_series(order);
    const auto b = test::random_unit_series(order);
    const auto c = test::random_unit_series(order);
    CHECK(series_mul(a, b) == series_mul(b, a));
    CHECK(series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c)));
  }
}

TEST_CASE("coefficients stay canonical") {
  const TruncatedSeries s(std::vector<BigRational>{BigRational(2, 4), BigRational(-6, 3)});
  CHECK(s[0].get_num() == 1);
  CHECK(s[0].get_den() == 2);
  CHECK(s[1] == -2);
}
