#include <doctest.h>

#include <omp.h>

#include "dcount/kernels.hpp"
#include "test_util.hpp"

using namespace dcount;
using namespace dcount::kernels;

namespace {

struct Threads {
  explicit Threads(int n) : saved(omp_get_max_threads()) { omp_set_num_threads(n); }
  ~Threads() { omp_set_num_threads(saved); }
  int saved;
};

BigInt random_big() {
  BigInt x = static_cast<long>(test::uniform(0, 1'000'000)) - 500'000;
  x <<= static_cast<mp_bitcnt_t>(test::uniform(0, 200));
  return x;
}

}  // namespace

TEST_CASE("lagged_dot: serial and parallel agree exactly") {
  Threads threads(4);
  for (std::size_t n : {0u, 1u, 7u, 600u, 2049u}) {
    std::vector<BigInt> w(n + 1), v(n + 1);
    for (auto& x : w) x = random_big();
    for (auto& x : v) x = random_big();
    CHECK(lagged_dot(w, v, n, Exec::serial) == lagged_dot(w, v, n, Exec::parallel));

    std::vector<BigRational> q(n + 1);
    for (auto& x : q) x = test::random_rational(50, 40);
    CHECK(lagged_dot(std::span<const BigRational>(q), v, n, Exec::serial) ==
          lagged_dot(std::span<const BigRational>(q), v, n, Exec::parallel));
  }
}

TEST_CASE("lagged_dot computes the reversed convolution term") {
  const auto w = test::ints({0, 2, 3, 5});
  const auto v = test::ints({7, 11, 13, 17});
  // m=1..3: 2*v[2] + 3*v[1] + 5*v[0]
  CHECK(lagged_dot(w, v, 3, Exec::serial) == 2 * 13 + 3 * 11 + 5 * 7);
}

TEST_CASE("convolution_recursion: serial and parallel tables agree") {
  Threads threads(3);
  const std::size_t max_n = 700;
  std::vector<BigInt> rho(max_n + 1);
  for (unsigned long a = 1; a <= max_n; ++a) {
    for (std::size_t m = a; m <= max_n; m += a) rho[m] += a;
  }
  const auto serial = convolution_recursion(rho, 1, "test", Exec::serial);
  const auto parallel = convolution_recursion(rho, 1, "test", Exec::parallel);
  CHECK(serial == parallel);
  CHECK(serial[100] == BigInt("190569292"));
}

TEST_CASE("convolution_recursion asserts exact division") {
  // nu(1) = w(1) / 1 = 1, nu(2) = (w(1) nu(1) + w(2)) / 2 = (1 + 2) / 2: inexact.
  const auto w = test::ints({0, 1, 2});
  const auto before = integrality_checks();
  CHECK_THROWS_AS(convolution_recursion(w, 1, "test", Exec::serial), InvariantViolation);
  CHECK(integrality_checks() > before);
}

TEST_CASE("automatic execution stays serial for short loops or one thread") {
  Threads one(1);
  CHECK_FALSE(use_parallel(Exec::automatic, 1'000'000));
  Threads four(4);
  CHECK_FALSE(use_parallel(Exec::automatic, parallel_threshold - 1));
  CHECK(use_parallel(Exec::automatic, parallel_threshold));
  CHECK(use_parallel(Exec::parallel, 1));
  CHECK_FALSE(use_parallel(Exec::serial, 1'000'000));
}
