#include "dcount/core.hpp"

#include <string>

namespace dcount {

namespace {

std::atomic<std::uint64_t> g_integrality_checks{0};
std::atomic<std::uint64_t> g_rational_ops{0};

[[noreturn]] void fail_division(const char* where, const std::string& num, const std::string& den) {
  throw InvariantViolation(std::string(where) + ": inexact division " + num + " / " + den);
}

}  // namespace

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InvalidInput("rational with zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

BigRational parse_rational(const std::string& text) {
  BigRational q;
  // mpq's own parser accepts "p/q" and "p" in base 10 and rejects junk.
  if (text.empty() || q.set_str(text, 10) != 0) throw InvalidInput("not a rational: '" + text + "'");
  if (q.get_den() == 0) throw InvalidInput("rational with zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

BigInt exact_div(const BigInt& num, const BigInt& den, const char* where) {
  g_integrality_checks.fetch_add(1, std::memory_order_relaxed);
  if (den == 0 || !mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) fail_division(where, num.get_str(), den.get_str());
  BigInt q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

BigInt exact_div(const BigRational& num, const BigInt& den, const char* where) {
  if (num.get_den() != 1) {
    g_integrality_checks.fetch_add(1, std::memory_order_relaxed);
    fail_division(where, num.get_str(), den.get_str());
  }
  return exact_div(BigInt(num.get_num()), den, where);
}

std::uint64_t integrality_checks() { return g_integrality_checks.load(std::memory_order_relaxed); }

namespace ops {
void add(std::uint64_t count) { g_rational_ops.fetch_add(count, std::memory_order_relaxed); }
std::uint64_t read() { return g_rational_ops.load(std::memory_order_relaxed); }
}  // namespace ops

}  // namespace dcount
