#ifndef DCOUNT_CORE_HPP
#define DCOUNT_CORE_HPP

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace dcount {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Canonical rational num/den. Throws std::invalid_argument on a zero denominator.
BigRational make_rational(const BigInt& num, const BigInt& den);

/// Parses "p/q" or "p" into a canonical rational.
BigRational parse_rational(const std::string& text);

/// Malformed or out-of-domain caller input.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A value the algorithms guarantee (e.g. an exact division) did not hold.
/// Always indicates a bug, never bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An oracle refused to enumerate an instance larger than its guard allows.
class GuardRejected : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact solution counts nu(0..N).
struct CountTable {
  std::vector<BigInt> values;

  std::size_t max_n() const { return values.empty() ? 0 : values.size() - 1; }
  const BigInt& operator[](std::size_t n) const { return values[n]; }
  bool operator==(const CountTable&) const = default;
};

// Integrality sentinel. Every division that the counting recursions claim is
// exact goes through these helpers; a remainder throws InvariantViolation.

BigInt exact_div(const BigInt& num, const BigInt& den, const char* where);
BigInt exact_div(const BigRational& num, const BigInt& den, const char* where);

/// Number of exact-division checks performed since process start.
std::uint64_t integrality_checks();

// Rational-operation counter. Kernels add the number of multiply-accumulate
// steps they perform; callers diff two readings to measure a computation.

namespace ops {
void add(std::uint64_t count);
std::uint64_t read();
}  // namespace ops

}  // namespace dcount

#endif
