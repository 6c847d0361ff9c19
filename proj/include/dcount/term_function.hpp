#ifndef DCOUNT_TERM_FUNCTION_HPP
#define DCOUNT_TERM_FUNCTION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dcount {

/// A strictly increasing term g with g(0) = 0 and non-negative integer values.
///
/// Three shapes: affine a*k, power c*k^e (e >= 2), or an explicit table
/// g(1) < g(2) < ... < g(m). A table term is defined on 0..m only.
class TermFunction {
 public:
  enum class Kind { affine, power, table };

  static TermFunction affine(std::uint64_t a);
  static TermFunction power(std::uint64_t c, std::uint32_t e);
  /// Throws InvalidInput unless values are strictly increasing and positive.
  static TermFunction table(std::vector<std::uint64_t> values);

  Kind kind() const { return kind_; }
  std::uint64_t coeff() const { return coeff_; }
  std::uint32_t exponent() const { return exponent_; }
  const std::vector<std::uint64_t>& values() const { return values_; }

  /// g(k) if it is defined and does not exceed bound, else nullopt.
  /// Never overflows: large k short-circuit against the bound.
  std::optional<std::uint64_t> eval(std::uint64_t k, std::uint64_t bound) const;

  /// The image {g(1), g(2), ...} intersected with [1, bound], ascending.
  std::vector<std::uint64_t> image(std::uint64_t bound) const;

  /// Largest k with g(k) <= bound (always >= 0 since g(0) = 0).
  std::uint64_t max_arg(std::uint64_t bound) const;

  /// Surface form: "k", "3*k", "k^3", "2*k^3", or "table[1,4,9]".
  std::string to_string() const;

  bool operator==(const TermFunction&) const = default;

 private:
  TermFunction(Kind kind, std::uint64_t coeff, std::uint32_t exponent, std::vector<std::uint64_t> values)
      : kind_(kind), coeff_(coeff), exponent_(exponent), values_(std::move(values)) {}

  Kind kind_;
  std::uint64_t coeff_;
  std::uint32_t exponent_;
  std::vector<std::uint64_t> values_;
};

}  // namespace dcount

#endif
