#include "dcount/term_function.hpp"

#include <string>

#include "dcount/core.hpp"

namespace dcount {

TermFunction TermFunction::affine(std::uint64_t a) {
  if (a == 0) throw InvalidInput("affine term needs a positive coefficient");
  return TermFunction(Kind::affine, a, 1, {});
}

TermFunction TermFunction::power(std::uint64_t c, std::uint32_t e) {
  if (c == 0) throw InvalidInput("power term needs a positive coefficient");
  if (e == 0) throw InvalidInput("power term needs an exponent >= 1");
  if (e == 1) return affine(c);
  return TermFunction(Kind::power, c, e, {});
}

TermFunction TermFunction::table(std::vector<std::uint64_t> values) {
  std::uint64_t prev = 0;
  for (auto v : values) {
    if (v <= prev) throw InvalidInput("table term must be strictly increasing with g(1) > 0");
    prev = v;
  }
  return TermFunction(Kind::table, 0, 0, std::move(values));
}

std::optional<std::uint64_t> TermFunction::eval(std::uint64_t k, std::uint64_t bound) const {
  if (k == 0) return 0;
  switch (kind_) {
    case Kind::affine:
      if (k > bound / coeff_) return std::nullopt;
      return coeff_ * k;
    case Kind::power: {
      // c k^e <= bound  <=>  each partial product stays <= bound / k.
      std::uint64_t v = coeff_;
      if (v > bound) return std::nullopt;
      for (std::uint32_t i = 0; i < exponent_; ++i) {
        if (v > bound / k) return std::nullopt;
        v *= k;
      }
      return v;
    }
    case Kind::table:
      if (k > values_.size() || values_[k - 1] > bound) return std::nullopt;
      return values_[k - 1];
  }
  return std::nullopt;
}

std::vector<std::uint64_t> TermFunction::image(std::uint64_t bound) const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 1;; ++m) {
    const auto v = eval(m, bound);
    if (!v) break;
    out.push_back(*v);
  }
  return out;
}

std::uint64_t TermFunction::max_arg(std::uint64_t bound) const {
  std::uint64_t k = 0;
  while (eval(k + 1, bound)) ++k;
  return k;
}

std::string TermFunction::to_string() const {
  switch (kind_) {
    case Kind::affine:
      return coeff_ == 1 ? "k" : std::to_string(coeff_) + "*k";
    case Kind::power:
      return (coeff_ == 1 ? std::string() : std::to_string(coeff_) + "*") + "k^" + std::to_string(exponent_);
    case Kind::table: {
      std::string s = "table[";
      for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(values_[i]);
      }
      return s + "]";
    }
  }
  return {};
}

}  // namespace dcount
