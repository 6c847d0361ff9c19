#include "dcount/general_count.hpp"

#include <algorithm>
#include <bit>

#include "dcount/bell.hpp"

namespace dcount {

void GeneralInstance::validate() const {
  if (terms.empty()) throw InvalidInput("general instance needs at least one term");
}

TruncatedSeries indicator_coeffs(const TermFunction& g, std::size_t order) {
  TruncatedSeries c = TruncatedSeries::one(order);
  for (auto k : g.image(order)) c[k] = 1;
  return c;
}

CountTable count_general_re3(const GeneralInstance& inst) {
  inst.validate();
  const std::size_t max_n = inst.target_max;
  // weights[m] = sum_l K_m(c_l1..c_lm) / (m-1)!
  std::vector<BigRational> weights(max_n + 1);
  for (const auto& g : inst.terms) {
    const TruncatedSeries c = indicator_coeffs(g, max_n);
    const std::span<const BigRational> args(c.coeffs().data() + 1, max_n);
    const auto k = bell::log_polynomials(max_n, args);
    BigInt fact = 1;
    for (std::size_t m = 1; m <= max_n; ++m) {
      if (m > 1) fact *= static_cast<unsigned long>(m - 1);
      weights[m] += k[m - 1] / BigRational(fact);
    }
  }
  CountTable table;
  table.values.assign(max_n + 1, 0);
  table.values[0] = 1;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const BigRational sum =
        kernels::lagged_dot(std::span<const BigRational>(weights), table.values, n, kernels::Exec::serial);
    table.values[n] = exact_div(sum, BigInt(static_cast<unsigned long>(n)), "count_general_re3");
  }
  return table;
}

TruncatedSeries general_log_coeffs(const GeneralInstance& inst, kernels::Exec exec) {
  inst.validate();
  const std::size_t max_n = inst.target_max;
  const auto r = static_cast<std::ptrdiff_t>(inst.terms.size());
  std::vector<TruncatedSeries> logs(inst.terms.size(), TruncatedSeries(max_n));
  // Per-term logs are independent.
#pragma omp parallel for schedule(dynamic) if (r > 1 && kernels::use_parallel(exec, max_n))
  for (std::ptrdiff_t l = 0; l < r; ++l) {
    const auto i = static_cast<std::size_t>(l);
    logs[i] = series_log(indicator_coeffs(inst.terms[i], max_n));
  }
  TruncatedSeries d(max_n);
  for (const auto& s : logs) d += s;
  return d;
}

CountTable count_general_c5(const GeneralInstance& inst, kernels::Exec exec) {
  const TruncatedSeries d = general_log_coeffs(inst, exec);
  const std::size_t max_n = inst.target_max;
  // k d_k are the coefficients of phi'/phi; for 0/1 series with c_0 = 1 they
  // are integers, which lets the table use the integer kernel.
  std::vector<BigRational> weighted(max_n + 1);
  bool integral = true;
  for (std::size_t k = 1; k <= max_n; ++k) {
    weighted[k] = d[k] * static_cast<unsigned long>(k);
    integral = integral && weighted[k].get_den() == 1;
  }
  if (integral) {
    std::vector<BigInt> w(max_n + 1);
    for (std::size_t k = 1; k <= max_n; ++k) w[k] = weighted[k].get_num();
    return kernels::convolution_recursion(w, 1, "count_general_c5", exec);
  }
  CountTable table;
  table.values.assign(max_n + 1, 0);
  table.values[0] = 1;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const BigRational sum = kernels::lagged_dot(std::span<const BigRational>(weighted), table.values, n, exec);
    table.values[n] = exact_div(sum, BigInt(static_cast<unsigned long>(n)), "count_general_c5");
  }
  return table;
}

namespace {

std::vector<BigRational> factorial_scaled_logs(const TruncatedSeries& d, std::size_t n) {
  std::vector<BigRational> x(n);
  BigInt fact = 1;
  for (std::size_t j = 1; j <= n; ++j) {
    fact *= static_cast<unsigned long>(j);
    x[j - 1] = BigRational(fact) * d[j];
  }
  return x;
}

BigInt factorial(std::size_t n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

}  // namespace

BigInt count_general_bell(const GeneralInstance& inst, std::size_t n) {
  inst.validate();
  if (n > inst.target_max) throw InvalidInput("count_general_bell: n exceeds target_max");
  if (n == 0) return 1;
  GeneralInstance truncated{inst.terms, n};
  const TruncatedSeries d = general_log_coeffs(truncated, kernels::Exec::serial);
  const auto x = factorial_scaled_logs(d, n);
  return exact_div(bell::complete_bell(n, x), factorial(n), "count_general_bell");
}

CountTable count_general_bell_table(const GeneralInstance& inst) {
  const std::size_t max_n = inst.target_max;
  const TruncatedSeries d = general_log_coeffs(inst, kernels::Exec::serial);
  const auto x = factorial_scaled_logs(d, max_n);
  const bell::PartialTable table(max_n, x);
  CountTable out;
  out.values.reserve(max_n + 1);
  for (std::size_t n = 0; n <= max_n; ++n) {
    out.values.push_back(exact_div(table.complete(n), factorial(n), "count_general_bell"));
  }
  return out;
}

CountTable count_general_positive(const GeneralInstance& inst) {
  inst.validate();
  const std::size_t r = inst.terms.size();
  if (r > 20) throw InvalidInput("count_general_positive: at most 20 terms");
  const std::size_t max_n = inst.target_max;
  CountTable out;
  out.values.assign(max_n + 1, 0);
  for (std::uint64_t zeroed = 0; zeroed < (std::uint64_t{1} << r); ++zeroed) {
    GeneralInstance kept{{}, max_n};
    for (std::size_t l = 0; l < r; ++l) {
      if (!(zeroed >> l & 1)) kept.terms.push_back(inst.terms[l]);
    }
    const bool negative = std::popcount(zeroed) % 2 == 1;
    if (kept.terms.empty()) {
      // Only the all-zero tuple, which reaches n = 0.
      out.values[0] += negative ? -1 : 1;
      continue;
    }
    const CountTable nu = count_general_c5(kept);
    for (std::size_t n = 0; n <= max_n; ++n) {
      if (negative) {
        out.values[n] -= nu[n];
      } else {
        out.values[n] += nu[n];
      }
    }
  }
  return out;
}

std::vector<SearchHit> two_sided_search(const std::vector<TermFunction>& left, const TermFunction& right_form,
                                        std::uint64_t bound) {
  if (bound == 0) throw InvalidInput("two_sided_search: bound must be >= 1");
  const CountTable nu = count_general_positive(GeneralInstance{left, bound});
  std::vector<SearchHit> hits;
  for (auto n : right_form.image(bound)) {
    if (nu[n] != 0) hits.push_back({n, nu[n]});
  }
  return hits;
}

}  // namespace dcount
