#ifndef DCOUNT_GENERAL_COUNT_HPP
#define DCOUNT_GENERAL_COUNT_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "dcount/core.hpp"
#include "dcount/kernels.hpp"
#include "dcount/series.hpp"
#include "dcount/term_function.hpp"

namespace dcount {

/// g_1(k_1) + ... + g_r(k_r) = n over k_l >= 0, for n = 0..target_max.
struct GeneralInstance {
  std::vector<TermFunction> terms;
  std::size_t target_max = 0;

  void validate() const;
};

/// 0/1 series of a term: c_0 = 1, c_k = 1 iff k = g(m) for some m >= 1.
TruncatedSeries indicator_coeffs(const TermFunction& g, std::size_t order);

/// Recursion through the logarithmic polynomials:
///   nu(n) = (1/n) sum_l sum_{m=1}^n K_m(c_l1..c_lm) / (m-1)! nu(n-m).
CountTable count_general_re3(const GeneralInstance& inst);

/// Summed log-coefficients d_k = sum_l log(phi_l)_k, k = 0..N.
TruncatedSeries general_log_coeffs(const GeneralInstance& inst,
                                   kernels::Exec exec = kernels::Exec::automatic);

/// nu(n) = (1/n) sum_{k=1}^n k d_k nu(n-k). The default production path:
/// O(r N^2) rational operations.
CountTable count_general_c5(const GeneralInstance& inst,
                            kernels::Exec exec = kernels::Exec::automatic);

/// Closed form nu(n) = B_n(1! d_1, ..., n! d_n) / n! for one n <= target_max.
BigInt count_general_bell(const GeneralInstance& inst, std::size_t n);

/// The closed form evaluated for every n <= target_max off one Bell table.
CountTable count_general_bell_table(const GeneralInstance& inst);

struct SearchHit {
  std::uint64_t n;
  BigInt count;
  bool operator==(const SearchHit&) const = default;
};

/// Counts with every k_l >= 1, by inclusion-exclusion over which variables
/// are zero: sum over subsets S of (-1)^|S| nu_{terms not in S}(n).
/// Throws InvalidInput for more than 20 terms.
CountTable count_general_positive(const GeneralInstance& inst);

/// Nontrivial solutions of g_1(k_1) + ... + g_r(k_r) = h(m): every n = h(m)
/// <= bound (m >= 1) that the left side reaches with all k_l >= 1, paired
/// with that number of left-side solutions, ascending in n.
std::vector<SearchHit> two_sided_search(const std::vector<TermFunction>& left, const TermFunction& right_form,
                                        std::uint64_t bound);

}  // namespace dcount

#endif
