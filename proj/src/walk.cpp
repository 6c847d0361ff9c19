#include "dcount/walk.hpp"

#include "dcount/series.hpp"

namespace dcount {

void WalkSpec::validate() const {
  if (alpha <= 0) throw InvalidInput("walk: alpha must be positive");
  if (coeffs.empty()) throw InvalidInput("walk: need at least one step");
  for (auto a : coeffs) {
    if (a == 0) throw InvalidInput("walk: displacements must be positive");
  }
}

ScaledDistribution walk_distribution(const WalkSpec& spec, std::size_t max_n) {
  spec.validate();
  ScaledDistribution dist;
  auto& w = dist.weights;
  w.assign(max_n + 1, 0);
  w[0] = 1;
  BigRational sum;
  for (std::size_t n = 1; n <= max_n; ++n) {
    sum = 0;
    for (auto a : spec.coeffs) {
      if (a <= n) sum += w[n - a] * static_cast<unsigned long>(a);
    }
    w[n] = spec.alpha * sum / static_cast<unsigned long>(n);
  }
  return dist;
}

ScaledDistribution walk_convolution_oracle(const WalkSpec& spec, std::size_t max_n) {
  spec.validate();
  TruncatedSeries d(max_n);
  for (auto a : spec.coeffs) {
    if (a <= max_n) d[a] += spec.alpha;
  }
  return ScaledDistribution{series_exp(d).coeffs()};
}

}  // namespace dcount
